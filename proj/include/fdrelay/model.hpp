#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdrelay {

/// Raised when a configuration or sweep description violates an invariant.
/// The message names the violated invariant.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SyncMode { asynchronous, synchronous };
enum class MiMode { exact, approximate };

/// How relay transmit power is derived from the relay budget E_R.
///  shared_budget:   decoding relays split E_R equally (P_R = E_R / L); the
///                   interference seen at a relay input uses E_R / N.
///  fixed_per_relay: every relay transmits with E_R.
enum class RelayPowerPolicy { shared_budget, fixed_per_relay };

/// Scenario parameters. All powers and variances are linear.
struct SystemConfig {
    int n_relays = 1;
    double p_source = 1.0;
    double e_relay_budget = 1.0;
    double var_sd = 1.0;
    double var_sr = 1.0;
    double var_rd = 1.0;
    double var_rsi = 1.0;
    double var_iri = 1.0;
    double rate = 2.0;
    int block_len = 500;
    int cp_len = 10;
    std::vector<int> delays{1};
    SyncMode sync_mode = SyncMode::asynchronous;
    MiMode mi_mode = MiMode::approximate;
    RelayPowerPolicy relay_power_policy = RelayPowerPolicy::shared_budget;
    // Whether the single active relay of a selection scheme also sees IRI.
    bool selection_iri = false;

    bool operator==(const SystemConfig&) const = default;
};

/// Checks every invariant of `cfg` and returns it unchanged. Throws
/// ConfigError naming the first violated invariant.
SystemConfig validate_config(const SystemConfig& cfg);

/// tau_k = k for asynchronous mode, tau_k = 1 for every relay in synchronous mode.
std::vector<int> default_delays(int n_relays, SyncMode mode);

double db_to_linear(double x_db);
double linear_to_db(double x);

struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outage_count = 0;
    double std_error = 0.0;  // binomial standard error sqrt(p(1-p)/trials)

    static OutageEstimate from_counts(std::uint64_t outages, std::uint64_t trials);
};

enum class SchemeKind { multi_relay, os_selection, ps_selection };

/// Sweepable SystemConfig fields.
enum class SweepParam { p_source, e_relay_budget, var_sd, var_sr, var_rd, var_rsi, var_iri, rate };

SweepParam parse_sweep_param(const std::string& name);
std::string to_string(SweepParam p);
std::string to_string(SchemeKind k);
std::string to_string(SyncMode m);
std::string to_string(MiMode m);
std::string to_string(RelayPowerPolicy p);
SchemeKind parse_scheme(const std::string& s);
SyncMode parse_sync_mode(const std::string& s);
MiMode parse_mi_mode(const std::string& s);
RelayPowerPolicy parse_relay_power_policy(const std::string& s);

/// True for parameters whose values are expressed in dB at the boundary.
bool is_db_param(SweepParam p);

/// Applies one swept (linear) value to a copy of `cfg`.
SystemConfig with_param(SystemConfig cfg, SweepParam p, double linear_value);

struct SweepSpec {
    SystemConfig base;
    SweepParam param = SweepParam::var_iri;
    std::vector<double> values;  // linear unless values_in_db
    bool values_in_db = true;
    // Relay counts to evaluate; empty means {base.n_relays}. Delays are
    // regenerated with default_delays when the count differs from base.
    std::vector<int> relay_counts;
    std::vector<SchemeKind> schemes{SchemeKind::multi_relay};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

struct SweepRow {
    double param = 0.0;     // linear
    double param_db = 0.0;
    SchemeKind scheme = SchemeKind::multi_relay;
    int n_relays = 1;
    SyncMode mode = SyncMode::asynchronous;
    std::optional<double> analytic_p;
    OutageEstimate mc;
    std::uint64_t seed = 0;
};

struct SweepResult {
    SweepParam param = SweepParam::var_iri;
    std::vector<SweepRow> rows;
};

/// Checks the sweep description (non-empty strictly monotone values, valid
/// base, at least one scheme, trials >= 1).
void validate_sweep(const SweepSpec& spec);

}  // namespace fdrelay
