#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdrelay/model.hpp"

namespace fdrelay {

/// Built-in scenario sets reproducing the published outage curves.
///  fig2/fig3: outage vs var_iri, N in {5, 10}, async / sync.
///  fig4/fig5: outage vs var_sr, N = 10, var_rd = 10 dB / 0 dB.
struct Preset {
    std::string name;
    SweepSpec sweep;
};

Preset make_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Switches synchronisation mode and regenerates the default delay profile.
SystemConfig with_sync_mode(SystemConfig cfg, SyncMode mode);

/// Rows are ordered by relay count, then swept value, then scheme, exactly
/// as listed in `spec`. The analytic column is filled for multi-relay rows
/// only, and every MC point reuses spec.seed.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 0);

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(const std::string& s);

/// Scheme column value, e.g. "multi/N=10".
std::string scheme_label(SchemeKind kind, int n_relays);

inline constexpr const char* kCsvHeader = "param,param_db,scheme,mode,analytic_p,mc_p,mc_stderr,trials,seed";

void write_csv(const SweepResult& result, std::ostream& os);
void write_json(const SweepResult& result, std::ostream& os);
std::string to_csv(const SweepResult& result);
std::string to_json(const SweepResult& result);

/// Writes to `path`, or to stdout when path is "-". Throws std::runtime_error
/// on I/O failure.
void emit(const SweepResult& result, OutputFormat format, const std::string& path);

/// Parses a scenario document. Power and variance fields are given either
/// linear (`p_source`) or in dB (`p_source_db`). An optional "sweep" object
/// describes the sweep; without it the result sweeps the single value of
/// var_iri already in the config.
SweepSpec sweep_from_json(const std::string& text);
SystemConfig config_from_json(const std::string& text);

}  // namespace fdrelay
