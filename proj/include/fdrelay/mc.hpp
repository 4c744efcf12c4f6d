#pragma once

#include <cstdint>

#include "fdrelay/channel.hpp"
#include "fdrelay/fde.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

struct SchemeSpec {
    SchemeKind kind = SchemeKind::multi_relay;
    MiMode mi_mode = MiMode::approximate;
};

/// OS: argmax_k min(g_sr[k], g_rd[k]); PS: argmax_k g_sr[k]. Lowest index
/// wins ties. Returns a 0-based index.
int select_relay(const LinkSinrs& sinrs, SchemeKind kind);

/// Runs single trials for one (cfg, scheme) pair, reusing scratch buffers.
/// Not thread-safe; use one instance per worker.
class TrialRunner {
public:
    TrialRunner(const SystemConfig& cfg, SchemeSpec scheme);

    /// Draws one block from `rng` and returns true on outage.
    bool operator()(RandomStream& rng);

private:
    bool destination_outage(const DecodeSet& dset, double relay_power);

    SystemConfig cfg_;
    SchemeSpec scheme_;
    double eta_;
    double log_target_;  // r (T + cp)
    SpectrumEvaluator evaluator_;
    ChannelRealization real_;
    LinkSinrs sinrs_;
    DecodeSet dset_;
};

bool run_trial(const SystemConfig& cfg, SchemeSpec scheme, RandomStream& rng);

/// Trial t draws from RandomStream(seed, t) and the per-worker outage counts
/// are summed, so the estimate depends only on (cfg, scheme, trials, seed).
/// workers == 0 selects std::thread::hardware_concurrency().
OutageEstimate estimate_outage(const SystemConfig& cfg, SchemeSpec scheme, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers = 0);

}  // namespace fdrelay
