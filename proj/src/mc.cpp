#include "fdrelay/mc.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fdrelay/analytic.hpp"

namespace fdrelay {

int select_relay(const LinkSinrs& sinrs, SchemeKind kind) {
    if (sinrs.g_sr.empty()) {
        throw std::invalid_argument("select_relay: no relays");
    }
    int best = 0;
    double best_metric = -1.0;
    for (std::size_t k = 0; k < sinrs.g_sr.size(); ++k) {
        double metric = 0.0;
        switch (kind) {
            case SchemeKind::os_selection: metric = std::min(sinrs.g_sr[k], sinrs.g_rd[k]); break;
            case SchemeKind::ps_selection: metric = sinrs.g_sr[k]; break;
            case SchemeKind::multi_relay: throw std::invalid_argument("select_relay: not a selection scheme");
        }
        if (metric > best_metric) {
            best_metric = metric;
            best = static_cast<int>(k);
        }
    }
    return best;
}

TrialRunner::TrialRunner(const SystemConfig& cfg, SchemeSpec scheme)
    : cfg_(validate_config(cfg)),
      scheme_(scheme),
      eta_(eta(cfg)),
      log_target_(cfg.rate * (cfg.block_len + cfg.cp_len)),
      evaluator_(cfg.block_len, cfg.delays) {
    dset_.relays.reserve(static_cast<std::size_t>(cfg.n_relays));
}

bool TrialRunner::destination_outage(const DecodeSet& dset, double relay_power) {
    if (dset.empty()) {
        return sinrs_.g_sd < eta_;
    }
    const bool approx_outage = approx_rate(sinrs_, dset, cfg_, real_) < cfg_.rate;
    if (scheme_.mi_mode == MiMode::approximate) {
        return approx_outage;
    }
    // exact_rate <= approx_rate here, so an approximate outage is an exact one.
    if (approx_outage && evaluator_.mean_gain_matches_approx()) {
        return true;
    }
    return evaluator_.log_sum_below(real_, dset, cfg_.p_source, relay_power, log_target_);
}

bool TrialRunner::operator()(RandomStream& rng) {
    draw_realization(cfg_, rng, real_);
    if (scheme_.kind == SchemeKind::multi_relay) {
        link_sinrs(real_, cfg_, relay_interference_power(cfg_), cfg_.var_rsi + cfg_.var_iri, sinrs_);
        decode_set(sinrs_, eta_, dset_);
        const double p_r = relay_tx_power(cfg_, dset_.size());
        // Decode set is fixed; only the relay->destination SINRs change with P_R.
        for (std::size_t k = 0; k < sinrs_.g_rd.size(); ++k) {
            sinrs_.g_rd[k] = p_r * std::norm(real_.h_rd[k]);
        }
        sinrs_.relay_tx_power = p_r;
        return destination_outage(dset_, p_r);
    }

    const double p_r = cfg_.e_relay_budget;
    const double interference = cfg_.var_rsi + (cfg_.selection_iri ? cfg_.var_iri : 0.0);
    link_sinrs(real_, cfg_, p_r, interference, sinrs_);
    const int chosen = select_relay(sinrs_, scheme_.kind);
    dset_.relays.clear();
    if (sinrs_.g_sr[static_cast<std::size_t>(chosen)] >= eta_) {
        dset_.relays.push_back(chosen);
    }
    return destination_outage(dset_, p_r);
}

bool run_trial(const SystemConfig& cfg, SchemeSpec scheme, RandomStream& rng) {
    TrialRunner runner(cfg, scheme);
    return runner(rng);
}

OutageEstimate estimate_outage(const SystemConfig& cfg, SchemeSpec scheme, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    validate_config(cfg);
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        TrialRunner runner(cfg, scheme);
        std::uint64_t outages = 0;
        for (std::uint64_t t = begin; t < end; ++t) {
            RandomStream rng(seed, t);
            outages += runner(rng) ? 1 : 0;
        }
        return outages;
    };

    if (workers == 1) {
        return OutageEstimate::from_counts(count_range(0, trials), trials);
    }
    std::vector<std::uint64_t> counts(workers, 0);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = trials * w / workers;
            const std::uint64_t end = trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] { counts[w] = count_range(begin, end); });
        }
    }
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    return OutageEstimate::from_counts(total, trials);
}

}  // namespace fdrelay
