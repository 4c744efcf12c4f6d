#include "fdrelay/fde.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace fdrelay {

SpectrumEvaluator::SpectrumEvaluator(int block_len, std::vector<int> delays)
    : block_len_(block_len), delays_(std::move(delays)), twiddle_(static_cast<std::size_t>(block_len)) {
    for (int m = 0; m < block_len_; ++m) {
        twiddle_[static_cast<std::size_t>(m)] = std::polar(1.0, -2.0 * std::numbers::pi * m / block_len_);
    }
    std::set<int> residues;
    bool nonzero = true;
    for (int d : delays_) {
        nonzero = nonzero && d % block_len_ != 0;
        residues.insert(d % block_len_);
    }
    const bool distinct = residues.size() == delays_.size();
    const bool common = residues.size() == 1;
    mean_gain_matches_approx_ = nonzero && (distinct || common);
}

void SpectrumEvaluator::spectrum(const ChannelRealization& real, const DecodeSet& dset, double p_source,
                                 double relay_power, BinSpectrum& out) const {
    const auto t = static_cast<std::size_t>(block_len_);
    out.lambda.assign(t, std::sqrt(p_source) * real.h_sd);
    out.gamma.resize(t);
    const double amp = std::sqrt(relay_power);
    for (int k : dset.relays) {
        const cplx tap = amp * real.h_rd[static_cast<std::size_t>(k)];
        const auto step = static_cast<std::size_t>(delays_[static_cast<std::size_t>(k)] % block_len_);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < t; ++i) {
            out.lambda[i] += tap * twiddle_[idx];
            idx += step;
            if (idx >= t) {
                idx -= t;
            }
        }
    }
    for (std::size_t i = 0; i < t; ++i) {
        out.gamma[i] = std::norm(out.lambda[i]);
    }
}

bool SpectrumEvaluator::log_sum_below(const ChannelRealization& real, const DecodeSet& dset, double p_source,
                                      double relay_power, double target) const {
    constexpr std::size_t kMaxTaps = 64;
    const auto t = static_cast<std::size_t>(block_len_);
    const cplx direct = std::sqrt(p_source) * real.h_sd;
    const double amp = std::sqrt(relay_power);

    const std::size_t taps = dset.relays.size();
    if (taps > kMaxTaps) {
        BinSpectrum spec;
        spectrum(real, dset, p_source, relay_power, spec);
        double sum = 0.0;
        for (double g : spec.gamma) {
            sum += std::log2(1.0 + g);
        }
        return sum < target;
    }
    cplx coeff[kMaxTaps];
    std::size_t step[kMaxTaps];
    std::size_t idx[kMaxTaps] = {};
    for (std::size_t j = 0; j < taps; ++j) {
        const auto k = static_cast<std::size_t>(dset.relays[j]);
        coeff[j] = amp * real.h_rd[k];
        step[j] = static_cast<std::size_t>(delays_[k] % block_len_);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        cplx lambda = direct;
        for (std::size_t j = 0; j < taps; ++j) {
            lambda += coeff[j] * twiddle_[idx[j]];
            idx[j] += step[j];
            if (idx[j] >= t) {
                idx[j] -= t;
            }
        }
        sum += std::log2(1.0 + std::norm(lambda));
        if (sum >= target) {
            return false;
        }
    }
    return sum < target;
}

BinSpectrum lambda_spectrum(const ChannelRealization& real, const DecodeSet& dset, const SystemConfig& cfg,
                            double relay_power) {
    BinSpectrum out;
    SpectrumEvaluator(cfg.block_len, cfg.delays).spectrum(real, dset, cfg.p_source, relay_power, out);
    return out;
}

double exact_rate(const BinSpectrum& spec, const SystemConfig& cfg) {
    double sum = 0.0;
    for (double g : spec.gamma) {
        sum += std::log2(1.0 + g);
    }
    return sum / (cfg.block_len + cfg.cp_len);
}

double approx_rate(const LinkSinrs& sinrs, const DecodeSet& dset, const SystemConfig& cfg,
                   const ChannelRealization& real) {
    double relayed = 0.0;
    if (cfg.sync_mode == SyncMode::asynchronous) {
        for (int k : dset.relays) {
            relayed += sinrs.g_rd[static_cast<std::size_t>(k)];
        }
    } else {
        cplx h_syn{};
        for (int k : dset.relays) {
            h_syn += real.h_rd[static_cast<std::size_t>(k)];
        }
        relayed = sinrs.relay_tx_power * std::norm(h_syn);
    }
    const double frac = static_cast<double>(cfg.block_len) / (cfg.block_len + cfg.cp_len);
    return frac * std::log2(1.0 + sinrs.g_sd + relayed);
}

}  // namespace fdrelay
