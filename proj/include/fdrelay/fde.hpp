#pragma once

#include <vector>

#include "fdrelay/channel.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

/// Per-bin gains of the CP-circulant end-to-end channel after the DFT.
struct BinSpectrum {
    std::vector<cplx> lambda;
    std::vector<double> gamma;  // |lambda_i|^2
};

// lambda_i = sqrt(P_S) h_sd + sum_{k in dset} sqrt(P_R) h_rd[k] exp(-j 2 pi i tau_k / T),
// i = 0..T-1.
BinSpectrum lambda_spectrum(const ChannelRealization& real, const DecodeSet& dset, const SystemConfig& cfg,
                            double relay_power);

/// (1 / (T + cp)) sum_i log2(1 + gamma_i).
double exact_rate(const BinSpectrum& spec, const SystemConfig& cfg);

/// Rate with the bin cross terms dropped: T/(T+cp) log2(1 + g_sd + relayed),
/// relayed = sum of g_rd over dset (asynchronous) or P_R |sum h_rd|^2 over
/// dset (synchronous).
double approx_rate(const LinkSinrs& sinrs, const DecodeSet& dset, const SystemConfig& cfg,
                   const ChannelRealization& real);

/// Evaluates spectra for a fixed (T, delays) pair with a precomputed twiddle
/// table, so each bin costs one complex multiply-add per active relay.
class SpectrumEvaluator {
public:
    SpectrumEvaluator(int block_len, std::vector<int> delays);

    void spectrum(const ChannelRealization& real, const DecodeSet& dset, double p_source, double relay_power,
                  BinSpectrum& out) const;

    /// True iff sum_i log2(1 + gamma_i) < target. Stops as soon as the partial
    /// sum reaches the target, so the result equals the full-sum comparison.
    bool log_sum_below(const ChannelRealization& real, const DecodeSet& dset, double p_source,
                       double relay_power, double target) const;

    /// True when the bin average of gamma_i equals the SINR inside
    /// approx_rate for every decode set: all delays nonzero mod T and either
    /// pairwise distinct mod T (asynchronous) or all equal (synchronous).
    /// approx_rate is then an upper bound on the exact rate by concavity.
    [[nodiscard]] bool mean_gain_matches_approx() const { return mean_gain_matches_approx_; }

private:
    int block_len_;
    std::vector<int> delays_;
    std::vector<cplx> twiddle_;  // exp(-j 2 pi m / T)
    bool mean_gain_matches_approx_ = false;
};

}  // namespace fdrelay
