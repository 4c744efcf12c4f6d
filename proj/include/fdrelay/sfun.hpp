#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace fdrelay {

// Integer-order lower incomplete gamma function gamma(n, x) = int_0^x t^(n-1) e^(-t) dt,
// extended to negative x by analytic continuation (n-1)! (1 - e^(-x) sum_{m<n} x^m/m!).
// Values are accurate to a few ulp for x in [-700, +inf); beyond -700 the
// result overflows. Throws std::domain_error for n < 1.
double lower_incomplete_gamma_int(int n, double x);

// gamma(n, x) / x^n, finite and smooth through x = 0 (where it equals 1/n).
// Evaluated without cancellation for all real x.
double lower_incomplete_gamma_scaled(int n, double x);

// gamma(n, x) / (n-1)!.
double regularized_lower_gamma_int(int n, double x);

// CDF at x of the sum of k i.i.d. exponentials with mean `mean_scale`.
double erlang_cdf(int k, double mean_scale, double x);

/// Deterministic random stream. Stream (seed, index) always yields the same
/// sequence on every platform: a splitmix64 mix of the pair seeds a
/// xoshiro256** generator.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0);

    std::uint64_t next_u64();
    /// Uniform in (0, 1]; never returns 0.
    double uniform();

private:
    std::array<std::uint64_t, 4> s_{};
};

/// CN(0, variance) sampler. Draws the modulus from the exponential law of
/// |h|^2 and an independent uniform phase, which gives independent real and
/// imaginary parts of variance variance/2 each.
struct ComplexGaussianSampler {
    double variance = 1.0;
};

std::complex<double> sample_complex_gaussian(const ComplexGaussianSampler& sampler, RandomStream& rng);

}  // namespace fdrelay
