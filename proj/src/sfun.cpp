#include "fdrelay/sfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdrelay {

namespace {

constexpr int kMaxSeriesTerms = 4000;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void check_order(int n) {
    if (n < 1) {
        throw std::domain_error("incomplete gamma order must be >= 1");
    }
}

// sum_k (-x)^k / (k! (n+k)) for x <= 0: every term is non-negative.
double scaled_series_negative(int n, double x) {
    const double y = -x;
    double term = 1.0;  // y^k / k!
    double sum = 1.0 / n;
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        term *= y / k;
        const double add = term / (n + k);
        sum += add;
        if (add <= sum * 1e-17) {
            break;
        }
    }
    return sum;
}

// e^(-x) sum_k x^k / (n (n+1) ... (n+k)) for x > 0: every term is positive.
double scaled_series_positive(int n, double x) {
    double term = 1.0 / n;
    double sum = term;
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        term *= x / (n + k);
        sum += term;
        if (term <= sum * 1e-17) {
            break;
        }
    }
    return std::exp(-x) * sum;
}

// e^(-x) sum_{m<n} x^m / m!, the Poisson tail complement.
double upper_regularized(int n, double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < n; ++m) {
        term *= x / m;
        sum += term;
    }
    return std::exp(-x) * sum;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

double lower_incomplete_gamma_scaled(int n, double x) {
    check_order(n);
    if (x <= 0.0) {
        return scaled_series_negative(n, x);
    }
    if (x < n + 1.0) {
        return scaled_series_positive(n, x);
    }
    return factorial(n - 1) * (1.0 - upper_regularized(n, x)) / std::pow(x, n);
}

double lower_incomplete_gamma_int(int n, double x) {
    check_order(n);
    if (x == 0.0) {
        return 0.0;
    }
    if (x >= n + 1.0) {
        return factorial(n - 1) * (1.0 - upper_regularized(n, x));
    }
    return std::pow(x, n) * lower_incomplete_gamma_scaled(n, x);
}

double regularized_lower_gamma_int(int n, double x) {
    check_order(n);
    if (x >= n + 1.0) {
        return 1.0 - upper_regularized(n, x);
    }
    return lower_incomplete_gamma_int(n, x) / factorial(n - 1);
}

double erlang_cdf(int k, double mean_scale, double x) {
    if (!(mean_scale > 0.0)) {
        throw std::domain_error("erlang_cdf: mean_scale must be positive");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    return regularized_lower_gamma_int(k, x / mean_scale);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t mix = seed;
    const std::uint64_t a = splitmix64(mix);
    mix = a ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    for (auto& word : s_) {
        word = splitmix64(mix);
    }
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::complex<double> sample_complex_gaussian(const ComplexGaussianSampler& sampler, RandomStream& rng) {
    const double u_mod = rng.uniform();
    const double u_phase = rng.uniform();
    if (sampler.variance == 0.0) {
        return {0.0, 0.0};
    }
    const double modulus = std::sqrt(-sampler.variance * std::log(u_mod));
    const double phase = 2.0 * std::numbers::pi * u_phase;
    return std::polar(modulus, phase);
}

}  // namespace fdrelay
