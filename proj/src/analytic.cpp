#include "fdrelay/analytic.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fdrelay/sfun.hpp"

namespace fdrelay {

namespace {

double clamp_probability(double p, const char* where) {
    if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
        std::clog << "fdrelay: " << where << " produced out-of-range probability " << p << '\n';
    }
    if (std::isnan(p)) {
        return p;
    }
    return std::min(1.0, std::max(0.0, p));
}

double exp_cdf(double mean, double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (mean <= 0.0) {
        return 1.0;
    }
    return -std::expm1(-x / mean);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void check_decoding(int decoding, const SystemConfig& cfg) {
    if (decoding < 1 || decoding > cfg.n_relays) {
        throw std::domain_error("decoding relay count outside [1, N]");
    }
}

}  // namespace

double eta(double rate, int block_len, int cp_len) {
    const double exponent = rate * (static_cast<double>(block_len + cp_len) / block_len);
    return std::expm1(exponent * std::numbers::ln2);
}

double eta(const SystemConfig& cfg) { return eta(cfg.rate, cfg.block_len, cfg.cp_len); }

double relay_tx_power(const SystemConfig& cfg, int decoding) {
    if (cfg.relay_power_policy == RelayPowerPolicy::fixed_per_relay || decoding <= 0) {
        return cfg.e_relay_budget;
    }
    return cfg.e_relay_budget / decoding;
}

double relay_interference_power(const SystemConfig& cfg) { return relay_tx_power(cfg, cfg.n_relays); }

LinkOutageProbs link_outages(const SystemConfig& cfg, double relay_interference_power) {
    LinkOutageProbs out;
    out.eta = eta(cfg);
    out.gbar_sd = cfg.p_source * cfg.var_sd;
    out.gbar_rd = relay_interference_power * cfg.var_rd;
    out.gbar_syn = out.gbar_rd * cfg.n_relays;
    out.p_sd = exp_cdf(out.gbar_sd, out.eta);
    const double noise = relay_interference_power * (cfg.var_rsi + cfg.var_iri) + 1.0;
    out.p_sr = exp_cdf(cfg.p_source * cfg.var_sr, out.eta * noise);
    return out;
}

double outage_direct_plus_erlang(double a, double b, int branches, double threshold) {
    if (branches < 1) {
        throw std::domain_error("branches < 1");
    }
    if (threshold <= 0.0) {
        return 0.0;
    }
    if (b <= 0.0) {
        return exp_cdf(a, threshold);
    }
    if (a <= 0.0) {
        return erlang_cdf(branches, b, threshold);
    }
    const int n = branches;
    if (std::abs(a - b) <= 1e-9 * a) {
        return clamp_probability(regularized_lower_gamma_int(n + 1, threshold / a), "equal-scale outage");
    }
    // Closed form
    //   gamma(n, t/b)/(n-1)! - e^(-t/a)/(n-1)! (a/(a-b))^n gamma(n, t (a-b)/(a b)).
    // With x = t (a-b)/(a b), (a/(a-b))^n x^n = (t/b)^n, so the second term is
    // evaluated as e^(-t/a) (t/b)^n [gamma(n, x)/x^n] / (n-1)!, which has no
    // large factor to cancel when a and b are close.
    const double x = threshold * (a - b) / (a * b);
    const double y = threshold / b;
    const double first = regularized_lower_gamma_int(n, y);
    const double second =
        std::exp(-threshold / a + n * std::log(y)) * lower_incomplete_gamma_scaled(n, x) / factorial(n - 1);
    return clamp_probability(first - second, "conditional outage");
}

double p_cond_async(int decoding, const SystemConfig& cfg) {
    check_decoding(decoding, cfg);
    const double gbar_sd = cfg.p_source * cfg.var_sd;
    const double gbar_rd = relay_tx_power(cfg, decoding) * cfg.var_rd;
    return outage_direct_plus_erlang(gbar_sd, gbar_rd, decoding, eta(cfg));
}

double p_cond_sync(int decoding, const SystemConfig& cfg) {
    check_decoding(decoding, cfg);
    const double gbar_sd = cfg.p_source * cfg.var_sd;
    const double gbar_syn = relay_tx_power(cfg, decoding) * decoding * cfg.var_rd;
    return outage_direct_plus_erlang(gbar_sd, gbar_syn, 1, eta(cfg));
}

double combine_outage(double p_sd, double p_sr, std::span<const double> p_cond, CombineMethod method) {
    const int n = static_cast<int>(p_cond.size());
    if (method == CombineMethod::binomial) {
        double total = p_sd * std::pow(p_sr, n);
        double binom = 1.0;
        for (int l = 1; l <= n; ++l) {
            binom = binom * (n - l + 1) / l;
            total += binom * std::pow(1.0 - p_sr, l) * std::pow(p_sr, n - l) * p_cond[static_cast<std::size_t>(l - 1)];
        }
        return clamp_probability(total, "total outage");
    }
    if (n > 20) {
        throw std::domain_error("subset enumeration limited to N <= 20");
    }
    double total = 0.0;
    const std::uint32_t subsets = 1U << n;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        double weight = 1.0;
        int decoded = 0;
        for (int k = 0; k < n; ++k) {
            if (mask & (1U << k)) {
                weight *= 1.0 - p_sr;
                ++decoded;
            } else {
                weight *= p_sr;
            }
        }
        total += weight * (decoded == 0 ? p_sd : p_cond[static_cast<std::size_t>(decoded - 1)]);
    }
    return clamp_probability(total, "total outage");
}

double total_outage(const SystemConfig& cfg, SyncMode mode, CombineMethod method) {
    const LinkOutageProbs links = link_outages(cfg, relay_interference_power(cfg));
    std::vector<double> p_cond(static_cast<std::size_t>(cfg.n_relays));
    for (int l = 1; l <= cfg.n_relays; ++l) {
        p_cond[static_cast<std::size_t>(l - 1)] =
            mode == SyncMode::asynchronous ? p_cond_async(l, cfg) : p_cond_sync(l, cfg);
    }
    return combine_outage(links.p_sd, links.p_sr, p_cond, method);
}

}  // namespace fdrelay
