#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "fdrelay/analytic.hpp"
#include "fdrelay/fde.hpp"
#include "oracles.hpp"

using namespace fdrelay;

namespace {

SystemConfig small_block(int t, std::vector<int> delays, SyncMode mode = SyncMode::asynchronous) {
    SystemConfig cfg;
    cfg.block_len = t;
    cfg.n_relays = static_cast<int>(delays.size());
    cfg.delays = std::move(delays);
    cfg.cp_len = *std::max_element(cfg.delays.begin(), cfg.delays.end());
    cfg.sync_mode = mode;
    cfg.p_source = 1.0;
    return cfg;
}

ChannelRealization gains(cplx sd, std::vector<cplx> rd) {
    ChannelRealization real;
    real.h_sd = sd;
    real.h_sr.assign(rd.size(), cplx{});
    real.h_rd = std::move(rd);
    return real;
}

}  // namespace

TEST_SUITE("fde") {
    TEST_CASE("empty decode set gives a flat spectrum") {
        SystemConfig cfg = small_block(8, {1, 2});
        cfg.p_source = 4.0;
        const auto spec = lambda_spectrum(gains(1.0, {0.3, 0.7}), DecodeSet{}, cfg, 1.0);
        for (const auto& l : spec.lambda) CHECK(l == cplx(2.0, 0.0));
    }

    TEST_CASE("four-bin single relay spectrum") {
        const SystemConfig cfg = small_block(4, {1});
        const auto spec = lambda_spectrum(gains(1.0, {1.0}), DecodeSet{{0}}, cfg, 1.0);
        const std::vector<cplx> expect{{2, 0}, {1, -1}, {0, 0}, {1, 1}};
        const std::vector<double> gamma{4, 2, 0, 2};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(spec.lambda[i] - expect[i]) < 1e-15);
            CHECK(spec.gamma[i] == doctest::Approx(gamma[i]).epsilon(1e-14));
        }
        // Explicit 4x4 circulant with first column [1, 1, 0, 0]
        const auto ev = oracle::circulant_eigenvalues({1.0, 1.0, 0.0, 0.0});
        CHECK(oracle::multiset_distance(spec.lambda, ev) < 1e-12);

        SystemConfig cp1 = cfg;
        cp1.cp_len = 1;
        CHECK(exact_rate(spec, cp1) == doctest::Approx(1.09837061926593).epsilon(1e-13));
    }

    TEST_CASE("synchronous relays collapse to one equivalent relay") {
        const cplx a(0.4, -1.1), b(-0.2, 0.5);
        const SystemConfig two = small_block(16, {2, 2}, SyncMode::synchronous);
        const SystemConfig one = small_block(16, {2}, SyncMode::synchronous);
        const auto s2 = lambda_spectrum(gains(0.8, {a, b}), DecodeSet{{0, 1}}, two, 0.6);
        const auto s1 = lambda_spectrum(gains(0.8, {a + b}), DecodeSet{{0}}, one, 0.6);
        for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(s2.lambda[i] - s1.lambda[i]) < 1e-14);
    }

    TEST_CASE("spectrum equals dft of impulse response and circulant eigen-pairs") {
        RandomStream rng(2024);
        for (int t : {4, 8, 16}) {
            for (int rep = 0; rep < 20; ++rep) {
                const int n = 1 + rep % std::min(4, t - 1);
                std::vector<int> delays(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) delays[static_cast<std::size_t>(k)] = k + 1 + (rep % 2);
                if (delays.back() >= t) continue;
                SystemConfig cfg = small_block(t, delays);
                cfg.p_source = 2.0;
                const double p_r = 0.7;
                ChannelRealization real;
                real.h_sd = sample_complex_gaussian({1.0}, rng);
                std::vector<cplx> rd;
                for (int k = 0; k < n; ++k) rd.push_back(sample_complex_gaussian({3.0}, rng));
                real = gains(real.h_sd, rd);
                DecodeSet all;
                for (int k = 0; k < n; ++k) all.relays.push_back(k);

                const auto spec = lambda_spectrum(real, all, cfg, p_r);
                std::vector<cplx> col(static_cast<std::size_t>(t), cplx{});
                col[0] = std::sqrt(cfg.p_source) * real.h_sd;
                for (int k = 0; k < n; ++k) col[static_cast<std::size_t>(delays[static_cast<std::size_t>(k)])] += std::sqrt(p_r) * rd[static_cast<std::size_t>(k)];
                for (int i = 0; i < t; ++i) {
                    cplx dft{};
                    for (int d = 0; d < t; ++d) dft += col[static_cast<std::size_t>(d)] * std::polar(1.0, -2.0 * std::numbers::pi * i * d / t);
                    CHECK(std::abs(dft - spec.lambda[static_cast<std::size_t>(i)]) < 1e-12);
                }
                CHECK(oracle::multiset_distance(spec.lambda, oracle::circulant_eigenvalues(col)) < 1e-12);
            }
        }
    }

    TEST_CASE("cross terms vanish over a block") {
        for (int t : {4, 7, 16, 500}) {
            for (int tau = 1; tau < 2 * t; ++tau) {
                if (tau % t == 0) continue;
                for (double theta : {0.0, 0.3, 1.7, -2.9}) {
                    double sum = 0.0;
                    for (int i = 0; i < t; ++i) sum += std::cos(2.0 * std::numbers::pi * i * tau / t + theta);
                    CHECK(std::abs(sum) < 1e-9);
                }
                if (t == 500 && tau > 20) break;
            }
        }
    }

    TEST_CASE("parseval identity in asynchronous mode") {
        RandomStream rng(11);
        const SystemConfig cfg = small_block(64, {1, 3, 4, 9});
        for (int rep = 0; rep < 200; ++rep) {
            ChannelRealization real = draw_realization(cfg, rng);
            const auto spec = lambda_spectrum(real, DecodeSet{{0, 1, 2, 3}}, cfg, 0.4);
            double sum = 0.0;
            for (double g : spec.gamma) sum += g;
            double expect = cfg.p_source * std::norm(real.h_sd);
            for (const auto& h : real.h_rd) expect += 0.4 * std::norm(h);
            CHECK(sum == doctest::Approx(64.0 * expect).epsilon(1e-11));
        }
    }

    TEST_CASE("exact and approximate rate examples") {
        SystemConfig cfg;
        cfg.block_len = 500;
        cfg.cp_len = 10;
        BinSpectrum flat{{}, std::vector<double>(500, 3.0)};
        CHECK(exact_rate(flat, cfg) == doctest::Approx(1000.0 / 510.0).epsilon(1e-14));
        BinSpectrum zero{{}, std::vector<double>(500, 0.0)};
        CHECK(exact_rate(zero, cfg) == 0.0);

        LinkSinrs s;
        s.g_sd = 1.0;
        s.g_rd = {2.0};
        s.relay_tx_power = 1.0;
        ChannelRealization real = gains(1.0, {1.0});
        CHECK(approx_rate(s, DecodeSet{}, cfg, real) == doctest::Approx(500.0 / 510.0).epsilon(1e-14));
        CHECK(approx_rate(s, DecodeSet{{0}}, cfg, real) == doctest::Approx(1000.0 / 510.0).epsilon(1e-14));

        SystemConfig sync = cfg;
        sync.n_relays = 2;
        sync.delays = {1, 1};
        sync.sync_mode = SyncMode::synchronous;
        LinkSinrs s2;
        s2.g_sd = 1.0;
        s2.g_rd = {1.0, 1.0};
        s2.relay_tx_power = 1.0;
        const auto h = gains(1.0, {1.0, -1.0});
        CHECK(approx_rate(s2, DecodeSet{{0, 1}}, sync, h) == doctest::Approx(500.0 / 510.0).epsilon(1e-14));
    }

    TEST_CASE("early-exit log sum matches the full exact rate") {
        SystemConfig cfg;
        cfg.n_relays = 3;
        cfg.delays = {1, 2, 3};
        cfg.p_source = 1.5;
        const SpectrumEvaluator ev(cfg.block_len, cfg.delays);
        RandomStream rng(8);
        for (int rep = 0; rep < 300; ++rep) {
            const auto real = draw_realization(cfg, rng);
            const DecodeSet all{{0, 1, 2}};
            const double rate = exact_rate(lambda_spectrum(real, all, cfg, 0.5), cfg);
            const double target = cfg.rate * (cfg.block_len + cfg.cp_len);
            CHECK(ev.log_sum_below(real, all, cfg.p_source, 0.5, target) == (rate < cfg.rate));
        }
    }

    TEST_CASE("exact rate never exceeds the approximation") {
        // Fig. 2 operating point, N = 10, IRI = 0 dB, decode sets drawn as in a trial.
        SystemConfig cfg;
        cfg.n_relays = 10;
        cfg.delays = default_delays(10, SyncMode::asynchronous);
        cfg.p_source = db_to_linear(5.0);
        cfg.e_relay_budget = db_to_linear(5.0);
        cfg.var_rd = db_to_linear(10.0);
        cfg.var_sr = db_to_linear(8.0);
        RandomStream rng(99);
        for (int rep = 0; rep < 2000; ++rep) {
            const auto real = draw_realization(cfg, rng);
            const auto dset = decode_set(link_sinrs(real, cfg, relay_interference_power(cfg)), eta(cfg));
            const double p_r = relay_tx_power(cfg, dset.size());
            const double exact = exact_rate(lambda_spectrum(real, dset, cfg, p_r), cfg);
            const double approx = approx_rate(link_sinrs(real, cfg, p_r), dset, cfg, real);
            CHECK(exact <= approx * (1.0 + 1e-12));
        }
    }
}
