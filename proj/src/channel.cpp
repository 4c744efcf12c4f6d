#include "fdrelay/channel.hpp"

#include <stdexcept>

namespace fdrelay {

ChannelRealization draw_realization(const SystemConfig& cfg, RandomStream& rng) {
    ChannelRealization out;
    draw_realization(cfg, rng, out);
    return out;
}

void draw_realization(const SystemConfig& cfg, RandomStream& rng, ChannelRealization& out) {
    const auto n = static_cast<std::size_t>(cfg.n_relays);
    out.h_sr.resize(n);
    out.h_rd.resize(n);
    out.h_sd = sample_complex_gaussian({cfg.var_sd}, rng);
    const ComplexGaussianSampler sr{cfg.var_sr};
    const ComplexGaussianSampler rd{cfg.var_rd};
    for (auto& h : out.h_sr) {
        h = sample_complex_gaussian(sr, rng);
    }
    for (auto& h : out.h_rd) {
        h = sample_complex_gaussian(rd, rng);
    }
}

LinkSinrs link_sinrs(const ChannelRealization& real, const SystemConfig& cfg, double relay_power) {
    LinkSinrs out;
    link_sinrs(real, cfg, relay_power, cfg.var_rsi + cfg.var_iri, out);
    return out;
}

void link_sinrs(const ChannelRealization& real, const SystemConfig& cfg, double relay_power,
                double interference_var, LinkSinrs& out) {
    if (relay_power < 0.0) {
        throw std::invalid_argument("relay_power < 0");
    }
    const std::size_t n = real.h_sr.size();
    out.relay_tx_power = relay_power;
    out.g_sd = cfg.p_source * std::norm(real.h_sd);
    out.g_sr.resize(n);
    out.g_rd.resize(n);
    const double denom = relay_power * interference_var + 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        out.g_sr[k] = cfg.p_source * std::norm(real.h_sr[k]) / denom;
        out.g_rd[k] = relay_power * std::norm(real.h_rd[k]);
    }
}

DecodeSet decode_set(const LinkSinrs& sinrs, double eta) {
    DecodeSet out;
    decode_set(sinrs, eta, out);
    return out;
}

void decode_set(const LinkSinrs& sinrs, double eta, DecodeSet& out) {
    out.relays.clear();
    for (std::size_t k = 0; k < sinrs.g_sr.size(); ++k) {
        if (sinrs.g_sr[k] >= eta) {
            out.relays.push_back(static_cast<int>(k));
        }
    }
}

}  // namespace fdrelay
