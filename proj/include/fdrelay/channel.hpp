#pragma once

#include <complex>
#include <vector>

#include "fdrelay/model.hpp"
#include "fdrelay/sfun.hpp"

namespace fdrelay {

using cplx = std::complex<double>;

/// One block's channel gains. Relay-to-relay gains are not drawn: their
/// aggregate effect is the equivalent noise variance var_rsi + var_iri.
struct ChannelRealization {
    cplx h_sd{};
    std::vector<cplx> h_sr;
    std::vector<cplx> h_rd;
};

/// Instantaneous link SINRs with unit receiver noise.
struct LinkSinrs {
    double g_sd = 0.0;
    std::vector<double> g_sr;
    std::vector<double> g_rd;
    double relay_tx_power = 0.0;
};

/// Indices (0-based, ascending) of the relays that decoded the block.
struct DecodeSet {
    std::vector<int> relays;

    [[nodiscard]] int size() const { return static_cast<int>(relays.size()); }
    [[nodiscard]] bool empty() const { return relays.empty(); }
};

ChannelRealization draw_realization(const SystemConfig& cfg, RandomStream& rng);

/// In-place variant reusing the vectors of `out`. Consumes exactly
/// 2 * (1 + 2 N) uniforms from `rng` in the order h_sd, h_sr[0..N), h_rd[0..N).
void draw_realization(const SystemConfig& cfg, RandomStream& rng, ChannelRealization& out);

/// SINRs with relay transmit power `relay_power`, which also scales the
/// residual self- plus inter-relay interference var_rsi + var_iri at the relays.
LinkSinrs link_sinrs(const ChannelRealization& real, const SystemConfig& cfg, double relay_power);

/// Same with an explicit interference variance at the relay input.
void link_sinrs(const ChannelRealization& real, const SystemConfig& cfg, double relay_power,
                double interference_var, LinkSinrs& out);

DecodeSet decode_set(const LinkSinrs& sinrs, double eta);
void decode_set(const LinkSinrs& sinrs, double eta, DecodeSet& out);

}  // namespace fdrelay
