#pragma once

#include <span>

#include "fdrelay/model.hpp"

namespace fdrelay {

/// Decoding threshold 2^(r (T + cp) / T) - 1.
double eta(double rate, int block_len, int cp_len);
double eta(const SystemConfig& cfg);

/// Relay transmit power when `decoding` relays are active.
double relay_tx_power(const SystemConfig& cfg, int decoding);

/// Relay power assumed in the interference term at every relay input when
/// computing the S->R link outage (E_R / N under the shared budget).
double relay_interference_power(const SystemConfig& cfg);

struct LinkOutageProbs {
    double p_sd = 1.0;
    double p_sr = 1.0;
    double eta = 0.0;
    double gbar_sd = 0.0;
    // Mean relay->destination SINR per relay and summed over all N relays,
    // both at the relay power passed to link_outages.
    double gbar_rd = 0.0;
    double gbar_syn = 0.0;
};

LinkOutageProbs link_outages(const SystemConfig& cfg, double relay_interference_power);

/// Pr(X + Y < threshold), X ~ Exp(mean gbar_direct), Y the sum of `branches`
/// i.i.d. Exp(mean gbar_branch). Zero means are point masses at 0.
double outage_direct_plus_erlang(double gbar_direct, double gbar_branch, int branches, double threshold);

/// Conditional outage with L decoding relays, asynchronous relays (full
/// diversity of the equalized multipath channel).
double p_cond_async(int decoding, const SystemConfig& cfg);

/// Conditional outage with L decoding relays transmitting in phase: one
/// equivalent relay with mean SINR P_R L var_rd.
double p_cond_sync(int decoding, const SystemConfig& cfg);

enum class CombineMethod { binomial, enumeration };

/// Total outage from link probabilities. `p_cond[L-1]` is the conditional
/// outage with L decoding relays; N = p_cond.size(). Enumeration sums over
/// all 2^N decode sets and is limited to N <= 20.
double combine_outage(double p_sd, double p_sr, std::span<const double> p_cond, CombineMethod method);

double total_outage(const SystemConfig& cfg, SyncMode mode, CombineMethod method = CombineMethod::binomial);

}  // namespace fdrelay
