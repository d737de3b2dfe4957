// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/marker.hpp"

#include <algorithm>
#include <cmath>

#include "simqos/errors.hpp"

namespace simqos {

namespace {

using u128 = unsigned __int128;

// Split a positive finite double into an integer mantissa in [2^52, 2^53)
// and a base-2 exponent: x == mant * 2^exp.
void split(double x, uint64_t& mant, int& exp) {
    int e = 0;
    const double f = std::frexp(x, &e); // f in [0.5, 1)
    mant = static_cast<uint64_t>(std::ldexp(f, 53));
    exp = e - 53;
}

// Exact test of floor(4.5 - log2((mbr/w)/nbr)) >= n, i.e.
//   (10*mbr)^2 <= (w10*nbr)^2 * 2^(9-2n)
// The boundary is irrational, so the two sides are never equal for finite
// doubles; <= vs < cannot matter.
bool at_least(double mbr, double nbr, int w10, int n) {
    uint64_t ma, mb;
    int ea, eb;
    split(mbr, ma, ea);
    split(nbr, mb, eb);
    const u128 lhs = u128(100) * ma * ma;
    const u128 rhs = u128(w10) * w10 * mb * mb;
    const int shift = 9 - 2 * n + 2 * (eb - ea);
    if (shift >= 9)
        return true; // rhs * 2^shift >= 2^113 > lhs always
    if (shift <= -9)
        return false; // lhs * 2^9 > 2^119 > rhs always
    if (shift >= 0)
        return lhs <= (rhs << shift);
    return (lhs << -shift) <= rhs;
}

} // namespace

int compute_priority(double mbr_bps, double nbr_bps, DelayClass cls) {
    if (!(nbr_bps > 0.0) || !std::isfinite(nbr_bps))
        throw InvalidContract("nominal bit rate must be positive");
    if (!(mbr_bps > 0.0))
        return 7;
    if (!std::isfinite(mbr_bps))
        return 0;
    for (int n = 7; n >= 1; --n)
        if (at_least(mbr_bps, nbr_bps, cls.weight_tenths, n))
            return n;
    return 0;
}

void mark(Packet& packet, FlowMeter& meter, const SubscriberContract& contract,
          DelayClass cls, int active_flows, TimePoint now) {
    const double mbr = update_meter(meter, packet.size_bits, now);
    const double nbr = static_cast<double>(contract.nominal_bit_rate_bps) /
                       static_cast<double>(std::max(1, active_flows));
    packet.delay_class = cls.index;
    packet.drop_priority = static_cast<uint8_t>(compute_priority(mbr, nbr, cls));
    packet.marked_at = now;
}

} // namespace simqos
