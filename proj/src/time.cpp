// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/time.hpp"

#include <cmath>

namespace simqos {

Duration duration_from_seconds(double s) {
    return static_cast<Duration>(std::llround(s * 1e9));
}

Duration serialization_delay(int64_t bits, int64_t rate_bps) {
    // bits * 1e9 stays within int64 for any desk-scale packet.
    return (bits * 1'000'000'000 + rate_bps / 2) / rate_bps;
}

Duration gap_for_rate(int64_t packet_bits, double rate_bps) {
    return static_cast<Duration>(std::llround(static_cast<double>(packet_bits) * 1e9 / rate_bps));
}

} // namespace simqos
