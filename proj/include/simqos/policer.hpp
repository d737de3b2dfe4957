// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_POLICER_HPP
#define SIMQOS_POLICER_HPP

#include <cstdint>

#include "simqos/time.hpp"

namespace simqos {

// Token bucket policing a subscriber to its access rate cap. Rate is the
// cap in bits/s, depth one round-trip worth of tokens at that rate.
class TokenBucket {
public:
    TokenBucket() = default;
    TokenBucket(int64_t rate_bps, double depth_bits)
        : rate_bps_(rate_bps), depth_bits_(depth_bits), tokens_(depth_bits) {}

    // Pass consumes size_bits tokens; Drop leaves the bucket untouched.
    bool police(int64_t size_bits, TimePoint now);

    // Operator action: retarget the cap. Depth is resized to `rtt` worth of
    // tokens at the new rate and the current fill is clamped into it.
    void set_rate(int64_t rate_bps, Duration rtt, TimePoint now);

    int64_t rate_bps() const { return rate_bps_; }
    double tokens() const { return tokens_; }
    double depth_bits() const { return depth_bits_; }

private:
    void refill(TimePoint now);

    int64_t rate_bps_ = 0;
    double depth_bits_ = 0.0;
    double tokens_ = 0.0;
    TimePoint last_refill_{};
};

} // namespace simqos

#endif
