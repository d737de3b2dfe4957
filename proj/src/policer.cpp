// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/policer.hpp"

#include <algorithm>

namespace simqos {

void TokenBucket::refill(TimePoint now) {
    if (now > last_refill_) {
        const double dt_s = static_cast<double>(now - last_refill_) * 1e-9;
        tokens_ = std::min(depth_bits_, tokens_ + static_cast<double>(rate_bps_) * dt_s);
        last_refill_ = now;
    }
}

bool TokenBucket::police(int64_t size_bits, TimePoint now) {
    refill(now);
    const double need = static_cast<double>(size_bits);
    if (tokens_ >= need) {
        tokens_ -= need;
        return true;
    }
    return false;
}

void TokenBucket::set_rate(int64_t rate_bps, Duration rtt, TimePoint now) {
    refill(now);
    rate_bps_ = rate_bps;
    depth_bits_ = static_cast<double>(rate_bps) * (static_cast<double>(rtt) * 1e-9);
    tokens_ = std::min(tokens_, depth_bits_);
}

} // namespace simqos
