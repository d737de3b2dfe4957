// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/meter.hpp"

#include <cassert>
#include <cmath>

namespace simqos {

double update_meter(FlowMeter& meter, int64_t size_bits, TimePoint now) {
    assert(now >= meter.last_update);
    const Duration dt = now - meter.last_update;
    const double tau_s = static_cast<double>(meter.tau) * 1e-9;
    if (dt < 1) {
        meter.mbr_bps += static_cast<double>(size_bits) / tau_s;
    } else {
        const double dt_s = static_cast<double>(dt) * 1e-9;
        const double inst = static_cast<double>(size_bits) / dt_s;
        // inst + (mbr - inst) * decay is exact at the fixed point mbr == inst.
        meter.mbr_bps = inst + (meter.mbr_bps - inst) * std::exp(-dt_s / tau_s);
    }
    meter.last_update = now;
    return meter.mbr_bps;
}

} // namespace simqos
