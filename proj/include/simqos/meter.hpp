// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_METER_HPP
#define SIMQOS_METER_HPP

#include <cstdint>

#include "simqos/time.hpp"

namespace simqos {

// Exponentially decaying momentary-rate estimator. O(1) state, deterministic,
// decays toward zero while the flow is idle.
struct FlowMeter {
    double mbr_bps = 0.0; // measured momentary bit rate
    TimePoint last_update{};
    Duration tau = milliseconds(100); // time constant, > 0
};

// Fold one packet of size_bits observed at `now` into the estimate and
// return the updated momentary rate. With dt = now - last_update:
//   mbr' = inst + (mbr - inst) * exp(-dt/tau),  inst = size_bits / dt
// and for dt below 1 ns the analytic limit mbr' = mbr + size_bits / tau.
double update_meter(FlowMeter& meter, int64_t size_bits, TimePoint now);

} // namespace simqos

#endif
