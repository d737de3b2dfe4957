// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_MARKER_HPP
#define SIMQOS_MARKER_HPP

#include "simqos/contract.hpp"
#include "simqos/meter.hpp"
#include "simqos/packet.hpp"

namespace simqos {

// Drop priority from the momentary rate: the faster a flow sends relative to
// its nominal rate, the lower the priority and the likelier the discard.
// The delay-class weight scales the rate before the comparison, which is what
// prices low delay as a smaller capacity share (10:30:100 for lanes 0/1/2).
//
//   priority = clamp(floor(4.5 - log2((mbr / w) / nbr)), 0, 7)
//
// mbr = 0 maps to 7. One octave of rate costs exactly one priority level and
// a flow at w * nbr sits at priority 4. Evaluated in exact integer
// arithmetic: the marking is a protocol field, so two platforms (or two libm
// builds) must never disagree on it.
int compute_priority(double mbr_bps, double nbr_bps, DelayClass cls);

// Edge marking: fold the packet into the flow meter, then stamp delay class
// and drop priority from the post-update rate. The subscriber's nominal rate
// is split equally across its concurrently active flows (pass 1 to give the
// flow the whole contract).
void mark(Packet& packet, FlowMeter& meter, const SubscriberContract& contract,
          DelayClass cls, int active_flows, TimePoint now);

} // namespace simqos

#endif
