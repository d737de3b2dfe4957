// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/source.hpp"

#include <algorithm>
#include <cassert>

namespace simqos {

std::optional<TimePoint> cbr_next_departure(const SourceSpec& spec, TimePoint now) {
    if (now >= spec.stop)
        return std::nullopt;
    const TimePoint next = now + gap_for_rate(spec.packet_size_bits, spec.initial_rate_bps);
    if (next >= spec.stop)
        return std::nullopt;
    return next;
}

double aimd_step(double current_rate_bps, const DropFeedback& feedback, const AimdParams& p) {
    if (feedback.drops_in_window > 0)
        return std::max(current_rate_bps * p.multiplicative, static_cast<double>(p.floor_bps));
    return std::min(current_rate_bps + static_cast<double>(p.additive_bps),
                    static_cast<double>(p.cap_bps));
}

int media_adapt(int current_rung, double loss_ratio_in_window, const MediaParams& p) {
    assert(current_rung >= 0 && current_rung < static_cast<int>(p.rungs_bps.size()));
    if (loss_ratio_in_window > p.loss_threshold)
        return std::max(0, current_rung - 1);
    if (loss_ratio_in_window == 0.0)
        return std::min(static_cast<int>(p.rungs_bps.size()) - 1, current_rung + 1);
    return current_rung;
}

} // namespace simqos
