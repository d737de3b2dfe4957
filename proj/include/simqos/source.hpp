// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_SOURCE_HPP
#define SIMQOS_SOURCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simqos/time.hpp"

namespace simqos {

enum class SourceKind { Cbr, Aimd, MediaLadder };

// Rate-based additive-increase / multiplicative-decrease control. Stands in
// for the transport's bandwidth sharing without modeling a full TCP state
// machine: one rate decision per tick, driven by drop feedback that arrives
// one round trip late.
struct AimdParams {
    Duration tick = milliseconds(20);
    int64_t additive_bps = 50'000;
    double multiplicative = 0.5; // in (0, 1)
    int64_t floor_bps = 16'000;
    int64_t cap_bps = 0; // access cap; filled from the contract when 0
};

// Adaptive media ladder: fixed bit-rate rungs, one step per loss window.
struct MediaParams {
    std::vector<int64_t> rungs_bps; // strictly increasing
    double loss_threshold = 0.02;
    Duration window = seconds(1);
    int initial_rung = 0;
};

struct SourceSpec {
    std::string id;
    std::string subscriber_id;
    std::string device_id; // optional
    SourceKind kind = SourceKind::Cbr;
    std::vector<std::string> route; // node ids, first hop does the marking
    TimePoint start{0};
    TimePoint stop{0};
    Duration start_jitter = 0; // uniform in [0, jitter)
    int64_t packet_size_bits = 12'000;
    int delay_class = 0;
    double initial_rate_bps = 0; // CBR rate / AIMD starting rate
    AimdParams aimd;
    MediaParams media;
};

// Drop notifications accumulated over one feedback window of a flow.
struct DropFeedback {
    std::string flow_id;
    int64_t drops_in_window = 0;
    TimePoint window_end{};
};

// Next CBR departure after a packet leaves at `now`; nullopt at or past stop.
std::optional<TimePoint> cbr_next_departure(const SourceSpec& spec, TimePoint now);

// One AIMD tick: cut on any drop in the window, otherwise climb.
double aimd_step(double current_rate_bps, const DropFeedback& feedback, const AimdParams& p);

// One media window: step down above the loss threshold, step up on a clean
// window, hold otherwise.
int media_adapt(int current_rung, double loss_ratio_in_window, const MediaParams& p);

} // namespace simqos

#endif
