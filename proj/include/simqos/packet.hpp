// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_PACKET_HPP
#define SIMQOS_PACKET_HPP

#include <cstdint>
#include <vector>

#include "simqos/time.hpp"

namespace simqos {

// Delay class: an orthogonal service lane trading delay for capacity share.
// Index 0 is the lowest-delay lane, the highest index the best-effort lane.
// The share weight is kept in tenths so priority marking can use exact
// integer arithmetic (default lanes 0/1/2 carry 0.1/0.3/1.0, the 10:30:100
// capacity split).
struct DelayClass {
    uint8_t index = 0;
    int weight_tenths = 10;

    double weight() const { return weight_tenths / 10.0; }
};

// Per-scenario lane table. Weights strictly increase with index and the last
// lane always carries weight 1.0.
class ClassTable {
public:
    static ClassTable standard_three();
    static ClassTable standard_two();
    static ClassTable from_tenths(std::vector<int> tenths); // validates

    int count() const { return static_cast<int>(tenths_.size()); }
    bool valid_index(int idx) const { return idx >= 0 && idx < count(); }
    DelayClass at(int idx) const;

private:
    explicit ClassTable(std::vector<int> tenths) : tenths_(std::move(tenths)) {}
    std::vector<int> tenths_;
};

// 3-bit drop priority; 7 = most important, least droppable.
struct DropPriority {
    int value = 7;
};

enum class DropReason {
    Policer,                // edge token bucket
    PriorityBelowThreshold, // core PA gate
    QueueFull,              // class or FIFO buffer exhausted
    ClassLimit,             // static per-class rate limit mode
    Action,                 // operator action from the timeline
};

struct Packet {
    uint64_t id = 0;
    int32_t flow = -1;       // dense flow index within the run
    int32_t subscriber = -1; // dense subscriber index
    int64_t size_bits = 0;
    uint8_t delay_class = 0;
    uint8_t drop_priority = 0;
    TimePoint created_at{};
    TimePoint marked_at{};
    // Serialization + propagation accumulated along the path so far;
    // one_way_delay - fixed_delay is the pure queueing component.
    Duration fixed_delay = 0;
    uint16_t hop = 0; // index of the next link on the route
};

// Simulated 6-bit header field: bits 5-4 delay class, bit 3 reserved zero,
// bits 2-0 drop priority. Bit-exact; written by trace dumps and consumed by
// the standards-mapping exporter.
uint8_t encode_marking(int delay_class, int drop_priority);
void decode_marking(uint8_t wire, int& delay_class, int& drop_priority);

} // namespace simqos

#endif
