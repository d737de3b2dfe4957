// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/node.hpp"

#include <algorithm>

#include "simqos/errors.hpp"

namespace simqos {

namespace {

std::vector<ClassQueue> make_queues(const std::vector<int64_t>& capacity_bytes) {
    std::vector<ClassQueue> queues(capacity_bytes.size());
    for (size_t i = 0; i < capacity_bytes.size(); ++i)
        queues[i].capacity_bits = capacity_bytes[i] * 8;
    return queues;
}

std::optional<Packet> pop_strict_priority(std::vector<ClassQueue>& queues) {
    for (auto& q : queues) {
        if (!q.fifo.empty()) {
            Packet p = q.fifo.front();
            q.fifo.pop_front();
            q.occupancy_bits -= p.size_bits;
            return p;
        }
    }
    return std::nullopt;
}

} // namespace

NodeState::NodeState(std::string node_id, const std::vector<int64_t>& class_capacity_bytes)
    : node_id_(std::move(node_id)), queues_(make_queues(class_capacity_bytes)) {}

int NodeState::accepted_priority() const {
    int64_t pa = 0;
    for (const auto& q : queues_) {
        // ceil(8 * occupancy / capacity), exact in integers
        const int64_t level = (8 * q.occupancy_bits + q.capacity_bits - 1) / q.capacity_bits;
        pa = std::max(pa, level);
    }
    return static_cast<int>(std::min<int64_t>(pa, 8));
}

EnqueueResult NodeState::enqueue(const Packet& p, TimePoint) {
    if (p.delay_class >= queues_.size())
        throw UnknownClass("no queue for delay class " + std::to_string(p.delay_class));
    ClassQueue& q = queues_[p.delay_class];
    if (q.occupancy_bits + p.size_bits > q.capacity_bits)
        return {false, DropReason::QueueFull};
    if (p.drop_priority < accepted_priority())
        return {false, DropReason::PriorityBelowThreshold};
    q.fifo.push_back(p);
    q.occupancy_bits += p.size_bits;
    return {true, {}};
}

std::optional<Packet> NodeState::dequeue() { return pop_strict_priority(queues_); }

bool NodeState::empty() const {
    return std::all_of(queues_.begin(), queues_.end(),
                       [](const ClassQueue& q) { return q.fifo.empty(); });
}

void NodeState::visit(const std::function<void(const Packet&)>& fn) const {
    for (const auto& q : queues_)
        for (const auto& p : q.fifo)
            fn(p);
}

StaticLimitNode::StaticLimitNode(std::string node_id,
                                 const std::vector<int64_t>& class_capacity_bytes,
                                 const std::vector<int64_t>& class_rate_bps, Duration burst)
    : node_id_(std::move(node_id)), queues_(make_queues(class_capacity_bytes)) {
    limiters_.reserve(class_rate_bps.size());
    for (int64_t rate : class_rate_bps)
        limiters_.emplace_back(rate, static_cast<double>(rate) * (static_cast<double>(burst) * 1e-9));
}

EnqueueResult StaticLimitNode::enqueue(const Packet& p, TimePoint now) {
    if (p.delay_class >= queues_.size())
        throw UnknownClass("no queue for delay class " + std::to_string(p.delay_class));
    ClassQueue& q = queues_[p.delay_class];
    if (q.occupancy_bits + p.size_bits > q.capacity_bits)
        return {false, DropReason::QueueFull};
    if (!limiters_[p.delay_class].police(p.size_bits, now))
        return {false, DropReason::ClassLimit};
    q.fifo.push_back(p);
    q.occupancy_bits += p.size_bits;
    return {true, {}};
}

std::optional<Packet> StaticLimitNode::dequeue() { return pop_strict_priority(queues_); }

bool StaticLimitNode::empty() const {
    return std::all_of(queues_.begin(), queues_.end(),
                       [](const ClassQueue& q) { return q.fifo.empty(); });
}

void StaticLimitNode::visit(const std::function<void(const Packet&)>& fn) const {
    for (const auto& q : queues_)
        for (const auto& p : q.fifo)
            fn(p);
}

FifoQueue::FifoQueue(std::string node_id, int64_t capacity_bytes) : node_id_(std::move(node_id)) {
    q_.capacity_bits = capacity_bytes * 8;
}

EnqueueResult FifoQueue::enqueue(const Packet& p, TimePoint) {
    if (q_.occupancy_bits + p.size_bits > q_.capacity_bits)
        return {false, DropReason::QueueFull};
    q_.fifo.push_back(p);
    q_.occupancy_bits += p.size_bits;
    return {true, {}};
}

std::optional<Packet> FifoQueue::dequeue() {
    if (q_.fifo.empty())
        return std::nullopt;
    Packet p = q_.fifo.front();
    q_.fifo.pop_front();
    q_.occupancy_bits -= p.size_bits;
    return p;
}

bool FifoQueue::empty() const { return q_.fifo.empty(); }

void FifoQueue::visit(const std::function<void(const Packet&)>& fn) const {
    for (const auto& p : q_.fifo)
        fn(p);
}

} // namespace simqos
