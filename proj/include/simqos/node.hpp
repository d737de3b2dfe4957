// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_NODE_HPP
#define SIMQOS_NODE_HPP

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simqos/packet.hpp"
#include "simqos/policer.hpp"

namespace simqos {

struct EnqueueResult {
    bool accepted = false;
    DropReason reason = DropReason::QueueFull; // meaningful when !accepted
};

// Queueing state at the head of one output link.
class QueueDiscipline {
public:
    virtual ~QueueDiscipline() = default;
    virtual EnqueueResult enqueue(const Packet& p, TimePoint now) = 0;
    virtual std::optional<Packet> dequeue() = 0;
    virtual bool empty() const = 0;
    // In-flight accounting at end of run.
    virtual void visit(const std::function<void(const Packet&)>& fn) const = 0;
};

struct ClassQueue {
    int64_t capacity_bits = 0; // Q_c, > 0
    int64_t occupancy_bits = 0;
    std::deque<Packet> fifo;
};

// Core-node behavior of the incentive model: one FIFO per delay class,
// drop-at-arrival against the occupancy-derived accepted priority, strict
// delay-class order on dequeue. The scheduler does not enforce the capacity
// split between classes; marking weights plus the shared threshold do.
class NodeState : public QueueDiscipline {
public:
    NodeState(std::string node_id, const std::vector<int64_t>& class_capacity_bytes);

    // PA in [0, 8]: accept a packet iff drop_priority >= PA; 8 drops all.
    // PA = clamp(ceil(8 * max_c occupancy_c / Q_c), 0, 8).
    int accepted_priority() const;

    // Space in the packet's own class queue is checked first (a full buffer
    // drops even the most important packet), then the PA gate, both against
    // pre-insertion occupancy. Throws UnknownClass for an unconfigured lane.
    EnqueueResult enqueue(const Packet& p, TimePoint now) override;

    // Strict priority by delay class, FIFO within a class.
    std::optional<Packet> dequeue() override;

    bool empty() const override;
    void visit(const std::function<void(const Packet&)>& fn) const override;

    const std::string& node_id() const { return node_id_; }
    const ClassQueue& class_queue(int idx) const { return queues_.at(idx); }

private:
    std::string node_id_;
    std::vector<ClassQueue> queues_;
};

// Static-limit alternative to the dynamic threshold: each delay class is
// rate-limited like an access line, everything else is plain FIFO + tail
// drop. Selected by the static_class_limit scenario flag.
class StaticLimitNode : public QueueDiscipline {
public:
    StaticLimitNode(std::string node_id, const std::vector<int64_t>& class_capacity_bytes,
                    const std::vector<int64_t>& class_rate_bps, Duration burst);

    EnqueueResult enqueue(const Packet& p, TimePoint now) override;
    std::optional<Packet> dequeue() override;
    bool empty() const override;
    void visit(const std::function<void(const Packet&)>& fn) const override;

private:
    std::string node_id_;
    std::vector<ClassQueue> queues_;
    std::vector<TokenBucket> limiters_;
};

// Single FIFO with tail drop: the best-effort link (and the connection
// model's transport, where admission keeps the queue from overflowing).
class FifoQueue : public QueueDiscipline {
public:
    FifoQueue(std::string node_id, int64_t capacity_bytes);

    EnqueueResult enqueue(const Packet& p, TimePoint now) override;
    std::optional<Packet> dequeue() override;
    bool empty() const override;
    void visit(const std::function<void(const Packet&)>& fn) const override;

private:
    std::string node_id_;
    ClassQueue q_;
};

} // namespace simqos

#endif
