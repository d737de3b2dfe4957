// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_EVENT_QUEUE_HPP
#define SIMQOS_EVENT_QUEUE_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "simqos/errors.hpp"
#include "simqos/time.hpp"

namespace simqos {

// Deterministic event loop. Dispatch order is lexicographic on
// (time, insertion sequence); ties never depend on heap internals.
class EventQueue {
public:
    using Handler = std::function<void()>;

    TimePoint now() const { return now_; }

    void schedule(TimePoint at, Handler fn) {
        if (at < now_)
            throw InternalEventOrderViolation("event scheduled in the past");
        heap_.push(Entry{at, next_seq_++, std::move(fn)});
    }

    void schedule_in(Duration delay, Handler fn) { schedule(now_ + delay, std::move(fn)); }

    // Dispatch every event with time <= end, then advance the clock to end.
    void run_until(TimePoint end) {
        while (!heap_.empty() && heap_.top().at <= end) {
            Entry e = std::move(const_cast<Entry&>(heap_.top()));
            heap_.pop();
            if (e.at < now_)
                throw InternalEventOrderViolation("clock would move backward");
            now_ = e.at;
            e.fn();
        }
        if (end > now_)
            now_ = end;
    }

    bool empty() const { return heap_.empty(); }
    size_t pending() const { return heap_.size(); }

private:
    struct Entry {
        TimePoint at;
        uint64_t seq;
        Handler fn;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.at != b.at)
                return a.at > b.at;
            return a.seq > b.seq;
        }
    };

    TimePoint now_{0};
    uint64_t next_seq_ = 0;
    std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
};

} // namespace simqos

#endif
