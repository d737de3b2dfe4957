// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_ADMISSION_HPP
#define SIMQOS_ADMISSION_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simqos/time.hpp"

namespace simqos {

struct ConnectionRequest {
    std::string connection_id;
    int64_t peak_rate_bps = 0; // > 0
    int delay_class = 0;
    std::optional<Duration> holding; // nullopt = open-ended
    TimePoint arrival{};
};

enum class AdmitOutcome { Admitted, Queued, Rejected };

// Peak-rate admission for one link: a connection is admitted iff its peak
// rate still fits under capacity * utilization_factor, reserved until
// release. The optional waiting queue is FIFO with head-of-line blocking.
class AdmissionState {
public:
    AdmissionState(int64_t capacity_bps, double utilization_factor, bool waiting_enabled,
                   size_t waiting_limit);

    AdmitOutcome admit(const ConnectionRequest& req);

    // Remove a reservation and drain the waiting queue greedily in FIFO
    // order; stops at the first request that does not fit (no skipping).
    // Throws UnknownConnection for ids never admitted.
    std::vector<ConnectionRequest> release(const std::string& connection_id);

    // Remove a waiting request (timeout or operator reject). Returns the
    // request if it was still queued.
    std::optional<ConnectionRequest> remove_waiting(const std::string& connection_id);

    // Head of the waiting queue, if any.
    std::optional<ConnectionRequest> waiting_head() const;

    int64_t admitted_sum_bps() const { return admitted_sum_; }
    int64_t reserve_limit_bps() const { return reserve_limit_; }
    size_t waiting_count() const { return waiting_.size(); }
    bool is_admitted(const std::string& connection_id) const;

private:
    bool fits(int64_t peak) const { return admitted_sum_ + peak <= reserve_limit_; }

    int64_t reserve_limit_;
    bool waiting_enabled_;
    size_t waiting_limit_;
    int64_t admitted_sum_ = 0;
    std::map<std::string, int64_t> admitted_; // id -> reserved peak
    std::deque<ConnectionRequest> waiting_;
};

} // namespace simqos

#endif
