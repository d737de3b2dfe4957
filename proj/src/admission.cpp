// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/admission.hpp"

#include <cmath>

#include "simqos/errors.hpp"

namespace simqos {

AdmissionState::AdmissionState(int64_t capacity_bps, double utilization_factor,
                               bool waiting_enabled, size_t waiting_limit)
    : reserve_limit_(static_cast<int64_t>(
          std::floor(static_cast<double>(capacity_bps) * utilization_factor))),
      waiting_enabled_(waiting_enabled), waiting_limit_(waiting_limit) {}

AdmitOutcome AdmissionState::admit(const ConnectionRequest& req) {
    if (fits(req.peak_rate_bps)) {
        admitted_.emplace(req.connection_id, req.peak_rate_bps);
        admitted_sum_ += req.peak_rate_bps;
        return AdmitOutcome::Admitted;
    }
    if (waiting_enabled_ && waiting_.size() < waiting_limit_) {
        waiting_.push_back(req);
        return AdmitOutcome::Queued;
    }
    return AdmitOutcome::Rejected;
}

std::vector<ConnectionRequest> AdmissionState::release(const std::string& connection_id) {
    auto it = admitted_.find(connection_id);
    if (it == admitted_.end())
        throw UnknownConnection("release of unknown connection " + connection_id);
    admitted_sum_ -= it->second;
    admitted_.erase(it);

    std::vector<ConnectionRequest> promoted;
    while (!waiting_.empty() && fits(waiting_.front().peak_rate_bps)) {
        ConnectionRequest req = waiting_.front();
        waiting_.pop_front();
        admitted_.emplace(req.connection_id, req.peak_rate_bps);
        admitted_sum_ += req.peak_rate_bps;
        promoted.push_back(std::move(req));
    }
    return promoted;
}

std::optional<ConnectionRequest> AdmissionState::remove_waiting(const std::string& connection_id) {
    for (auto it = waiting_.begin(); it != waiting_.end(); ++it) {
        if (it->connection_id == connection_id) {
            ConnectionRequest req = *it;
            waiting_.erase(it);
            return req;
        }
    }
    return std::nullopt;
}

std::optional<ConnectionRequest> AdmissionState::waiting_head() const {
    if (waiting_.empty())
        return std::nullopt;
    return waiting_.front();
}

bool AdmissionState::is_admitted(const std::string& connection_id) const {
    return admitted_.count(connection_id) > 0;
}

} // namespace simqos
