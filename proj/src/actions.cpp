// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/actions.hpp"

namespace simqos {

bool action_valid(ActionLevel level, ActionKind kind) {
    if (kind == ActionKind::ServeLater &&
        (level == ActionLevel::Subscriber || level == ActionLevel::Device))
        return false;
    if (kind == ActionKind::LimitSize && level == ActionLevel::Packet)
        return false;
    return true;
}

const char* to_string(ActionLevel level) {
    switch (level) {
    case ActionLevel::Subscriber: return "subscriber";
    case ActionLevel::Device: return "device";
    case ActionLevel::Aggregate: return "aggregate";
    case ActionLevel::Connection: return "connection";
    case ActionLevel::Packet: return "packet";
    }
    return "?";
}

const char* to_string(ActionKind kind) {
    switch (kind) {
    case ActionKind::ServeImmediately: return "serve_immediately";
    case ActionKind::ServeLater: return "serve_later";
    case ActionKind::ChangeStatus: return "change_status";
    case ActionKind::LimitSize: return "limit_size";
    case ActionKind::Reject: return "reject";
    }
    return "?";
}

std::optional<ActionLevel> action_level_from_string(const std::string& s) {
    if (s == "subscriber") return ActionLevel::Subscriber;
    if (s == "device") return ActionLevel::Device;
    if (s == "aggregate") return ActionLevel::Aggregate;
    if (s == "connection") return ActionLevel::Connection;
    if (s == "packet") return ActionLevel::Packet;
    return std::nullopt;
}

std::optional<ActionKind> action_kind_from_string(const std::string& s) {
    if (s == "serve_immediately") return ActionKind::ServeImmediately;
    if (s == "serve_later") return ActionKind::ServeLater;
    if (s == "change_status") return ActionKind::ChangeStatus;
    if (s == "limit_size") return ActionKind::LimitSize;
    if (s == "reject") return ActionKind::Reject;
    return std::nullopt;
}

} // namespace simqos
