// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_ACTIONS_HPP
#define SIMQOS_ACTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "simqos/time.hpp"

namespace simqos {

// The five viewpoint levels, subscriber down to packet.
enum class ActionLevel { Subscriber, Device, Aggregate, Connection, Packet };

// The five basic action kinds: serve instantly, postpone, change status,
// limit, reject.
enum class ActionKind { ServeImmediately, ServeLater, ChangeStatus, LimitSize, Reject };

constexpr int kActionLevels = 5;
constexpr int kActionKinds = 5;

// True except for the three impossible cells: a subscriber or a device
// cannot be "served later", and a packet's size cannot be limited.
bool action_valid(ActionLevel level, ActionKind kind);

const char* to_string(ActionLevel level);
const char* to_string(ActionKind kind);
std::optional<ActionLevel> action_level_from_string(const std::string& s);
std::optional<ActionKind> action_kind_from_string(const std::string& s);

// One cell of the level x kind matrix bound to a target, scheduled on the
// scenario timeline.
struct QosAction {
    TimePoint at{};
    ActionLevel level = ActionLevel::Packet;
    ActionKind kind = ActionKind::Reject;
    std::string target;
    // Optional parameters; which keys apply depends on the cell.
    std::map<std::string, double> num_params;
    std::map<std::string, std::string> str_params;
};

} // namespace simqos

#endif
