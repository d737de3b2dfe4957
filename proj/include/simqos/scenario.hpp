// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_SCENARIO_HPP
#define SIMQOS_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "simqos/actions.hpp"
#include "simqos/contract.hpp"
#include "simqos/packet.hpp"
#include "simqos/source.hpp"
#include "simqos/time.hpp"
#include "simqos/topology.hpp"

namespace simqos {

// The three service-process models selectable per scenario.
enum class ServiceModelKind { ConnectionOriented, BestEffort, IncentiveBased };

const char* to_string(ServiceModelKind kind);

struct WaitingQueueParams {
    bool enabled = false;
    int limit = 16;
    Duration timeout = seconds(10);
};

struct ModelParams {
    Duration meter_tau = milliseconds(100);
    Duration feedback_rtt = milliseconds(20); // drop feedback delay and policer depth
    std::vector<int64_t> class_queue_bytes = {16'384, 65'536, 524'288};
    int num_delay_classes = 3;
    std::vector<int> class_weight_tenths = {1, 3, 10};
    int64_t best_effort_queue_bytes = 524'288;
    int64_t connection_queue_bytes = 524'288;
    double utilization_factor = 1.0;
    WaitingQueueParams waiting_queue;
    bool nbr_split_equal = true; // divide NBR across a subscriber's active flows
    bool static_class_limit = false;
    std::vector<int64_t> static_class_limits_bps;
    Duration static_class_burst = milliseconds(100);
};

// Stochastic connection workload on one link (connection-oriented model).
struct ConnectionWorkload {
    std::string id;
    std::string link_id;
    double arrival_rate_per_s = 0.0; // Poisson
    double mean_holding_s = 0.0;     // exponential
    int64_t peak_rate_bps = 0;
    TimePoint start{0};
    TimePoint stop{0};
    bool send_traffic = true; // admitted connections emit CBR at peak rate
    int64_t packet_size_bits = 12'000;
    int delay_class = 0; // informational under FIFO transport
};

struct ScenarioConfig {
    Duration duration = 0;
    ServiceModelKind model = ServiceModelKind::BestEffort;
    double warmup_frac = 0.2;
    ModelParams params;
    Topology topology;
    std::vector<SubscriberContract> subscribers;
    std::vector<SourceSpec> sources;
    std::vector<ConnectionWorkload> connections;
    std::vector<QosAction> timeline;

    ClassTable class_table() const { return ClassTable::from_tenths(params.class_weight_tenths); }
    std::optional<size_t> subscriber_index(const std::string& id) const;
};

struct ParseError {
    std::string path; // e.g. links[0].capacity_bps
    std::string kind; // SyntaxError | UnknownKey | RangeViolation | DanglingReference | InvalidAction
    std::string message;

    std::string str() const { return path + ": " + kind + ": " + message; }
};

struct ParseResult {
    std::optional<ScenarioConfig> config; // set iff errors empty
    std::vector<ParseError> errors;       // every problem found, not just the first

    bool ok() const { return errors.empty(); }
};

// Parse and fully validate a scenario document. Unknown keys are hard
// errors: a silently ignored typo in a QoS parameter would corrupt an
// experiment.
ParseResult parse_scenario(const std::string& text);

// Canonical serialization of a parsed config (defaults filled, keys sorted);
// the scenario echo embedded in reports and run metadata.
std::string canonical_echo(const ScenarioConfig& config);

} // namespace simqos

#endif
