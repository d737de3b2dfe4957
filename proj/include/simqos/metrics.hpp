// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_METRICS_HPP
#define SIMQOS_METRICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "simqos/packet.hpp"
#include "simqos/time.hpp"

namespace simqos {

// Jain fairness index (sum x)^2 / (n * sum x^2): 1 at perfect evenness,
// 1/n when a single value carries everything. Throws AllZero when no value
// is positive.
double jain_index(std::span<const double> values);

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest sample, no
// interpolation. samples must be sorted ascending; p in (0, 100].
// Throws EmptySamples.
int64_t percentile(std::span<const int64_t> sorted_samples, double p);

// One-way delay above which a delivered packet is counted against the voice
// budget (half of a 250 ms round trip). Reporting only, never a control
// input.
constexpr Duration kVoiceBudgetOneWay = milliseconds(125);

struct FlowMetrics {
    std::string flow_id;
    int delay_class = 0;
    int64_t sent_packets = 0;
    int64_t sent_bits = 0;
    int64_t delivered_packets = 0;
    int64_t delivered_bits = 0;
    std::map<DropReason, int64_t> dropped; // by reason
    int64_t in_flight_at_end = 0;          // counted from live structures
    double priority_mean = 0.0;            // mean marked priority, whole run
    double goodput_bps = 0.0;              // delivered bits inside the window
    // Nearest-rank percentiles over deliveries inside the measurement
    // window; -1 when no samples. delay_* is the full one-way delay,
    // qdelay_* its queueing component.
    int64_t delay_p50 = -1, delay_p95 = -1, delay_p99 = -1;
    int64_t qdelay_p50 = -1, qdelay_p95 = -1, qdelay_p99 = -1;

    int64_t dropped_total() const;
};

struct ClassMetrics {
    int delay_class = 0;
    int64_t flows = 0;
    double goodput_bps = 0.0;
    double goodput_share = 0.0; // of total goodput across classes
    double jain = 0.0;          // over per-flow goodputs; 0 when undefined
    int64_t delay_p50 = -1, delay_p95 = -1, delay_p99 = -1;
    int64_t qdelay_p50 = -1, qdelay_p95 = -1, qdelay_p99 = -1;
    double over_budget_frac = 0.0; // delivered with one-way delay > 125 ms
};

struct ConnectionMetrics {
    int64_t attempts = 0;
    int64_t admitted = 0;
    int64_t queued = 0;
    int64_t rejected = 0;
    int64_t timed_out = 0;
    double blocking_ratio = 0.0; // rejected / attempts
};

struct ActionRecord {
    TimePoint at{};
    std::string level;
    std::string kind;
    std::string target;
    std::string effect;
};

// Immutable once produced; safe to hand across threads.
struct Report {
    uint64_t seed = 0;
    Duration duration = 0;
    double warmup_frac = 0.0;
    std::string scenario_echo; // canonicalized scenario document
    std::vector<FlowMetrics> flows;
    std::vector<ClassMetrics> classes;
    ConnectionMetrics connections;
    std::vector<ActionRecord> actions;
};

// Accumulates raw counters during a run and freezes them into a Report.
class MetricsCollector {
public:
    explicit MetricsCollector(int num_classes);

    // Returns the dense flow index used by the per-event calls. Flows may
    // appear mid-run (admitted connections).
    int add_flow(std::string flow_id, int delay_class);

    void on_sent(int flow, int64_t bits);
    void on_marked(int flow, int priority);
    void on_delivered(int flow, int64_t bits, TimePoint created, TimePoint delivered,
                      Duration fixed_delay, TimePoint window_start);
    void on_dropped(int flow, DropReason reason);

    void on_connection_attempt();
    void on_connection_admitted();
    void on_connection_queued();
    void on_connection_rejected();
    void on_connection_timeout();

    void record_action(ActionRecord rec);
    void set_in_flight(int flow, int64_t count);

    // Checks per-flow conservation (sent = delivered + dropped + in-flight)
    // and computes windowed statistics. Throws ConservationViolation on any
    // imbalance: that is a simulator bug, never a traffic condition.
    Report finalize(uint64_t seed, Duration duration, double warmup_frac,
                    std::string scenario_echo);

    int64_t sent_packets(int flow) const { return raw_[flow].sent_packets; }

private:
    struct Raw {
        std::string flow_id;
        int delay_class = 0;
        int64_t sent_packets = 0, sent_bits = 0;
        int64_t delivered_packets = 0, delivered_bits = 0;
        int64_t window_delivered_bits = 0;
        int64_t window_delivered_packets = 0;
        int64_t window_over_budget = 0;
        std::map<DropReason, int64_t> dropped;
        int64_t in_flight = 0;
        int64_t marked_packets = 0;
        int64_t priority_sum = 0;
        std::vector<int64_t> delays;  // one-way, window only
        std::vector<int64_t> qdelays; // queueing component, window only
    };

    std::vector<Raw> raw_;
    int num_classes_;
    ConnectionMetrics conn_;
    std::vector<ActionRecord> actions_;
};

// CSV emission, bit-exact column orders. Flows:
//   flow_id,class,priority_mean,sent_bits,delivered_bits,drop_pri,drop_full,
//   goodput_bps,delay_p50_ns,delay_p95_ns,delay_p99_ns
// Classes:
//   class,goodput_share,jain,p99_delay_ns,over_budget_frac
std::string flows_csv(const Report& report);
std::string classes_csv(const Report& report);

} // namespace simqos

#endif
