// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "simqos/errors.hpp"

namespace simqos {

double jain_index(std::span<const double> values) {
    double sum = 0.0, sum_sq = 0.0;
    bool any_positive = false;
    for (double v : values) {
        any_positive = any_positive || v > 0.0;
        sum += v;
        sum_sq += v * v;
    }
    if (!any_positive)
        throw AllZero("jain index needs at least one positive value");
    return (sum * sum) / (static_cast<double>(values.size()) * sum_sq);
}

int64_t percentile(std::span<const int64_t> sorted_samples, double p) {
    if (sorted_samples.empty())
        throw EmptySamples("percentile of empty sample set");
    if (!(p > 0.0) || p > 100.0)
        throw std::out_of_range("percentile p must be in (0, 100]");
    const auto n = static_cast<double>(sorted_samples.size());
    auto rank = static_cast<size_t>(std::ceil(p * n / 100.0)); // 1-based
    rank = std::max<size_t>(rank, 1);
    rank = std::min(rank, sorted_samples.size());
    return sorted_samples[rank - 1];
}

int64_t FlowMetrics::dropped_total() const {
    int64_t total = 0;
    for (const auto& [reason, count] : dropped)
        total += count;
    return total;
}

MetricsCollector::MetricsCollector(int num_classes) : num_classes_(num_classes) {}

int MetricsCollector::add_flow(std::string flow_id, int delay_class) {
    Raw r;
    r.flow_id = std::move(flow_id);
    r.delay_class = delay_class;
    raw_.push_back(std::move(r));
    return static_cast<int>(raw_.size()) - 1;
}

void MetricsCollector::on_sent(int flow, int64_t bits) {
    raw_[flow].sent_packets += 1;
    raw_[flow].sent_bits += bits;
}

void MetricsCollector::on_marked(int flow, int priority) {
    raw_[flow].marked_packets += 1;
    raw_[flow].priority_sum += priority;
}

void MetricsCollector::on_delivered(int flow, int64_t bits, TimePoint created,
                                    TimePoint delivered, Duration fixed_delay,
                                    TimePoint window_start) {
    Raw& r = raw_[flow];
    r.delivered_packets += 1;
    r.delivered_bits += bits;
    if (delivered >= window_start) {
        const Duration one_way = delivered - created;
        r.window_delivered_bits += bits;
        r.window_delivered_packets += 1;
        if (one_way > kVoiceBudgetOneWay)
            r.window_over_budget += 1;
        r.delays.push_back(one_way);
        r.qdelays.push_back(one_way - fixed_delay);
    }
}

void MetricsCollector::on_dropped(int flow, DropReason reason) { raw_[flow].dropped[reason] += 1; }

void MetricsCollector::on_connection_attempt() { conn_.attempts += 1; }
void MetricsCollector::on_connection_admitted() { conn_.admitted += 1; }
void MetricsCollector::on_connection_queued() { conn_.queued += 1; }
void MetricsCollector::on_connection_rejected() { conn_.rejected += 1; }
void MetricsCollector::on_connection_timeout() { conn_.timed_out += 1; }

void MetricsCollector::record_action(ActionRecord rec) { actions_.push_back(std::move(rec)); }

void MetricsCollector::set_in_flight(int flow, int64_t count) { raw_[flow].in_flight = count; }

namespace {

void fill_percentiles(std::vector<int64_t>& samples, int64_t& p50, int64_t& p95, int64_t& p99) {
    if (samples.empty())
        return;
    std::sort(samples.begin(), samples.end());
    p50 = percentile(samples, 50);
    p95 = percentile(samples, 95);
    p99 = percentile(samples, 99);
}

} // namespace

Report MetricsCollector::finalize(uint64_t seed, Duration duration, double warmup_frac,
                                  std::string scenario_echo) {
    Report report;
    report.seed = seed;
    report.duration = duration;
    report.warmup_frac = warmup_frac;
    report.scenario_echo = std::move(scenario_echo);
    report.connections = conn_;
    if (conn_.attempts > 0)
        report.connections.blocking_ratio =
            static_cast<double>(conn_.rejected) / static_cast<double>(conn_.attempts);
    report.actions = actions_;

    const auto window_ns = static_cast<double>(duration) * (1.0 - warmup_frac);
    const double window_s = window_ns * 1e-9;

    struct ClassAgg {
        std::vector<double> goodputs;
        std::vector<int64_t> delays, qdelays;
        int64_t delivered = 0, over_budget = 0;
        int64_t flows = 0;
    };
    std::vector<ClassAgg> agg(num_classes_);

    for (Raw& r : raw_) {
        const int64_t accounted = r.delivered_packets +
                                  [&] {
                                      int64_t d = 0;
                                      for (auto& [reason, count] : r.dropped)
                                          d += count;
                                      return d;
                                  }() +
                                  r.in_flight;
        if (accounted != r.sent_packets)
            throw ConservationViolation("flow " + r.flow_id + ": sent " +
                                        std::to_string(r.sent_packets) + " != accounted " +
                                        std::to_string(accounted));

        FlowMetrics fm;
        fm.flow_id = r.flow_id;
        fm.delay_class = r.delay_class;
        fm.sent_packets = r.sent_packets;
        fm.sent_bits = r.sent_bits;
        fm.delivered_packets = r.delivered_packets;
        fm.delivered_bits = r.delivered_bits;
        fm.dropped = r.dropped;
        fm.in_flight_at_end = r.in_flight;
        fm.priority_mean = r.marked_packets > 0 ? static_cast<double>(r.priority_sum) /
                                                      static_cast<double>(r.marked_packets)
                                                : 0.0;
        fm.goodput_bps =
            window_s > 0.0 ? static_cast<double>(r.window_delivered_bits) / window_s : 0.0;
        fill_percentiles(r.delays, fm.delay_p50, fm.delay_p95, fm.delay_p99);
        fill_percentiles(r.qdelays, fm.qdelay_p50, fm.qdelay_p95, fm.qdelay_p99);

        if (r.delay_class >= 0 && r.delay_class < num_classes_) {
            ClassAgg& a = agg[r.delay_class];
            a.flows += 1;
            a.goodputs.push_back(fm.goodput_bps);
            a.delays.insert(a.delays.end(), r.delays.begin(), r.delays.end());
            a.qdelays.insert(a.qdelays.end(), r.qdelays.begin(), r.qdelays.end());
            a.delivered += r.window_delivered_packets;
            a.over_budget += r.window_over_budget;
        }
        report.flows.push_back(std::move(fm));
    }

    double total_goodput = 0.0;
    for (const auto& a : agg)
        for (double g : a.goodputs)
            total_goodput += g;

    for (int c = 0; c < num_classes_; ++c) {
        ClassAgg& a = agg[c];
        ClassMetrics cm;
        cm.delay_class = c;
        cm.flows = a.flows;
        for (double g : a.goodputs)
            cm.goodput_bps += g;
        cm.goodput_share = total_goodput > 0.0 ? cm.goodput_bps / total_goodput : 0.0;
        const bool any_positive =
            std::any_of(a.goodputs.begin(), a.goodputs.end(), [](double g) { return g > 0.0; });
        cm.jain = any_positive ? jain_index(a.goodputs) : 0.0;
        fill_percentiles(a.delays, cm.delay_p50, cm.delay_p95, cm.delay_p99);
        fill_percentiles(a.qdelays, cm.qdelay_p50, cm.qdelay_p95, cm.qdelay_p99);
        cm.over_budget_frac = a.delivered > 0 ? static_cast<double>(a.over_budget) /
                                                    static_cast<double>(a.delivered)
                                              : 0.0;
        report.classes.push_back(cm);
    }
    return report;
}

namespace {

std::string fixed(double v, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

} // namespace

std::string flows_csv(const Report& report) {
    std::ostringstream os;
    os << "flow_id,class,priority_mean,sent_bits,delivered_bits,drop_pri,drop_full,"
          "goodput_bps,delay_p50_ns,delay_p95_ns,delay_p99_ns\n";
    for (const auto& f : report.flows) {
        const auto count = [&](DropReason r) {
            auto it = f.dropped.find(r);
            return it == f.dropped.end() ? int64_t{0} : it->second;
        };
        os << f.flow_id << ',' << f.delay_class << ',' << fixed(f.priority_mean, 3) << ','
           << f.sent_bits << ',' << f.delivered_bits << ','
           << count(DropReason::PriorityBelowThreshold) << ',' << count(DropReason::QueueFull)
           << ',' << fixed(f.goodput_bps, 1) << ',' << f.delay_p50 << ',' << f.delay_p95 << ','
           << f.delay_p99 << '\n';
    }
    return os.str();
}

std::string classes_csv(const Report& report) {
    std::ostringstream os;
    os << "class,goodput_share,jain,p99_delay_ns,over_budget_frac\n";
    for (const auto& c : report.classes) {
        os << c.delay_class << ',' << fixed(c.goodput_share, 6) << ',' << fixed(c.jain, 6) << ','
           << c.delay_p99 << ',' << fixed(c.over_budget_frac, 6) << '\n';
    }
    return os.str();
}

} // namespace simqos
