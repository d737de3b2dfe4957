// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/sim.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "simqos/admission.hpp"
#include "simqos/errors.hpp"
#include "simqos/event_queue.hpp"
#include "simqos/marker.hpp"
#include "simqos/node.hpp"
#include "simqos/policer.hpp"
#include "simqos/rng.hpp"
#include "simqos/stdmap.hpp"

namespace simqos {

namespace {

struct FlowRuntime {
    SourceSpec spec; // connection flows get a synthesized spec
    int subscriber = -1;
    std::vector<size_t> path; // link indices along the route
    FlowMeter meter;
    double rate_bps = 0.0;
    int rung = 0;
    bool active = false;
    bool killed = false;
    int64_t drops_pending = 0; // feedback since the last AIMD tick
    int64_t window_sent = 0;   // media-window packet count
    int64_t window_drops = 0;  // media-window drop feedback count
    int64_t on_wire = 0;       // between serialization end and arrival
};

struct SubscriberRuntime {
    SubscriberContract contract;
    TokenBucket bucket;
    int active_flows = 0;
    bool attached = true;
};

struct LinkRuntime {
    Link def;
    std::unique_ptr<QueueDiscipline> queue;
    bool busy = false;
    std::optional<Packet> in_service;
};

struct WorkloadRuntime {
    ConnectionWorkload spec;
    size_t link_idx = 0;
    RngStream arrivals;
    RngStream holding;
    int64_t next_serial = 0;
};

class Sim {
public:
    Sim(const ScenarioConfig& cfg, uint64_t seed, TraceSink* trace)
        : cfg_(cfg), seed_(seed), trace_(trace), classes_(cfg.class_table()),
          metrics_(cfg.params.num_delay_classes) {}

    Report run();

private:
    // --- construction -----------------------------------------------------
    void build_links();
    void build_subscribers();
    void build_sources();
    void build_workloads();
    void schedule_timeline();
    std::vector<size_t> resolve_path(const std::vector<std::string>& route) const;

    // --- traffic ----------------------------------------------------------
    void activate_flow(int f);
    void deactivate_flow(int f);
    void kill_flow(int f);
    void emit(int f);
    void edge_ingress(int f, Packet pkt);
    void offer(size_t link_idx, Packet pkt);
    void kick(size_t link_idx);
    void tx_done(size_t link_idx);
    void arrive(size_t link_idx, Packet pkt);
    void drop(const Packet& pkt, DropReason reason, const std::string& node);
    void aimd_tick(int f);
    void media_window(int f);

    // --- connections ------------------------------------------------------
    void schedule_workload_arrival(size_t w);
    void workload_arrival(size_t w);
    void start_connection(const ConnectionRequest& req, size_t link_idx, bool send_traffic,
                          const ConnectionWorkload& spec);
    void end_connection(const std::string& connection_id, size_t link_idx);
    AdmissionState& admission_for(size_t link_idx);

    // --- actions ----------------------------------------------------------
    void apply_action(const QosAction& action);
    std::string act_subscriber(const QosAction& a);
    std::string act_device(const QosAction& a);
    std::string act_connection(const QosAction& a);
    std::string act_packet(const QosAction& a);

    TimePoint now() const { return events_.now(); }
    TimePoint window_start() const {
        return TimePoint{static_cast<Duration>(static_cast<double>(cfg_.duration) *
                                               cfg_.warmup_frac)};
    }
    const std::string& flow_name(int f) const { return flows_[f].spec.id; }
    void trace_node(const std::string& node, const Packet& p, const char* event) {
        if (trace_)
            trace_->node_event(now(), node, flow_name(p.flow), p.delay_class, p.drop_priority,
                               event);
    }

    const ScenarioConfig& cfg_;
    uint64_t seed_;
    TraceSink* trace_;
    ClassTable classes_;
    MetricsCollector metrics_;
    EventQueue events_;

    std::vector<LinkRuntime> links_;
    std::vector<SubscriberRuntime> subscribers_;
    std::vector<FlowRuntime> flows_;
    std::vector<WorkloadRuntime> workloads_;
    std::map<size_t, std::unique_ptr<AdmissionState>> admission_; // by link index
    std::map<std::string, std::pair<size_t, bool>> live_connections_; // id -> (link, admitted)
    uint64_t next_packet_id_ = 0;
};

Report Sim::run() {
    build_links();
    build_subscribers();
    build_sources();
    build_workloads();
    schedule_timeline();

    events_.run_until(TimePoint{cfg_.duration});

    // In-flight accounting from the live structures, independent of the
    // per-event counters it is checked against.
    std::vector<int64_t> in_flight(flows_.size(), 0);
    for (const auto& link : links_) {
        link.queue->visit([&](const Packet& p) { in_flight[p.flow] += 1; });
        if (link.in_service)
            in_flight[link.in_service->flow] += 1;
    }
    for (size_t f = 0; f < flows_.size(); ++f) {
        in_flight[f] += flows_[f].on_wire;
        metrics_.set_in_flight(static_cast<int>(f), in_flight[f]);
    }

    return metrics_.finalize(seed_, cfg_.duration, cfg_.warmup_frac, canonical_echo(cfg_));
}

// --- construction ---------------------------------------------------------

void Sim::build_links() {
    links_.reserve(cfg_.topology.links.size());
    for (const auto& def : cfg_.topology.links) {
        LinkRuntime lr;
        lr.def = def;
        switch (cfg_.model) {
        case ServiceModelKind::IncentiveBased:
            if (cfg_.params.static_class_limit)
                lr.queue = std::make_unique<StaticLimitNode>(
                    def.src, cfg_.params.class_queue_bytes, cfg_.params.static_class_limits_bps,
                    cfg_.params.static_class_burst);
            else
                lr.queue = std::make_unique<NodeState>(def.src, cfg_.params.class_queue_bytes);
            break;
        case ServiceModelKind::BestEffort:
            lr.queue = std::make_unique<FifoQueue>(def.src, cfg_.params.best_effort_queue_bytes);
            break;
        case ServiceModelKind::ConnectionOriented:
            lr.queue = std::make_unique<FifoQueue>(def.src, cfg_.params.connection_queue_bytes);
            break;
        }
        links_.push_back(std::move(lr));
    }
}

void Sim::build_subscribers() {
    subscribers_.reserve(cfg_.subscribers.size());
    for (const auto& contract : cfg_.subscribers) {
        SubscriberRuntime sr;
        sr.contract = contract;
        const double depth = static_cast<double>(contract.access_rate_cap_bps) *
                             (static_cast<double>(cfg_.params.feedback_rtt) * 1e-9);
        sr.bucket = TokenBucket(contract.access_rate_cap_bps, depth);
        subscribers_.push_back(std::move(sr));
    }
}

std::vector<size_t> Sim::resolve_path(const std::vector<std::string>& route) const {
    std::vector<size_t> path;
    for (size_t h = 0; h + 1 < route.size(); ++h) {
        auto idx = cfg_.topology.link_between(route[h], route[h + 1]);
        if (!idx)
            throw InvalidScenario("no link " + route[h] + " -> " + route[h + 1]);
        path.push_back(*idx);
    }
    return path;
}

void Sim::build_sources() {
    for (const auto& spec : cfg_.sources) {
        FlowRuntime fr;
        fr.spec = spec;
        fr.path = resolve_path(spec.route);
        auto sub = cfg_.subscriber_index(spec.subscriber_id);
        fr.subscriber = sub ? static_cast<int>(*sub) : -1;
        fr.meter.tau = cfg_.params.meter_tau;
        fr.rate_bps = spec.initial_rate_bps;
        fr.rung = spec.media.initial_rung;
        const int f = metrics_.add_flow(spec.id, spec.delay_class);
        flows_.push_back(std::move(fr));

        Duration jitter = 0;
        if (spec.start_jitter > 0) {
            RngStream rng(seed_, "source/" + spec.id);
            jitter = static_cast<Duration>(rng.uniform() * static_cast<double>(spec.start_jitter));
        }
        const TimePoint start = spec.start + jitter;
        if (start >= spec.stop)
            continue;
        events_.schedule(start, [this, f] { activate_flow(f); });
        events_.schedule(flows_[f].spec.stop, [this, f] { deactivate_flow(f); });
    }
}

void Sim::build_workloads() {
    for (const auto& w : cfg_.connections) {
        WorkloadRuntime wr{w, 0, RngStream(seed_, "connw/" + w.id + "/arrival"),
                           RngStream(seed_, "connw/" + w.id + "/holding")};
        for (size_t i = 0; i < links_.size(); ++i)
            if (links_[i].def.id == w.link_id)
                wr.link_idx = i;
        workloads_.push_back(std::move(wr));
    }
    for (size_t w = 0; w < workloads_.size(); ++w) {
        // Lazily created admission state, shared by workloads on one link.
        admission_for(workloads_[w].link_idx);
        events_.schedule(workloads_[w].spec.start, [this, w] { schedule_workload_arrival(w); });
    }
}

void Sim::schedule_timeline() {
    for (const auto& action : cfg_.timeline)
        events_.schedule(action.at, [this, &action] { apply_action(action); });
}

// --- traffic ----------------------------------------------------------------

void Sim::activate_flow(int f) {
    FlowRuntime& fr = flows_[f];
    if (fr.killed || fr.active)
        return;
    fr.active = true;
    if (fr.subscriber >= 0)
        subscribers_[fr.subscriber].active_flows += 1;
    emit(f);
    if (fr.spec.kind == SourceKind::Aimd)
        events_.schedule(now() + fr.spec.aimd.tick, [this, f] { aimd_tick(f); });
    else if (fr.spec.kind == SourceKind::MediaLadder)
        events_.schedule(now() + fr.spec.media.window, [this, f] { media_window(f); });
}

void Sim::deactivate_flow(int f) {
    FlowRuntime& fr = flows_[f];
    if (!fr.active)
        return;
    fr.active = false;
    if (fr.subscriber >= 0)
        subscribers_[fr.subscriber].active_flows -= 1;
}

void Sim::kill_flow(int f) {
    deactivate_flow(f);
    flows_[f].killed = true;
}

void Sim::emit(int f) {
    FlowRuntime& fr = flows_[f];
    if (!fr.active || now() >= fr.spec.stop)
        return;

    Packet pkt;
    pkt.id = next_packet_id_++;
    pkt.flow = f;
    pkt.subscriber = fr.subscriber;
    pkt.size_bits = fr.spec.packet_size_bits;
    pkt.delay_class = static_cast<uint8_t>(fr.spec.delay_class);
    pkt.created_at = now();
    pkt.marked_at = now();
    metrics_.on_sent(f, pkt.size_bits);
    if (fr.spec.kind == SourceKind::MediaLadder)
        fr.window_sent += 1;

    edge_ingress(f, pkt);

    const TimePoint next = now() + gap_for_rate(fr.spec.packet_size_bits, fr.rate_bps);
    if (next < fr.spec.stop)
        events_.schedule(next, [this, f] { emit(f); });
}

void Sim::edge_ingress(int f, Packet pkt) {
    FlowRuntime& fr = flows_[f];
    if (cfg_.model == ServiceModelKind::IncentiveBased) {
        SubscriberRuntime& sub = subscribers_[fr.subscriber];
        if (!sub.bucket.police(pkt.size_bits, now())) {
            drop(pkt, DropReason::Policer, cfg_.topology.links[fr.path[0]].src);
            return;
        }
        const int split = cfg_.params.nbr_split_equal ? sub.active_flows : 1;
        mark(pkt, fr.meter, sub.contract, classes_.at(fr.spec.delay_class), split, now());
        metrics_.on_marked(f, pkt.drop_priority);
        if (trace_) {
            const uint8_t wire = encode_marking(pkt.delay_class, pkt.drop_priority);
            const auto [phb, up] = export_marking(pkt.delay_class, pkt.drop_priority);
            trace_->mark_event(now(), cfg_.topology.links[fr.path[0]].src, fr.spec.id, wire,
                               dscp_for_phb(phb).value, up.value);
        }
    }
    offer(fr.path[0], std::move(pkt));
}

void Sim::offer(size_t link_idx, Packet pkt) {
    LinkRuntime& link = links_[link_idx];
    const EnqueueResult res = link.queue->enqueue(pkt, now());
    if (!res.accepted) {
        drop(pkt, res.reason, link.def.src);
        return;
    }
    trace_node(link.def.src, pkt, "ENQ");
    if (!link.busy)
        kick(link_idx);
}

void Sim::kick(size_t link_idx) {
    LinkRuntime& link = links_[link_idx];
    if (link.busy)
        return;
    auto pkt = link.queue->dequeue();
    if (!pkt)
        return;
    trace_node(link.def.src, *pkt, "DEQ");
    link.busy = true;
    link.in_service = *pkt;
    events_.schedule(now() + serialization_delay(pkt->size_bits, link.def.capacity_bps),
                     [this, link_idx] { tx_done(link_idx); });
}

void Sim::tx_done(size_t link_idx) {
    LinkRuntime& link = links_[link_idx];
    Packet pkt = *link.in_service;
    link.in_service.reset();
    link.busy = false;

    pkt.fixed_delay +=
        serialization_delay(pkt.size_bits, link.def.capacity_bps) + link.def.propagation;
    flows_[pkt.flow].on_wire += 1;
    events_.schedule(now() + link.def.propagation,
                     [this, link_idx, pkt] { arrive(link_idx, pkt); });
    kick(link_idx);
}

void Sim::arrive(size_t link_idx, Packet pkt) {
    FlowRuntime& fr = flows_[pkt.flow];
    fr.on_wire -= 1;
    pkt.hop += 1;
    if (pkt.hop >= fr.path.size()) {
        metrics_.on_delivered(pkt.flow, pkt.size_bits, pkt.created_at, now(), pkt.fixed_delay,
                              window_start());
        return;
    }
    (void)link_idx;
    offer(fr.path[pkt.hop], std::move(pkt));
}

void Sim::drop(const Packet& pkt, DropReason reason, const std::string& node) {
    metrics_.on_dropped(pkt.flow, reason);
    if (trace_ && reason != DropReason::Policer) {
        const char* event = reason == DropReason::PriorityBelowThreshold ? "DROP_PRI"
                            : reason == DropReason::QueueFull            ? "DROP_FULL"
                            : reason == DropReason::ClassLimit           ? "DROP_LIM"
                                                                         : "DROP_ACT";
        trace_->node_event(now(), node, flow_name(pkt.flow), pkt.delay_class, pkt.drop_priority,
                           event);
    }
    // Sources learn about the loss one round trip later.
    if (cfg_.model != ServiceModelKind::ConnectionOriented) {
        const int f = pkt.flow;
        events_.schedule(now() + cfg_.params.feedback_rtt, [this, f] {
            flows_[f].drops_pending += 1;
            flows_[f].window_drops += 1;
        });
    }
}

void Sim::aimd_tick(int f) {
    FlowRuntime& fr = flows_[f];
    if (!fr.active)
        return;
    DropFeedback fb{fr.spec.id, fr.drops_pending, now()};
    fr.drops_pending = 0;
    fr.rate_bps = aimd_step(fr.rate_bps, fb, fr.spec.aimd);
    events_.schedule(now() + fr.spec.aimd.tick, [this, f] { aimd_tick(f); });
}

void Sim::media_window(int f) {
    FlowRuntime& fr = flows_[f];
    if (!fr.active)
        return;
    const double loss_ratio =
        fr.window_sent > 0
            ? static_cast<double>(fr.window_drops) / static_cast<double>(fr.window_sent)
            : 0.0;
    fr.rung = media_adapt(fr.rung, loss_ratio, fr.spec.media);
    fr.rate_bps = static_cast<double>(fr.spec.media.rungs_bps[fr.rung]);
    fr.window_sent = 0;
    fr.window_drops = 0;
    events_.schedule(now() + fr.spec.media.window, [this, f] { media_window(f); });
}

// --- connections ------------------------------------------------------------

AdmissionState& Sim::admission_for(size_t link_idx) {
    auto it = admission_.find(link_idx);
    if (it == admission_.end()) {
        auto state = std::make_unique<AdmissionState>(
            links_[link_idx].def.capacity_bps, cfg_.params.utilization_factor,
            cfg_.params.waiting_queue.enabled,
            static_cast<size_t>(cfg_.params.waiting_queue.limit));
        it = admission_.emplace(link_idx, std::move(state)).first;
    }
    return *it->second;
}

void Sim::schedule_workload_arrival(size_t w) {
    WorkloadRuntime& wr = workloads_[w];
    const double gap_s = wr.arrivals.exponential(1.0 / wr.spec.arrival_rate_per_s);
    const TimePoint at = now() + duration_from_seconds(gap_s);
    if (at >= wr.spec.stop)
        return;
    events_.schedule(at, [this, w] { workload_arrival(w); });
}

void Sim::workload_arrival(size_t w) {
    WorkloadRuntime& wr = workloads_[w];
    metrics_.on_connection_attempt();

    ConnectionRequest req;
    req.connection_id = wr.spec.id + "#" + std::to_string(wr.next_serial++);
    req.peak_rate_bps = wr.spec.peak_rate_bps;
    req.delay_class = wr.spec.delay_class;
    req.holding = duration_from_seconds(wr.holding.exponential(wr.spec.mean_holding_s));
    req.arrival = now();

    AdmissionState& adm = admission_for(wr.link_idx);
    switch (adm.admit(req)) {
    case AdmitOutcome::Admitted:
        metrics_.on_connection_admitted();
        start_connection(req, wr.link_idx, wr.spec.send_traffic, wr.spec);
        break;
    case AdmitOutcome::Queued: {
        metrics_.on_connection_queued();
        const std::string id = req.connection_id;
        const size_t link_idx = wr.link_idx;
        events_.schedule(now() + cfg_.params.waiting_queue.timeout, [this, id, link_idx] {
            // Still waiting after the timeout: reject.
            if (admission_for(link_idx).remove_waiting(id)) {
                metrics_.on_connection_timeout();
                metrics_.on_connection_rejected();
            }
        });
        break;
    }
    case AdmitOutcome::Rejected:
        metrics_.on_connection_rejected();
        break;
    }
    schedule_workload_arrival(w);
}

void Sim::start_connection(const ConnectionRequest& req, size_t link_idx, bool send_traffic,
                           const ConnectionWorkload& spec) {
    live_connections_[req.connection_id] = {link_idx, true};
    const Duration holding = req.holding.value_or(cfg_.duration);
    const std::string id = req.connection_id;
    events_.schedule(now() + holding, [this, id, link_idx] { end_connection(id, link_idx); });

    if (!send_traffic)
        return;
    FlowRuntime fr;
    fr.spec.id = req.connection_id;
    fr.spec.kind = SourceKind::Cbr;
    fr.spec.route = {links_[link_idx].def.src, links_[link_idx].def.dst};
    fr.spec.start = now();
    fr.spec.stop = now() + holding;
    fr.spec.packet_size_bits = spec.packet_size_bits;
    fr.spec.delay_class = spec.delay_class;
    fr.spec.initial_rate_bps = static_cast<double>(req.peak_rate_bps);
    fr.path = {link_idx};
    fr.rate_bps = fr.spec.initial_rate_bps;
    const int f = metrics_.add_flow(fr.spec.id, fr.spec.delay_class);
    flows_.push_back(std::move(fr));
    activate_flow(f);
    events_.schedule(flows_[f].spec.stop, [this, f] { deactivate_flow(f); });
}

void Sim::end_connection(const std::string& connection_id, size_t link_idx) {
    auto it = live_connections_.find(connection_id);
    if (it == live_connections_.end() || !it->second.second)
        return;
    it->second.second = false;
    for (const ConnectionRequest& promoted : admission_for(link_idx).release(connection_id)) {
        metrics_.on_connection_admitted();
        // The promoted request's workload parameters are those of the
        // workload that created it; look it up by id prefix.
        for (const auto& wr : workloads_) {
            if (promoted.connection_id.rfind(wr.spec.id + "#", 0) == 0) {
                start_connection(promoted, wr.link_idx, wr.spec.send_traffic, wr.spec);
                break;
            }
        }
    }
}

// --- actions ----------------------------------------------------------------

void Sim::apply_action(const QosAction& action) {
    if (!action_valid(action.level, action.kind))
        throw InvalidActionForLevel(std::string("impossible action cell (") +
                                    to_string(action.level) + ", " + to_string(action.kind) +
                                    ")");
    std::string effect;
    switch (action.level) {
    case ActionLevel::Subscriber: effect = act_subscriber(action); break;
    case ActionLevel::Device: effect = act_device(action); break;
    case ActionLevel::Aggregate: effect = "bookkeeping"; break;
    case ActionLevel::Connection: effect = act_connection(action); break;
    case ActionLevel::Packet: effect = act_packet(action); break;
    }
    metrics_.record_action(
        {now(), to_string(action.level), to_string(action.kind), action.target, effect});
}

std::string Sim::act_subscriber(const QosAction& a) {
    auto idx = cfg_.subscriber_index(a.target);
    if (!idx)
        throw UnknownTarget("subscriber " + a.target);
    SubscriberRuntime& sub = subscribers_[*idx];
    switch (a.kind) {
    case ActionKind::ServeImmediately:
        sub.attached = true;
        return "subscriber attached";
    case ActionKind::ChangeStatus: {
        std::string effect = "status";
        if (auto it = a.str_params.find("price_class"); it != a.str_params.end()) {
            sub.contract.price_class = it->second;
            effect += " price_class=" + it->second;
        }
        if (auto it = a.num_params.find("nbr_bps"); it != a.num_params.end()) {
            if (it->second >= 1.0) {
                sub.contract.nominal_bit_rate_bps = static_cast<int64_t>(it->second);
                effect += " nbr_bps=" + std::to_string(sub.contract.nominal_bit_rate_bps);
            } else {
                effect += " nbr_bps unchanged (must be positive)";
            }
        }
        return effect;
    }
    case ActionKind::LimitSize: {
        auto it = a.num_params.find("access_cap_bps");
        if (it == a.num_params.end())
            return "no access_cap_bps parameter; unchanged";
        sub.contract.access_rate_cap_bps = static_cast<int64_t>(it->second);
        sub.bucket.set_rate(sub.contract.access_rate_cap_bps, cfg_.params.feedback_rtt, now());
        return "access cap -> " + std::to_string(sub.contract.access_rate_cap_bps) + " bps";
    }
    case ActionKind::Reject: {
        sub.attached = false;
        int killed = 0;
        for (size_t f = 0; f < flows_.size(); ++f) {
            if (flows_[f].subscriber == static_cast<int>(*idx) && !flows_[f].killed) {
                kill_flow(static_cast<int>(f));
                ++killed;
            }
        }
        return "detached; killed " + std::to_string(killed) + " flows";
    }
    default:
        return "bookkeeping";
    }
}

std::string Sim::act_device(const QosAction& a) {
    if (a.kind != ActionKind::Reject)
        return "bookkeeping";
    int killed = 0;
    for (size_t f = 0; f < flows_.size(); ++f) {
        if (flows_[f].spec.device_id == a.target && !flows_[f].killed) {
            kill_flow(static_cast<int>(f));
            ++killed;
        }
    }
    if (killed == 0)
        throw UnknownTarget("device " + a.target + " has no flows");
    return "disconnected; killed " + std::to_string(killed) + " flows";
}

std::string Sim::act_connection(const QosAction& a) {
    size_t link_idx = links_.size();
    for (size_t i = 0; i < links_.size(); ++i)
        if (links_[i].def.id == a.target)
            link_idx = i;
    if (link_idx == links_.size())
        throw UnknownTarget("link " + a.target);
    if (cfg_.model != ServiceModelKind::ConnectionOriented)
        return "no admission state under this service model";

    AdmissionState& adm = admission_for(link_idx);
    switch (a.kind) {
    case ActionKind::ServeImmediately: {
        // Scripted connection attempt.
        ConnectionRequest req;
        req.connection_id = "action#" + std::to_string(next_packet_id_++);
        const auto peak = a.num_params.find("peak_rate_bps");
        req.peak_rate_bps = peak != a.num_params.end() ? static_cast<int64_t>(peak->second)
                                                       : links_[link_idx].def.capacity_bps / 10;
        const auto hold = a.num_params.find("holding_s");
        req.holding = duration_from_seconds(
            hold != a.num_params.end() ? hold->second : 1.0);
        req.arrival = now();
        metrics_.on_connection_attempt();
        switch (adm.admit(req)) {
        case AdmitOutcome::Admitted: {
            metrics_.on_connection_admitted();
            ConnectionWorkload synth;
            synth.packet_size_bits = 12'000;
            synth.delay_class = cfg_.params.num_delay_classes - 1;
            start_connection(req, link_idx, false, synth);
            return "connection " + req.connection_id + " admitted";
        }
        case AdmitOutcome::Queued:
            metrics_.on_connection_queued();
            return "connection " + req.connection_id + " queued";
        case AdmitOutcome::Rejected:
            metrics_.on_connection_rejected();
            return "connection " + req.connection_id + " rejected";
        }
        return "unreachable";
    }
    case ActionKind::Reject: {
        auto head = adm.waiting_head();
        if (!head)
            return "waiting queue empty; nothing rejected";
        adm.remove_waiting(head->connection_id);
        metrics_.on_connection_rejected();
        return "rejected pending " + head->connection_id;
    }
    default:
        return "bookkeeping";
    }
}

std::string Sim::act_packet(const QosAction& a) {
    size_t link_idx = links_.size();
    for (size_t i = 0; i < links_.size(); ++i)
        if (links_[i].def.id == a.target)
            link_idx = i;
    if (link_idx == links_.size())
        throw UnknownTarget("link " + a.target);

    switch (a.kind) {
    case ActionKind::Reject: {
        auto pkt = links_[link_idx].queue->dequeue();
        if (!pkt)
            return "queue empty; nothing dropped";
        metrics_.on_dropped(pkt->flow, DropReason::Action);
        return "dropped packet " + std::to_string(pkt->id) + " of " + flow_name(pkt->flow);
    }
    case ActionKind::ServeImmediately:
        kick(link_idx);
        return "transmission kicked";
    case ActionKind::ChangeStatus:
        return "re-marking disabled in the core; bookkeeping only";
    default:
        return "bookkeeping";
    }
}

} // namespace

Report run_scenario(const ScenarioConfig& config, uint64_t seed, TraceSink* trace) {
    Sim sim(config, seed, trace);
    return sim.run();
}

} // namespace simqos
