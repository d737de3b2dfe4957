// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/scenario.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace simqos {

using nlohmann::json;

const char* to_string(ServiceModelKind kind) {
    switch (kind) {
    case ServiceModelKind::ConnectionOriented: return "connection";
    case ServiceModelKind::BestEffort: return "best_effort";
    case ServiceModelKind::IncentiveBased: return "incentive";
    }
    return "?";
}

std::optional<size_t> ScenarioConfig::subscriber_index(const std::string& id) const {
    for (size_t i = 0; i < subscribers.size(); ++i)
        if (subscribers[i].subscriber_id == id)
            return i;
    return std::nullopt;
}

namespace {

constexpr const char* kSyntax = "SyntaxError";
constexpr const char* kUnknownKey = "UnknownKey";
constexpr const char* kRange = "RangeViolation";
constexpr const char* kDangling = "DanglingReference";
constexpr const char* kInvalidAction = "InvalidAction";

// Error-collecting view of one JSON object. Getters record a problem and
// return the fallback so the walk can continue and report everything.
class Obj {
public:
    Obj(const json& j, std::string path, std::vector<ParseError>& errors)
        : j_(&j), path_(std::move(path)), errors_(&errors) {
        if (!j_->is_object()) {
            fail(kRange, "expected an object");
            j_ = nullptr;
        }
    }

    bool valid() const { return j_ != nullptr; }

    void fail(const std::string& kind, const std::string& message, const std::string& sub = "") {
        errors_->push_back({sub.empty() ? path_ : path_ + "." + sub, kind, message});
    }

    // Every key the caller did not declare is an error.
    void finish(std::initializer_list<const char*> known) {
        if (!j_)
            return;
        for (auto it = j_->begin(); it != j_->end(); ++it) {
            bool ok = false;
            for (const char* k : known)
                ok = ok || it.key() == k;
            if (!ok)
                fail(kUnknownKey, "unknown key \"" + it.key() + "\"", it.key());
        }
    }

    bool has(const char* key) const { return j_ && j_->contains(key); }

    const json* raw(const char* key) const {
        if (!j_ || !j_->contains(key))
            return nullptr;
        return &(*j_)[key];
    }

    std::string path_of(const char* key) const { return path_ + "." + key; }

    double number(const char* key, double fallback, bool required, double lo, double hi,
                  bool lo_open = false) {
        const json* v = raw(key);
        if (!v) {
            if (required)
                fail(kRange, "missing required key", key);
            return fallback;
        }
        if (!v->is_number()) {
            fail(kRange, "expected a number", key);
            return fallback;
        }
        const double d = v->get<double>();
        const bool below = lo_open ? d <= lo : d < lo;
        if (below || d > hi) {
            fail(kRange,
                 "value " + std::to_string(d) + " outside " + (lo_open ? "(" : "[") +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]",
                 key);
            return fallback;
        }
        return d;
    }

    int64_t integer(const char* key, int64_t fallback, bool required, int64_t lo, int64_t hi) {
        const json* v = raw(key);
        if (!v) {
            if (required)
                fail(kRange, "missing required key", key);
            return fallback;
        }
        if (!v->is_number_integer()) {
            fail(kRange, "expected an integer", key);
            return fallback;
        }
        const int64_t i = v->get<int64_t>();
        if (i < lo || i > hi) {
            fail(kRange,
                 "value " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]",
                 key);
            return fallback;
        }
        return i;
    }

    bool boolean(const char* key, bool fallback) {
        const json* v = raw(key);
        if (!v)
            return fallback;
        if (!v->is_boolean()) {
            fail(kRange, "expected a boolean", key);
            return fallback;
        }
        return v->get<bool>();
    }

    std::string text(const char* key, const std::string& fallback, bool required) {
        const json* v = raw(key);
        if (!v) {
            if (required)
                fail(kRange, "missing required key", key);
            return fallback;
        }
        if (!v->is_string() || v->get<std::string>().empty()) {
            fail(kRange, "expected a non-empty string", key);
            return fallback;
        }
        return v->get<std::string>();
    }

private:
    const json* j_;
    std::string path_;
    std::vector<ParseError>* errors_;
};

Duration ms_to_dur(double ms) { return duration_from_seconds(ms * 1e-3); }

ModelParams parse_params(const json& j, std::vector<ParseError>& errors, int& num_classes_out) {
    ModelParams p;
    Obj o(j, "params", errors);
    if (!o.valid())
        return p;

    p.meter_tau = ms_to_dur(o.number("meter_tau_ms", 100.0, false, 0.0, 3.6e6, true));
    p.feedback_rtt = ms_to_dur(o.number("feedback_rtt_ms", 20.0, false, 0.0, 3.6e6));
    p.num_delay_classes = static_cast<int>(o.integer("num_delay_classes", 3, false, 2, 3));
    num_classes_out = p.num_delay_classes;

    if (o.has("class_weights")) {
        const json& w = *o.raw("class_weights");
        if (!w.is_array()) {
            o.fail(kRange, "expected an array", "class_weights");
        } else {
            std::vector<int> tenths;
            bool bad = false;
            for (const auto& e : w) {
                const double v = e.is_number() ? e.get<double>() : -1.0;
                const double scaled = v * 10.0;
                if (v <= 0.0 || std::abs(scaled - std::round(scaled)) > 1e-9) {
                    bad = true;
                    break;
                }
                tenths.push_back(static_cast<int>(std::round(scaled)));
            }
            if (bad) {
                o.fail(kRange, "weights must be positive multiples of 0.1", "class_weights");
            } else {
                try {
                    ClassTable::from_tenths(tenths);
                    p.class_weight_tenths = tenths;
                } catch (const std::exception& e) {
                    o.fail(kRange, e.what(), "class_weights");
                }
            }
        }
    } else if (p.num_delay_classes == 2) {
        p.class_weight_tenths = {3, 10};
    }
    if (static_cast<int>(p.class_weight_tenths.size()) != p.num_delay_classes)
        o.fail(kRange, "class_weights length must equal num_delay_classes", "class_weights");

    if (o.has("class_queue_bytes")) {
        const json& q = *o.raw("class_queue_bytes");
        if (!q.is_array()) {
            o.fail(kRange, "expected an array", "class_queue_bytes");
        } else {
            std::vector<int64_t> bytes;
            bool bad = false;
            for (const auto& e : q) {
                if (!e.is_number_integer() || e.get<int64_t>() <= 0) {
                    bad = true;
                    break;
                }
                bytes.push_back(e.get<int64_t>());
            }
            if (bad || static_cast<int>(bytes.size()) != p.num_delay_classes)
                o.fail(kRange, "expected num_delay_classes positive integers",
                       "class_queue_bytes");
            else
                p.class_queue_bytes = bytes;
        }
    } else if (p.num_delay_classes == 2) {
        p.class_queue_bytes = {16'384, 524'288};
    }

    p.best_effort_queue_bytes =
        o.integer("best_effort_queue_bytes", p.best_effort_queue_bytes, false, 1, int64_t{1} << 40);
    p.connection_queue_bytes =
        o.integer("connection_queue_bytes", p.connection_queue_bytes, false, 1, int64_t{1} << 40);
    p.utilization_factor = o.number("utilization_factor", 1.0, false, 0.0, 1.0, true);
    const std::string split = o.text("nbr_split", "equal_active", false);
    if (split != "equal_active" && split != "full")
        o.fail(kRange, "nbr_split must be equal_active or full", "nbr_split");
    p.nbr_split_equal = split != "full";

    if (o.has("waiting_queue")) {
        Obj w(*o.raw("waiting_queue"), "params.waiting_queue", errors);
        if (w.valid()) {
            p.waiting_queue.enabled = w.boolean("enabled", false);
            p.waiting_queue.limit = static_cast<int>(w.integer("limit", 16, false, 1, 1 << 20));
            p.waiting_queue.timeout =
                duration_from_seconds(w.number("timeout_s", 10.0, false, 0.0, 1e6, true));
            w.finish({"enabled", "limit", "timeout_s"});
        }
    }

    p.static_class_limit = o.boolean("static_class_limit", false);
    p.static_class_burst = ms_to_dur(o.number("static_class_burst_ms", 100.0, false, 0.0, 1e6, true));
    if (o.has("static_class_limits_bps")) {
        const json& l = *o.raw("static_class_limits_bps");
        std::vector<int64_t> rates;
        bool bad = !l.is_array();
        if (!bad)
            for (const auto& e : l) {
                if (!e.is_number_integer() || e.get<int64_t>() <= 0) {
                    bad = true;
                    break;
                }
                rates.push_back(e.get<int64_t>());
            }
        if (bad || static_cast<int>(rates.size()) != p.num_delay_classes)
            o.fail(kRange, "expected num_delay_classes positive integers",
                   "static_class_limits_bps");
        else
            p.static_class_limits_bps = rates;
    }
    if (p.static_class_limit && p.static_class_limits_bps.empty())
        o.fail(kRange, "static_class_limit requires static_class_limits_bps",
               "static_class_limit");

    o.finish({"meter_tau_ms", "feedback_rtt_ms", "class_queue_bytes", "num_delay_classes",
              "class_weights", "best_effort_queue_bytes", "connection_queue_bytes",
              "utilization_factor", "waiting_queue", "nbr_split", "static_class_limit",
              "static_class_limits_bps", "static_class_burst_ms"});
    return p;
}

Topology parse_topology(const json& j, std::vector<ParseError>& errors) {
    Topology topo;
    Obj o(j, "topology", errors);
    if (!o.valid())
        return topo;

    const auto read_ids = [&](const char* key, bool required) {
        std::vector<std::string> ids;
        const json* v = o.raw(key);
        if (!v) {
            if (required)
                o.fail(kRange, "missing required key", key);
            return ids;
        }
        if (!v->is_array()) {
            o.fail(kRange, "expected an array of node ids", key);
            return ids;
        }
        for (const auto& e : *v) {
            if (!e.is_string() || e.get<std::string>().empty())
                o.fail(kRange, "node ids must be non-empty strings", key);
            else
                ids.push_back(e.get<std::string>());
        }
        return ids;
    };

    topo.nodes = read_ids("nodes", true);
    topo.edge_nodes = read_ids("edge_nodes", false);

    std::set<std::string> node_set(topo.nodes.begin(), topo.nodes.end());
    if (node_set.size() != topo.nodes.size())
        o.fail(kRange, "duplicate node ids", "nodes");
    for (const auto& e : topo.edge_nodes)
        if (!node_set.count(e))
            o.fail(kDangling, "edge node \"" + e + "\" not in nodes", "edge_nodes");

    const json* links = o.raw("links");
    if (!links) {
        o.fail(kRange, "missing required key", "links");
    } else if (!links->is_array()) {
        o.fail(kRange, "expected an array", "links");
    } else {
        std::set<std::string> link_ids;
        std::set<std::pair<std::string, std::string>> pairs;
        for (size_t i = 0; i < links->size(); ++i) {
            const std::string path = "topology.links[" + std::to_string(i) + "]";
            Obj lo((*links)[i], path, errors);
            if (!lo.valid())
                continue;
            Link link;
            link.id = lo.text("id", "link" + std::to_string(i), true);
            link.src = lo.text("src", "", true);
            link.dst = lo.text("dst", "", true);
            link.capacity_bps = lo.integer("capacity_bps", 1, true, 1, int64_t{1} << 50);
            link.propagation = ms_to_dur(lo.number("propagation_us", 0.0, false, 0.0, 1e9) * 1e-3);
            lo.finish({"id", "src", "dst", "capacity_bps", "propagation_us"});

            if (!link_ids.insert(link.id).second)
                lo.fail(kRange, "duplicate link id \"" + link.id + "\"", "id");
            if (!link.src.empty() && !node_set.count(link.src))
                lo.fail(kDangling, "src node \"" + link.src + "\" not in nodes", "src");
            if (!link.dst.empty() && !node_set.count(link.dst))
                lo.fail(kDangling, "dst node \"" + link.dst + "\" not in nodes", "dst");
            if (!link.src.empty() && link.src == link.dst)
                lo.fail(kRange, "link endpoints must differ", "dst");
            if (!pairs.insert({link.src, link.dst}).second)
                lo.fail(kRange, "duplicate link for node pair", "dst");
            topo.links.push_back(std::move(link));
        }
    }

    o.finish({"nodes", "edge_nodes", "links"});
    return topo;
}

} // namespace

ParseResult parse_scenario(const std::string& text) {
    ParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.errors.push_back({"$", kSyntax, e.what()});
        return result;
    }

    std::vector<ParseError>& errors = result.errors;
    ScenarioConfig cfg;
    Obj root(doc, "$", errors);
    if (!root.valid())
        return result;

    cfg.duration = duration_from_seconds(root.number("duration_s", 1.0, true, 0.0, 1e7, true));
    cfg.warmup_frac = root.number("warmup_frac", 0.2, false, 0.0, 0.999);

    const std::string model = root.text("service_model", "best_effort", true);
    if (model == "best_effort")
        cfg.model = ServiceModelKind::BestEffort;
    else if (model == "incentive")
        cfg.model = ServiceModelKind::IncentiveBased;
    else if (model == "connection")
        cfg.model = ServiceModelKind::ConnectionOriented;
    else
        root.fail(kRange, "service_model must be best_effort, incentive, or connection",
                  "service_model");

    int num_classes = 3;
    if (root.has("params"))
        cfg.params = parse_params(*root.raw("params"), errors, num_classes);

    if (root.has("topology"))
        cfg.topology = parse_topology(*root.raw("topology"), errors);
    else
        root.fail(kRange, "missing required key", "topology");

    if (cfg.model == ServiceModelKind::IncentiveBased && cfg.topology.edge_nodes.empty())
        errors.push_back({"topology.edge_nodes", kRange,
                          "incentive model needs at least one edge node"});

    // Subscribers
    std::set<std::string> subscriber_ids;
    if (root.has("subscribers")) {
        const json& subs = *root.raw("subscribers");
        if (!subs.is_array()) {
            root.fail(kRange, "expected an array", "subscribers");
        } else {
            for (size_t i = 0; i < subs.size(); ++i) {
                Obj so(subs[i], "subscribers[" + std::to_string(i) + "]", errors);
                if (!so.valid())
                    continue;
                SubscriberContract c;
                c.subscriber_id = so.text("id", "sub" + std::to_string(i), true);
                c.nominal_bit_rate_bps = so.integer("nbr_bps", 1, true, 1, int64_t{1} << 50);
                c.access_rate_cap_bps = so.integer("access_cap_bps", c.nominal_bit_rate_bps,
                                                   false, 1, int64_t{1} << 50);
                c.price_class = so.text("price_class", "standard", false);
                so.finish({"id", "nbr_bps", "access_cap_bps", "price_class"});
                if (c.access_rate_cap_bps < c.nominal_bit_rate_bps)
                    so.fail(kRange, "access_cap_bps must be >= nbr_bps", "access_cap_bps");
                if (!subscriber_ids.insert(c.subscriber_id).second)
                    so.fail(kRange, "duplicate subscriber id \"" + c.subscriber_id + "\"", "id");
                cfg.subscribers.push_back(std::move(c));
            }
        }
    }

    // Sources
    std::set<std::string> source_ids;
    std::set<std::string> device_ids;
    if (root.has("sources")) {
        const json& srcs = *root.raw("sources");
        if (!srcs.is_array()) {
            root.fail(kRange, "expected an array", "sources");
        } else {
            for (size_t i = 0; i < srcs.size(); ++i) {
                const std::string path = "sources[" + std::to_string(i) + "]";
                Obj so(srcs[i], path, errors);
                if (!so.valid())
                    continue;
                SourceSpec s;
                s.id = so.text("id", "src" + std::to_string(i), true);
                s.subscriber_id = so.text("subscriber", "", true);
                s.device_id = so.text("device", "", false);
                if (!source_ids.insert(s.id).second)
                    so.fail(kRange, "duplicate source id \"" + s.id + "\"", "id");
                if (!s.device_id.empty())
                    device_ids.insert(s.device_id);
                if (!s.subscriber_id.empty() && !subscriber_ids.count(s.subscriber_id))
                    so.fail(kDangling, "subscriber \"" + s.subscriber_id + "\" not declared",
                            "subscriber");

                const std::string kind = so.text("kind", "cbr", true);
                if (kind == "cbr")
                    s.kind = SourceKind::Cbr;
                else if (kind == "aimd")
                    s.kind = SourceKind::Aimd;
                else if (kind == "media")
                    s.kind = SourceKind::MediaLadder;
                else
                    so.fail(kRange, "kind must be cbr, aimd, or media", "kind");

                const json* route = so.raw("route");
                if (!route || !route->is_array() || route->size() < 2) {
                    so.fail(kRange, "route must list at least two node ids", "route");
                } else {
                    for (const auto& n : *route) {
                        if (!n.is_string()) {
                            so.fail(kRange, "route entries must be node ids", "route");
                            break;
                        }
                        s.route.push_back(n.get<std::string>());
                    }
                    for (size_t h = 0; h < s.route.size(); ++h)
                        if (!cfg.topology.has_node(s.route[h]))
                            so.fail(kDangling, "route node \"" + s.route[h] + "\" not in nodes",
                                    "route");
                    for (size_t h = 0; h + 1 < s.route.size(); ++h)
                        if (cfg.topology.has_node(s.route[h]) &&
                            cfg.topology.has_node(s.route[h + 1]) &&
                            !cfg.topology.link_between(s.route[h], s.route[h + 1]))
                            so.fail(kDangling,
                                    "no link " + s.route[h] + " -> " + s.route[h + 1], "route");
                    if (cfg.model == ServiceModelKind::IncentiveBased && !s.route.empty() &&
                        cfg.topology.has_node(s.route[0]) && !cfg.topology.is_edge(s.route[0]))
                        so.fail(kRange, "route must start at an edge node under the incentive model",
                                "route");
                }

                const double duration_s = static_cast<double>(cfg.duration) * 1e-9;
                s.start = TimePoint{duration_from_seconds(
                    so.number("start_s", 0.0, false, 0.0, duration_s))};
                s.stop = TimePoint{duration_from_seconds(
                    so.number("stop_s", duration_s, false, 0.0, duration_s))};
                if (s.stop <= s.start)
                    so.fail(kRange, "stop_s must exceed start_s", "stop_s");
                s.start_jitter = ms_to_dur(so.number("start_jitter_ms", 0.0, false, 0.0, 1e6));
                s.packet_size_bits =
                    so.integer("packet_size_bits", 12'000, false, 1, 10'000'000);
                s.delay_class = static_cast<int>(
                    so.integer("delay_class", num_classes - 1, false, 0, num_classes - 1));

                // Contract context for rate defaults.
                int64_t cap = 0, nbr = 0;
                if (auto idx = [&]() -> std::optional<size_t> {
                        for (size_t k = 0; k < cfg.subscribers.size(); ++k)
                            if (cfg.subscribers[k].subscriber_id == s.subscriber_id)
                                return k;
                        return std::nullopt;
                    }()) {
                    cap = cfg.subscribers[*idx].access_rate_cap_bps;
                    nbr = cfg.subscribers[*idx].nominal_bit_rate_bps;
                }

                if (s.kind == SourceKind::Cbr) {
                    s.initial_rate_bps = so.number("rate_bps", 0.0, true, 0.0, 1e15, true);
                } else if (s.kind == SourceKind::Aimd) {
                    AimdParams& a = s.aimd;
                    if (so.has("aimd")) {
                        Obj ao(*so.raw("aimd"), path + ".aimd", errors);
                        if (ao.valid()) {
                            a.tick = ms_to_dur(ao.number("tick_ms", 20.0, false, 0.0, 1e6, true));
                            a.additive_bps =
                                ao.integer("additive_bps", 50'000, false, 1, int64_t{1} << 40);
                            a.multiplicative = ao.number("multiplicative", 0.5, false, 0.0, 1.0, true);
                            if (a.multiplicative >= 1.0)
                                ao.fail(kRange, "multiplicative factor must be in (0, 1)",
                                        "multiplicative");
                            a.floor_bps =
                                ao.integer("floor_bps", 16'000, false, 1, int64_t{1} << 40);
                            a.cap_bps = ao.integer("cap_bps", 0, false, 0, int64_t{1} << 50);
                            ao.finish({"tick_ms", "additive_bps", "multiplicative", "floor_bps",
                                       "cap_bps"});
                        }
                    }
                    if (a.cap_bps == 0)
                        a.cap_bps = cap;
                    if (a.cap_bps <= 0)
                        so.fail(kRange, "aimd cap unresolved (no subscriber access cap)", "aimd");
                    else if (a.floor_bps > a.cap_bps)
                        so.fail(kRange, "aimd floor exceeds cap", "aimd");
                    s.initial_rate_bps = so.number(
                        "rate_bps", static_cast<double>(std::max<int64_t>(a.floor_bps, nbr)),
                        false, 1.0, 1e15);
                    if (a.cap_bps > 0 && (s.initial_rate_bps < static_cast<double>(a.floor_bps) ||
                                          s.initial_rate_bps > static_cast<double>(a.cap_bps)))
                        so.fail(kRange, "aimd starting rate outside [floor, cap]", "rate_bps");
                } else if (s.kind == SourceKind::MediaLadder) {
                    if (!so.has("media")) {
                        so.fail(kRange, "media sources need a media block", "media");
                    } else {
                        Obj mo(*so.raw("media"), path + ".media", errors);
                        if (mo.valid()) {
                            MediaParams& m = s.media;
                            const json* rungs = mo.raw("rungs_bps");
                            if (!rungs || !rungs->is_array() || rungs->empty()) {
                                mo.fail(kRange, "rungs_bps must be a non-empty array",
                                        "rungs_bps");
                            } else {
                                for (const auto& r : *rungs) {
                                    if (!r.is_number_integer() || r.get<int64_t>() <= 0) {
                                        mo.fail(kRange, "rungs must be positive integers",
                                                "rungs_bps");
                                        m.rungs_bps.clear();
                                        break;
                                    }
                                    m.rungs_bps.push_back(r.get<int64_t>());
                                }
                                for (size_t k = 0; k + 1 < m.rungs_bps.size(); ++k)
                                    if (m.rungs_bps[k] >= m.rungs_bps[k + 1]) {
                                        mo.fail(kRange, "rungs must strictly increase",
                                                "rungs_bps");
                                        break;
                                    }
                            }
                            m.loss_threshold =
                                mo.number("loss_threshold", 0.02, false, 0.0, 1.0, true);
                            m.window = ms_to_dur(
                                mo.number("window_ms", 1000.0, false, 0.0, 1e6, true));
                            m.initial_rung = static_cast<int>(mo.integer(
                                "initial_rung", 0, false, 0,
                                std::max<int64_t>(0, static_cast<int64_t>(m.rungs_bps.size()) - 1)));
                            mo.finish({"rungs_bps", "loss_threshold", "window_ms",
                                       "initial_rung"});
                        }
                    }
                    if (!s.media.rungs_bps.empty())
                        s.initial_rate_bps =
                            static_cast<double>(s.media.rungs_bps[s.media.initial_rung]);
                }

                so.finish({"id", "subscriber", "device", "kind", "route", "start_s", "stop_s",
                           "start_jitter_ms", "packet_size_bits", "delay_class", "rate_bps",
                           "aimd", "media"});
                cfg.sources.push_back(std::move(s));
            }
        }
    }

    // Connection workloads
    if (root.has("connections")) {
        const json& conns = *root.raw("connections");
        if (!conns.is_array()) {
            root.fail(kRange, "expected an array", "connections");
        } else {
            std::set<std::string> conn_ids;
            for (size_t i = 0; i < conns.size(); ++i) {
                Obj co(conns[i], "connections[" + std::to_string(i) + "]", errors);
                if (!co.valid())
                    continue;
                ConnectionWorkload w;
                w.id = co.text("id", "conn" + std::to_string(i), true);
                w.link_id = co.text("link", "", true);
                w.arrival_rate_per_s = co.number("arrival_rate_per_s", 1.0, true, 0.0, 1e9, true);
                w.mean_holding_s = co.number("mean_holding_s", 1.0, true, 0.0, 1e9, true);
                w.peak_rate_bps = co.integer("peak_rate_bps", 1, true, 1, int64_t{1} << 50);
                const double duration_s = static_cast<double>(cfg.duration) * 1e-9;
                w.start = TimePoint{duration_from_seconds(
                    co.number("start_s", 0.0, false, 0.0, duration_s))};
                w.stop = TimePoint{duration_from_seconds(
                    co.number("stop_s", duration_s, false, 0.0, duration_s))};
                w.send_traffic = co.boolean("send_traffic", true);
                w.packet_size_bits = co.integer("packet_size_bits", 12'000, false, 1, 10'000'000);
                w.delay_class =
                    static_cast<int>(co.integer("delay_class", num_classes - 1, false, 0,
                                                num_classes - 1));
                co.finish({"id", "link", "arrival_rate_per_s", "mean_holding_s", "peak_rate_bps",
                           "start_s", "stop_s", "send_traffic", "packet_size_bits",
                           "delay_class"});
                if (!conn_ids.insert(w.id).second)
                    co.fail(kRange, "duplicate workload id \"" + w.id + "\"", "id");
                bool link_known = false;
                for (const auto& l : cfg.topology.links)
                    link_known = link_known || l.id == w.link_id;
                if (!w.link_id.empty() && !link_known)
                    co.fail(kDangling, "link \"" + w.link_id + "\" not declared", "link");
                cfg.connections.push_back(std::move(w));
            }
        }
    }

    if (cfg.model == ServiceModelKind::ConnectionOriented && !cfg.sources.empty())
        errors.push_back({"sources", kRange,
                          "the connection-oriented model takes connection workloads, not sources"});
    if (cfg.model != ServiceModelKind::ConnectionOriented && !cfg.connections.empty())
        errors.push_back({"connections", kRange,
                          "connection workloads require service_model connection"});

    // Action timeline
    if (root.has("timeline")) {
        const json& tl = *root.raw("timeline");
        if (!tl.is_array()) {
            root.fail(kRange, "expected an array", "timeline");
        } else {
            for (size_t i = 0; i < tl.size(); ++i) {
                const std::string path = "timeline[" + std::to_string(i) + "]";
                Obj to(tl[i], path, errors);
                if (!to.valid())
                    continue;
                QosAction a;
                const double duration_s = static_cast<double>(cfg.duration) * 1e-9;
                a.at = TimePoint{duration_from_seconds(
                    to.number("at_s", 0.0, true, 0.0, duration_s))};
                const std::string level = to.text("level", "", true);
                const std::string kind = to.text("kind", "", true);
                const auto lv = action_level_from_string(level);
                const auto kd = action_kind_from_string(kind);
                if (!lv)
                    to.fail(kRange, "unknown action level \"" + level + "\"", "level");
                if (!kd)
                    to.fail(kRange, "unknown action kind \"" + kind + "\"", "kind");
                if (lv && kd) {
                    a.level = *lv;
                    a.kind = *kd;
                    if (!action_valid(a.level, a.kind))
                        to.fail(kInvalidAction,
                                "(" + level + ", " + kind + ") is an impossible action cell");
                }
                a.target = to.text("target", "", true);
                if (to.has("params")) {
                    Obj po(*to.raw("params"), path + ".params", errors);
                    if (po.valid()) {
                        const json& pj = *to.raw("params");
                        for (auto it = pj.begin(); it != pj.end(); ++it) {
                            if (it.value().is_number())
                                a.num_params[it.key()] = it.value().get<double>();
                            else if (it.value().is_string())
                                a.str_params[it.key()] = it.value().get<std::string>();
                            else
                                po.fail(kRange, "action params must be numbers or strings",
                                        it.key());
                        }
                    }
                }

                // Target resolution for the concretely simulated levels.
                if (lv && !a.target.empty()) {
                    const auto link_known = [&](const std::string& id) {
                        for (const auto& l : cfg.topology.links)
                            if (l.id == id)
                                return true;
                        return false;
                    };
                    switch (*lv) {
                    case ActionLevel::Subscriber:
                        if (!subscriber_ids.count(a.target))
                            to.fail(kDangling, "subscriber \"" + a.target + "\" not declared",
                                    "target");
                        break;
                    case ActionLevel::Device:
                        if (!device_ids.count(a.target))
                            to.fail(kDangling, "device \"" + a.target + "\" not on any source",
                                    "target");
                        break;
                    case ActionLevel::Aggregate:
                    case ActionLevel::Connection:
                    case ActionLevel::Packet:
                        if (!link_known(a.target))
                            to.fail(kDangling, "link \"" + a.target + "\" not declared",
                                    "target");
                        break;
                    }
                }
                to.finish({"at_s", "level", "kind", "target", "params"});
                cfg.timeline.push_back(std::move(a));
            }
        }
    }

    root.finish({"duration_s", "service_model", "warmup_frac", "params", "topology",
                 "subscribers", "sources", "connections", "timeline"});

    if (errors.empty())
        result.config = std::move(cfg);
    return result;
}

std::string canonical_echo(const ScenarioConfig& cfg) {
    json doc;
    doc["duration_s"] = static_cast<double>(cfg.duration) * 1e-9;
    doc["service_model"] = to_string(cfg.model);
    doc["warmup_frac"] = cfg.warmup_frac;

    json params;
    params["meter_tau_ms"] = static_cast<double>(cfg.params.meter_tau) * 1e-6;
    params["feedback_rtt_ms"] = static_cast<double>(cfg.params.feedback_rtt) * 1e-6;
    params["num_delay_classes"] = cfg.params.num_delay_classes;
    {
        json w = json::array();
        for (int t : cfg.params.class_weight_tenths)
            w.push_back(t / 10.0);
        params["class_weights"] = w;
    }
    params["class_queue_bytes"] = cfg.params.class_queue_bytes;
    params["best_effort_queue_bytes"] = cfg.params.best_effort_queue_bytes;
    params["connection_queue_bytes"] = cfg.params.connection_queue_bytes;
    params["utilization_factor"] = cfg.params.utilization_factor;
    params["nbr_split"] = cfg.params.nbr_split_equal ? "equal_active" : "full";
    params["waiting_queue"] = {{"enabled", cfg.params.waiting_queue.enabled},
                               {"limit", cfg.params.waiting_queue.limit},
                               {"timeout_s",
                                static_cast<double>(cfg.params.waiting_queue.timeout) * 1e-9}};
    params["static_class_limit"] = cfg.params.static_class_limit;
    if (!cfg.params.static_class_limits_bps.empty())
        params["static_class_limits_bps"] = cfg.params.static_class_limits_bps;
    doc["params"] = params;

    json topo;
    topo["nodes"] = cfg.topology.nodes;
    topo["edge_nodes"] = cfg.topology.edge_nodes;
    json links = json::array();
    for (const auto& l : cfg.topology.links)
        links.push_back({{"id", l.id},
                         {"src", l.src},
                         {"dst", l.dst},
                         {"capacity_bps", l.capacity_bps},
                         {"propagation_us", static_cast<double>(l.propagation) * 1e-3}});
    topo["links"] = links;
    doc["topology"] = topo;

    json subs = json::array();
    for (const auto& s : cfg.subscribers)
        subs.push_back({{"id", s.subscriber_id},
                        {"nbr_bps", s.nominal_bit_rate_bps},
                        {"access_cap_bps", s.access_rate_cap_bps},
                        {"price_class", s.price_class}});
    doc["subscribers"] = subs;

    json sources = json::array();
    for (const auto& s : cfg.sources) {
        json e;
        e["id"] = s.id;
        e["subscriber"] = s.subscriber_id;
        if (!s.device_id.empty())
            e["device"] = s.device_id;
        e["kind"] = s.kind == SourceKind::Cbr    ? "cbr"
                    : s.kind == SourceKind::Aimd ? "aimd"
                                                 : "media";
        e["route"] = s.route;
        e["start_s"] = s.start.seconds();
        e["stop_s"] = s.stop.seconds();
        e["start_jitter_ms"] = static_cast<double>(s.start_jitter) * 1e-6;
        e["packet_size_bits"] = s.packet_size_bits;
        e["delay_class"] = s.delay_class;
        e["rate_bps"] = s.initial_rate_bps;
        if (s.kind == SourceKind::Aimd)
            e["aimd"] = {{"tick_ms", static_cast<double>(s.aimd.tick) * 1e-6},
                         {"additive_bps", s.aimd.additive_bps},
                         {"multiplicative", s.aimd.multiplicative},
                         {"floor_bps", s.aimd.floor_bps},
                         {"cap_bps", s.aimd.cap_bps}};
        if (s.kind == SourceKind::MediaLadder)
            e["media"] = {{"rungs_bps", s.media.rungs_bps},
                          {"loss_threshold", s.media.loss_threshold},
                          {"window_ms", static_cast<double>(s.media.window) * 1e-6},
                          {"initial_rung", s.media.initial_rung}};
        sources.push_back(e);
    }
    doc["sources"] = sources;

    json conns = json::array();
    for (const auto& w : cfg.connections)
        conns.push_back({{"id", w.id},
                         {"link", w.link_id},
                         {"arrival_rate_per_s", w.arrival_rate_per_s},
                         {"mean_holding_s", w.mean_holding_s},
                         {"peak_rate_bps", w.peak_rate_bps},
                         {"start_s", w.start.seconds()},
                         {"stop_s", w.stop.seconds()},
                         {"send_traffic", w.send_traffic},
                         {"packet_size_bits", w.packet_size_bits},
                         {"delay_class", w.delay_class}});
    doc["connections"] = conns;

    json timeline = json::array();
    for (const auto& a : cfg.timeline) {
        json e;
        e["at_s"] = a.at.seconds();
        e["level"] = to_string(a.level);
        e["kind"] = to_string(a.kind);
        e["target"] = a.target;
        if (!a.num_params.empty() || !a.str_params.empty()) {
            json p;
            for (const auto& [k, v] : a.num_params)
                p[k] = v;
            for (const auto& [k, v] : a.str_params)
                p[k] = v;
            e["params"] = p;
        }
        timeline.push_back(e);
    }
    doc["timeline"] = timeline;

    return doc.dump(2);
}

} // namespace simqos
