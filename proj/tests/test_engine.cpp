// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include <doctest.h>

#include <string>
#include <vector>

#include "simqos/errors.hpp"
#include "simqos/event_queue.hpp"
#include "simqos/metrics.hpp"
#include "simqos/rng.hpp"
#include "simqos/scenario.hpp"
#include "simqos/sim.hpp"
#include "simqos/topology.hpp"

using namespace simqos;

TEST_SUITE_BEGIN("engine");

TEST_CASE("events dispatch in (time, insertion) order") {
    EventQueue q;
    std::vector<int> order;
    q.schedule(TimePoint{50}, [&] { order.push_back(3); });
    q.schedule(TimePoint{10}, [&] { order.push_back(1); });
    q.schedule(TimePoint{10}, [&] { order.push_back(2); }); // same time, later insertion
    q.run_until(TimePoint{100});
    CHECK(order == std::vector<int>{1, 2, 3});
    CHECK(q.now() == TimePoint{100});
}

TEST_CASE("simultaneous events keep FIFO order even when scheduled from handlers") {
    EventQueue q;
    std::vector<int> order;
    q.schedule(TimePoint{10}, [&] {
        order.push_back(1);
        q.schedule(TimePoint{10}, [&] { order.push_back(3); });
    });
    q.schedule(TimePoint{10}, [&] { order.push_back(2); });
    q.run_until(TimePoint{10});
    CHECK(order == std::vector<int>{1, 2, 3});
}

TEST_CASE("scheduling into the past is an event-order violation") {
    EventQueue q;
    q.schedule(TimePoint{5}, [&] {
        CHECK_THROWS_AS(q.schedule(TimePoint{1}, [] {}), InternalEventOrderViolation);
    });
    q.run_until(TimePoint{10});
}

TEST_CASE("events beyond the horizon stay pending") {
    EventQueue q;
    int fired = 0;
    q.schedule(TimePoint{100}, [&] { ++fired; });
    q.schedule(TimePoint{101}, [&] { ++fired; });
    q.run_until(TimePoint{100}); // inclusive end
    CHECK(fired == 1);
    CHECK(q.pending() == 1);
}

TEST_CASE("transmit arrival times") {
    Link link{"l", "a", "b", 12'000'000, milliseconds(1)};
    Packet p;

    SUBCASE("zero size is pure propagation") {
        p.size_bits = 0;
        CHECK(transmit(link, p, TimePoint{0}) == TimePoint{milliseconds(1)});
    }
    SUBCASE("12000 bits over 12 Mbit/s adds 1 ms serialization") {
        p.size_bits = 12'000;
        CHECK(transmit(link, p, TimePoint{0}) == TimePoint{milliseconds(2)});
    }
    SUBCASE("1.5 Mbit over 1.5 Mbit/s with zero propagation is one second") {
        Link slow{"s", "a", "b", 1'500'000, 0};
        p.size_bits = 1'500'000;
        CHECK(transmit(slow, p, TimePoint{100}) == TimePoint{seconds(1) + 100});
    }
}

TEST_CASE("named rng substreams are independent and reproducible") {
    RngStream a1(42, "source/a");
    RngStream a2(42, "source/a");
    RngStream b(42, "source/b");
    const uint64_t first_a = a1.next_u64();
    CHECK(first_a == a2.next_u64());
    CHECK(first_a != b.next_u64());

    RngStream other_seed(43, "source/a");
    CHECK(first_a != other_seed.next_u64());

    RngStream u(7, "u");
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

namespace {

const char* kCbrScenario = R"({
  "duration_s": 10,
  "service_model": "best_effort",
  "topology": {
    "nodes": ["a", "b"],
    "links": [{"id": "ab", "src": "a", "dst": "b", "capacity_bps": 10000000, "propagation_us": 1000}]
  },
  "subscribers": [{"id": "s1", "nbr_bps": 1000000, "access_cap_bps": 2000000}],
  "sources": [{"id": "f1", "subscriber": "s1", "kind": "cbr", "route": ["a", "b"],
               "rate_bps": 1000000, "packet_size_bits": 10000}]
})";

ScenarioConfig parse_ok(const std::string& text) {
    ParseResult r = parse_scenario(text);
    REQUIRE_MESSAGE(r.ok(), [&] {
        std::string all;
        for (const auto& e : r.errors)
            all += e.str() + "; ";
        return all;
    }());
    return *r.config;
}

} // namespace

TEST_CASE("empty scenario produces an all-zero report") {
    ScenarioConfig cfg = parse_ok(R"({
      "duration_s": 10,
      "service_model": "best_effort",
      "topology": {"nodes": ["a", "b"],
                   "links": [{"id": "ab", "src": "a", "dst": "b", "capacity_bps": 1000000}]}
    })");
    const Report report = run_scenario(cfg, 1);
    CHECK(report.flows.empty());
    CHECK(report.connections.attempts == 0);
}

TEST_CASE("uncongested CBR flow delivers everything") {
    ScenarioConfig cfg = parse_ok(kCbrScenario);
    const Report report = run_scenario(cfg, 1);
    REQUIRE(report.flows.size() == 1);
    const FlowMetrics& f = report.flows[0];
    CHECK(f.dropped_total() == 0);
    CHECK(f.delivered_packets + f.in_flight_at_end == f.sent_packets);
    // 1 Mbit/s of 10 kbit packets for 10 s: 1000 packets, at most one in flight.
    CHECK(f.sent_packets == 1000);
    CHECK(f.delivered_bits + f.in_flight_at_end * 10'000 == f.sent_bits);
}

TEST_CASE("identical seed gives byte-identical reports") {
    ScenarioConfig cfg = parse_ok(kCbrScenario);
    const Report r1 = run_scenario(cfg, 42);
    const Report r2 = run_scenario(cfg, 42);
    CHECK(flows_csv(r1) == flows_csv(r2));
    CHECK(classes_csv(r1) == classes_csv(r2));
    CHECK(r1.scenario_echo == r2.scenario_echo);
}

TEST_SUITE_END();
