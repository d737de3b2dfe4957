// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_SIM_HPP
#define SIMQOS_SIM_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include "simqos/metrics.hpp"
#include "simqos/scenario.hpp"

namespace simqos {

// Line-oriented trace sinks. Node events carry
//   time_ns,node_id,flow_id,class,priority,event
// with event one of ENQ, DEQ, DROP_PRI, DROP_FULL (DROP_LIM in the static
// class-limit mode). Mark events carry the 6-bit wire field of an edge
// marking together with its DSCP / user-priority export.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void node_event(TimePoint t, const std::string& node, const std::string& flow,
                            int delay_class, int priority, const char* event) = 0;
    virtual void mark_event(TimePoint t, const std::string& node, const std::string& flow,
                            uint8_t wire, int dscp, int up) = 0;
};

class StringTraceSink : public TraceSink {
public:
    StringTraceSink() {
        node_lines << "time_ns,node_id,flow_id,class,priority,event\n";
        mark_lines << "time_ns,node_id,flow_id,wire,dscp,up\n";
    }

    void node_event(TimePoint t, const std::string& node, const std::string& flow,
                    int delay_class, int priority, const char* event) override {
        node_lines << t.ns << ',' << node << ',' << flow << ',' << delay_class << ','
                   << priority << ',' << event << '\n';
    }

    void mark_event(TimePoint t, const std::string& node, const std::string& flow, uint8_t wire,
                    int dscp, int up) override {
        mark_lines << t.ns << ',' << node << ',' << flow << ',' << static_cast<int>(wire) << ','
                   << dscp << ',' << up << '\n';
    }

    std::ostringstream node_lines;
    std::ostringstream mark_lines;
};

// Execute one scenario under one seed. Pure in (config, seed): repeated runs
// produce identical reports. The config must come from parse_scenario (or be
// equally well-formed). Throws InvalidScenario for structural problems the
// parser would have caught, ConservationViolation for accounting bugs.
Report run_scenario(const ScenarioConfig& config, uint64_t seed, TraceSink* trace = nullptr);

} // namespace simqos

#endif
