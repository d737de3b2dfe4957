// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_ERRORS_HPP
#define SIMQOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simqos {

// Scenario content rejected before a run starts.
struct InvalidScenario : std::runtime_error {
    explicit InvalidScenario(const std::string& msg) : std::runtime_error(msg) {}
};

// Contract with a non-positive nominal bit rate reached the marker.
struct InvalidContract : std::invalid_argument {
    explicit InvalidContract(const std::string& msg) : std::invalid_argument(msg) {}
};

// The event loop observed a clock moving backward. Always a simulator bug.
struct InternalEventOrderViolation : std::logic_error {
    explicit InternalEventOrderViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Packet offered to a node that has no queue for its delay class.
struct UnknownClass : std::invalid_argument {
    explicit UnknownClass(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownConnection : std::invalid_argument {
    explicit UnknownConnection(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidActionForLevel : std::invalid_argument {
    explicit InvalidActionForLevel(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownTarget : std::invalid_argument {
    explicit UnknownTarget(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownQci : std::out_of_range {
    explicit UnknownQci(const std::string& msg) : std::out_of_range(msg) {}
};

struct UnknownPhb : std::invalid_argument {
    explicit UnknownPhb(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownDscp : std::invalid_argument {
    explicit UnknownDscp(const std::string& msg) : std::invalid_argument(msg) {}
};

// Per-flow packet accounting failed to balance at finalize. Simulator bug.
struct ConservationViolation : std::logic_error {
    explicit ConservationViolation(const std::string& msg) : std::logic_error(msg) {}
};

struct AllZero : std::invalid_argument {
    explicit AllZero(const std::string& msg) : std::invalid_argument(msg) {}
};

struct EmptySamples : std::invalid_argument {
    explicit EmptySamples(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace simqos

#endif
