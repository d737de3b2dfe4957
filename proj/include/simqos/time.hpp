// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_TIME_HPP
#define SIMQOS_TIME_HPP

#include <cstdint>
#include <compare>

namespace simqos {

// Simulation time is integer nanoseconds since run start. Integer time keeps
// event ordering exact and runs reproducible across platforms.
using Duration = int64_t; // nanoseconds

struct TimePoint {
    Duration ns = 0;

    constexpr auto operator<=>(const TimePoint&) const = default;

    constexpr TimePoint operator+(Duration d) const { return TimePoint{ns + d}; }
    constexpr Duration operator-(TimePoint other) const { return ns - other.ns; }

    constexpr double seconds() const { return static_cast<double>(ns) * 1e-9; }
};

constexpr Duration nanoseconds(int64_t v) { return v; }
constexpr Duration microseconds(int64_t v) { return v * 1'000; }
constexpr Duration milliseconds(int64_t v) { return v * 1'000'000; }
constexpr Duration seconds(int64_t v) { return v * 1'000'000'000; }

// Round a duration given in seconds to whole nanoseconds.
Duration duration_from_seconds(double s);

// Time to serialize `bits` onto a link of `rate_bps`, rounded to nearest ns.
Duration serialization_delay(int64_t bits, int64_t rate_bps);

// Inter-departure gap for a (possibly fractional) source rate in bits/s.
Duration gap_for_rate(int64_t packet_bits, double rate_bps);

} // namespace simqos

#endif
