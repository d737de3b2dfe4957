// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_RNG_HPP
#define SIMQOS_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace simqos {

// Counter-based generator with named substreams. Each substream is keyed by
// (seed, name) and walks its own counter, so adding a traffic source never
// perturbs the draws of any other source.
class RngStream {
public:
    RngStream(uint64_t seed, std::string_view name);

    uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double uniform();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

    // Exponential with the given mean (> 0).
    double exponential(double mean);

    const std::string& name() const { return name_; }

private:
    std::string name_;
    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace simqos

#endif
