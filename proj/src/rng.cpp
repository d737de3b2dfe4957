// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/rng.hpp"

#include <cmath>

namespace simqos {

namespace {

// Finalizer from splitmix64; full-avalanche, invertible.
uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

RngStream::RngStream(uint64_t seed, std::string_view name)
    : name_(name), key_(mix64(seed ^ mix64(fnv1a(name)))) {}

uint64_t RngStream::next_u64() {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RngStream::exponential(double mean) {
    // 1 - u is in (0, 1], so the log is finite.
    return -mean * std::log(1.0 - uniform());
}

} // namespace simqos
