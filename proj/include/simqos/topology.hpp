// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_TOPOLOGY_HPP
#define SIMQOS_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simqos/packet.hpp"
#include "simqos/time.hpp"

namespace simqos {

// Directed bit pipe between two nodes.
struct Link {
    std::string id;
    std::string src;
    std::string dst;
    int64_t capacity_bps = 0;  // > 0
    Duration propagation = 0;  // >= 0
};

struct Topology {
    std::vector<std::string> nodes;
    std::vector<std::string> edge_nodes; // where marking happens
    std::vector<Link> links;

    bool has_node(const std::string& id) const;
    bool is_edge(const std::string& id) const;
    // Index into links for the ordered pair, if a link exists.
    std::optional<size_t> link_between(const std::string& src, const std::string& dst) const;
};

// Arrival time at the far end: now + serialization + propagation.
TimePoint transmit(const Link& link, const Packet& packet, TimePoint now);

} // namespace simqos

#endif
