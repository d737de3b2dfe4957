// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/topology.hpp"

#include <algorithm>

namespace simqos {

bool Topology::has_node(const std::string& id) const {
    return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

bool Topology::is_edge(const std::string& id) const {
    return std::find(edge_nodes.begin(), edge_nodes.end(), id) != edge_nodes.end();
}

std::optional<size_t> Topology::link_between(const std::string& src,
                                             const std::string& dst) const {
    for (size_t i = 0; i < links.size(); ++i)
        if (links[i].src == src && links[i].dst == dst)
            return i;
    return std::nullopt;
}

TimePoint transmit(const Link& link, const Packet& packet, TimePoint now) {
    return now + serialization_delay(packet.size_bits, link.capacity_bps) + link.propagation;
}

} // namespace simqos
