#pragma once

#include "spinal/network.hpp"

#include <string>
#include <string_view>

namespace spinal {

/// {"n":..,"k":..,"labeled":..,"vertices":[{"id":..,"kind":..,"label":..}],"arcs":[[u,v],..]}
/// Throws ParseError; syntax errors carry the offending line.
PhyloNetwork parse_network_json(std::string_view text);

/// Single-line JSON unless `pretty` is set.
std::string format_network_json(const PhyloNetwork& net, bool pretty = false);

/// Graphviz digraph; reticulations are boxes, everything else circles.
std::string format_network_dot(const PhyloNetwork& net);

} // namespace spinal
