#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qwalk/graph.hpp"

namespace qwalk {

// graph6 codec, short form only (n <= 62): one byte n+63, then
// ceil(n(n-1)/2 / 6) bytes holding the upper-triangle bits in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, MSB first,
// zero-padded, each byte offset by 63.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g); // requires unweighted, n <= 62

// Edge-list text: first line "n m", then m lines "u v [w]" with optional
// positive integer weight.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// Generator specs for the CLI: "p3" / "path:3", "c5" / "cycle:5",
// "k4" / "complete:4", "q3" / "hypercube:3", "star:3", "p3power:2".
Graph parse_generator_spec(std::string_view spec);

} // namespace qwalk
