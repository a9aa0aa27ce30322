#pragma once

#include <cstdint>
#include <functional>

#include "qwalk/graph.hpp"

namespace qwalk {

// Graph for one upper-triangle edge mask. Bit k of `mask` is the pair
// (i, j) with i < j in column order (j ascending, then i ascending) — the
// same order graph6 serializes.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// All labeled simple graphs on n vertices (n <= 7), mask-ascending, filtered
// by connectivity when requested.
void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&)>& fn);

// Convenience count, same filter.
std::uint64_t count_labeled_graphs(int n, bool connected_only);

} // namespace qwalk
