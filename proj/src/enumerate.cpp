#include "qwalk/enumerate.hpp"

#include <stdexcept>

namespace qwalk {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1)
                g.add_edge(i, j);
    return g;
}

void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("enumerate_labeled_graphs: n must be in [0, 7]");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        if (connected_only && !is_connected(g))
            continue;
        fn(g);
    }
}

std::uint64_t count_labeled_graphs(int n, bool connected_only) {
    std::uint64_t count = 0;
    enumerate_labeled_graphs(n, connected_only, [&](const Graph&) { ++count; });
    return count;
}

} // namespace qwalk
