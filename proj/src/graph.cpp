#include "qwalk/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qwalk {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("graph: vertex count must be non-negative");
}

void Graph::add_edge(int u, int v, long long weight) {
    if (u == v)
        throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range: {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
    if (weight < 1)
        throw std::invalid_argument("graph: edge weight must be >= 1");
    if (u > v)
        std::swap(u, v);
    Edge e{u, v, weight};
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e,
                                [](const Edge& a, const Edge& b) {
                                    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                                });
    if (pos != edges_.end() && pos->u == u && pos->v == v)
        throw std::invalid_argument("graph: duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    edges_.insert(pos, e);
}

bool Graph::has_edge(int u, int v) const { return weight(u, v) != 0; }

long long Graph::weight(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    Edge key{u, v, 1};
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), key,
                                [](const Edge& a, const Edge& b) {
                                    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                                });
    if (pos != edges_.end() && pos->u == u && pos->v == v)
        return pos->w;
    return 0;
}

bool Graph::is_weighted() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w != 1; });
}

std::vector<std::vector<int>> Graph::adjacency_list() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

long long Graph::degree(int u) const {
    long long d = 0;
    for (const Edge& e : edges_)
        if (e.u == u || e.v == u)
            d += e.w;
    return d;
}

Graph path(int k) {
    if (k < 1)
        throw std::invalid_argument("path: k must be >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int k) {
    if (k < 3)
        throw std::invalid_argument("cycle: k must be >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph complete(int k) {
    if (k < 1)
        throw std::invalid_argument("complete: k must be >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    if (leaves < 1)
        throw std::invalid_argument("star: leaf count must be >= 1");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph hypercube(int d) {
    if (d < 0)
        throw std::invalid_argument("hypercube: dimension must be >= 0");
    if (d > 30)
        throw std::invalid_argument("hypercube: dimension too large");
    int n = 1 << d;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b) {
            int v = u ^ (1 << b);
            if (u < v)
                g.add_edge(u, v);
        }
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.is_weighted() || h.is_weighted())
        throw std::invalid_argument("cartesian_product: weighted inputs are not supported");
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph p(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (const Edge& e : h.edges())
            p.add_edge(u * nh + e.u, u * nh + e.v);
    for (const Edge& e : g.edges())
        for (int v = 0; v < nh; ++v)
            p.add_edge(e.u * nh + v, e.v * nh + v);
    return p;
}

Graph cartesian_power(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("cartesian_power: k must be >= 1");
    Graph p = g;
    for (int i = 1; i < k; ++i)
        p = cartesian_product(p, g);
    return p;
}

DistanceTable distances(const Graph& g, int a) {
    if (a < 0 || a >= g.vertex_count())
        throw std::invalid_argument("distances: source vertex out of range");
    DistanceTable table;
    table.source = a;
    table.dist.assign(g.vertex_count(), DistanceTable::unreachable);
    auto adj = g.adjacency_list();
    std::queue<int> q;
    table.dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (table.dist[v] == DistanceTable::unreachable) {
                table.dist[v] = table.dist[u] + 1;
                q.push(v);
            }
    }
    return table;
}

int eccentricity(const Graph& g, int a) {
    DistanceTable t = distances(g, a);
    int ecc = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (t.dist[v] == DistanceTable::unreachable)
            throw std::invalid_argument("eccentricity: vertex " + std::to_string(v) +
                                        " is unreachable from " + std::to_string(a));
        ecc = std::max(ecc, t.dist[v]);
    }
    return ecc;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    DistanceTable t = distances(g, 0);
    return std::none_of(t.dist.begin(), t.dist.end(),
                        [](int d) { return d == DistanceTable::unreachable; });
}

} // namespace qwalk
