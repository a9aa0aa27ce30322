#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qwalk {

struct Edge {
    int u = 0; // u < v always
    int v = 0;
    long long w = 1;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with optional positive integer edge weights.
// Vertices are 0-indexed; edges are stored normalized (u < v) and sorted,
// so structurally equal graphs compare equal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    // Rejects self-loops, out-of-range endpoints, duplicates and weights < 1.
    void add_edge(int u, int v, long long weight = 1);

    bool has_edge(int u, int v) const;
    long long weight(int u, int v) const; // 0 if not an edge

    // True when some edge has weight != 1; an all-ones weighting is the
    // unweighted graph.
    bool is_weighted() const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<std::vector<int>> adjacency_list() const;
    long long degree(int u) const; // weighted degree

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// ---- generators ----------------------------------------------------------

Graph path(int k);     // P_k, k >= 1
Graph cycle(int k);    // C_k, k >= 3
Graph complete(int k); // K_k, k >= 1
Graph star(int leaves); // K_{1,leaves}: center is vertex 0, leaves >= 1
Graph hypercube(int d); // Q_d, 2^d vertices, d*2^(d-1) edges, d >= 0

// Cartesian product; vertex (u, v) is flattened row-major to u*n_h + v, so
// the "far corner" of an iterated power of a path sits at index n-1.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph cartesian_power(const Graph& g, int k); // k >= 1

// ---- metrics -------------------------------------------------------------

struct DistanceTable {
    static constexpr int unreachable = -1;
    int source = 0;
    std::vector<int> dist;
};

// Breadth-first hop counts; weights are ignored on purpose (the eccentricity
// arguments count powers of M, whose support grows one hop per power no
// matter the weights).
DistanceTable distances(const Graph& g, int a);

// Max hop distance from a; throws if some vertex is unreachable.
int eccentricity(const Graph& g, int a);

bool is_connected(const Graph& g);

} // namespace qwalk
