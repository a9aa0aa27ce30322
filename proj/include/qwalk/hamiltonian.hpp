#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qwalk/graph.hpp"

namespace qwalk {

// Dense square matrix over arbitrary-precision integers. Desk-scale n keeps
// this cheap and lets the characteristic polynomial stay exact.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int size() const { return n_; }
    mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const mpz_class& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    static IntMatrix identity(int n);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<mpz_class> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
mpz_class trace(const IntMatrix& m);

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, WeightedAdjacency, Custom };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

// The matrix class under analysis: symmetric, integer, rows and columns
// indexed by the vertices, off-diagonal entry nonzero exactly on edges, and
// all nonzero off-diagonal entries sharing one sign.
struct Hamiltonian {
    MatrixKind kind = MatrixKind::Adjacency;
    Graph graph;
    IntMatrix entries;

    int size() const { return entries.size(); }
};

// Adjacency: A_{uv} = w(u,v). Laplacian: D - A. Signless: D + A, with the
// diagonal of D holding weighted degrees. WeightedAdjacency is Adjacency
// under a tag that records the weighted intent.
Hamiltonian build(const Graph& g, MatrixKind kind);

// Custom matrices must pass validate_matrix.
Hamiltonian build_custom(const Graph& g, IntMatrix entries);

// Checks symmetry, the zero-pattern agreement with the graph, and the
// shared off-diagonal sign; throws naming the offending entry.
void validate_matrix(const Graph& g, const IntMatrix& m);

// Exact tr(M^2); equals 2m for the adjacency matrix of an unweighted graph.
mpz_class trace_square(const Hamiltonian& h);

} // namespace qwalk
