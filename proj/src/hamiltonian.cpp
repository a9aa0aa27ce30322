#include "qwalk/hamiltonian.hpp"

#include <stdexcept>

namespace qwalk {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const int n = a.size();
    if (n != b.size())
        throw std::invalid_argument("IntMatrix multiply: size mismatch");
    IntMatrix c(n);
    mpz_class acc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            acc = 0;
            for (int k = 0; k < n; ++k)
                acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

mpz_class trace(const IntMatrix& m) {
    mpz_class t = 0;
    for (int i = 0; i < m.size(); ++i)
        t += m(i, i);
    return t;
}

std::string to_string(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless";
    case MatrixKind::WeightedAdjacency: return "weighted-adjacency";
    case MatrixKind::Custom: return "custom";
    }
    return "?";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "adjacency") return MatrixKind::Adjacency;
    if (s == "laplacian") return MatrixKind::Laplacian;
    if (s == "signless") return MatrixKind::SignlessLaplacian;
    if (s == "weighted-adjacency") return MatrixKind::WeightedAdjacency;
    if (s == "custom") return MatrixKind::Custom;
    throw std::invalid_argument("unknown matrix kind \"" + s + "\"");
}

Hamiltonian build(const Graph& g, MatrixKind kind) {
    const int n = g.vertex_count();
    IntMatrix m(n);
    switch (kind) {
    case MatrixKind::Adjacency:
    case MatrixKind::WeightedAdjacency:
        for (const Edge& e : g.edges()) {
            const long w = static_cast<long>(e.w); // gmpxx lacks long long overloads
            m(e.u, e.v) = w;
            m(e.v, e.u) = w;
        }
        break;
    case MatrixKind::Laplacian:
        for (const Edge& e : g.edges()) {
            const long w = static_cast<long>(e.w);
            m(e.u, e.v) = -w;
            m(e.v, e.u) = -w;
            m(e.u, e.u) += w;
            m(e.v, e.v) += w;
        }
        break;
    case MatrixKind::SignlessLaplacian:
        for (const Edge& e : g.edges()) {
            const long w = static_cast<long>(e.w);
            m(e.u, e.v) = w;
            m(e.v, e.u) = w;
            m(e.u, e.u) += w;
            m(e.v, e.v) += w;
        }
        break;
    case MatrixKind::Custom:
        throw std::invalid_argument("build: Custom kind requires a caller-supplied matrix; "
                                    "use build_custom");
    }
    return Hamiltonian{kind, g, std::move(m)};
}

Hamiltonian build_custom(const Graph& g, IntMatrix entries) {
    validate_matrix(g, entries);
    return Hamiltonian{MatrixKind::Custom, g, std::move(entries)};
}

void validate_matrix(const Graph& g, const IntMatrix& m) {
    const int n = g.vertex_count();
    if (m.size() != n)
        throw std::invalid_argument("validate_matrix: matrix is " + std::to_string(m.size()) +
                                    "x" + std::to_string(m.size()) + " but the graph has " +
                                    std::to_string(n) + " vertices");
    auto name = [](int i, int j) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    int sign = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("validate_matrix: not symmetric at " + name(i, j));
            const bool edge = g.has_edge(i, j);
            const bool nonzero = m(i, j) != 0;
            if (edge != nonzero)
                throw std::invalid_argument(
                    "validate_matrix: zero pattern disagrees with the graph at " + name(i, j));
            if (nonzero) {
                int s = sgn(m(i, j));
                if (sign == 0)
                    sign = s;
                else if (s != sign)
                    throw std::invalid_argument(
                        "validate_matrix: off-diagonal sign flips at " + name(i, j));
            }
        }
}

mpz_class trace_square(const Hamiltonian& h) {
    const IntMatrix& m = h.entries;
    mpz_class t = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            t += m(i, j) * m(j, i);
    return t;
}

} // namespace qwalk
