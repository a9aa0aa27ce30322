#pragma once

#include <vector>

#include <gmpxx.h>

#include "qwalk/hamiltonian.hpp"

namespace qwalk {

// Exact integer coefficients of det(xI - M), stored ascending: coeffs[k] is
// the coefficient of x^k, coeffs[n] = 1.
struct CharPoly {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpz_class operator()(const mpz_class& x) const;
    double eval(double x) const;
};

// Fraction-free Faddeev-LeVerrier recurrence; every division by the step
// index is exact over the integers.
CharPoly char_poly(const IntMatrix& m);
CharPoly char_poly(const Hamiltonian& h);

// True iff p(candidate) == 0 exactly.
bool certify_integer_eigenvalue(const CharPoly& p, const mpz_class& candidate);

// True iff (x^2 - s x + p) divides the polynomial exactly over the integers.
// Requires s^2 - 4p > 0 and not a perfect square; otherwise the roots are
// rational and the integer path applies.
bool certify_quadratic_factor(const CharPoly& cp, const mpz_class& s, const mpz_class& p);

// Largest square-free divisor d of v with v = f^2 * d; v >= 1.
long long squarefree_part(long long v);

} // namespace qwalk
