#include "qwalk/charpoly.hpp"

#include <stdexcept>

namespace qwalk {

mpz_class CharPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int k = degree(); k >= 0; --k)
        acc = acc * x + coeffs[k];
    return acc;
}

double CharPoly::eval(double x) const {
    double acc = 0;
    for (int k = degree(); k >= 0; --k)
        acc = acc * x + coeffs[k].get_d();
    return acc;
}

CharPoly char_poly(const IntMatrix& m) {
    const int n = m.size();
    if (n < 1)
        throw std::invalid_argument("char_poly: empty matrix");
    CharPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    IntMatrix acc = m; // M * (previous + c I), starting from M itself
    p.coeffs[n - 1] = -trace(acc);
    mpz_class c;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            acc(i, i) += p.coeffs[n - k + 1];
        acc = multiply(m, acc);
        c = -trace(acc);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        p.coeffs[n - k] = c;
    }
    return p;
}

CharPoly char_poly(const Hamiltonian& h) { return char_poly(h.entries); }

bool certify_integer_eigenvalue(const CharPoly& p, const mpz_class& candidate) {
    return p(candidate) == 0;
}

bool certify_quadratic_factor(const CharPoly& cp, const mpz_class& s, const mpz_class& p) {
    mpz_class disc = s * s - 4 * p;
    if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t()))
        throw std::domain_error("certify_quadratic_factor: discriminant must be positive "
                                "and not a perfect square");
    const int n = cp.degree();
    if (n < 2)
        return false;
    // synthetic division by the monic quadratic
    std::vector<mpz_class> rem = cp.coeffs;
    for (int i = n; i >= 2; --i) {
        if (rem[i] == 0)
            continue;
        rem[i - 1] += rem[i] * s;
        rem[i - 2] -= rem[i] * p;
        rem[i] = 0;
    }
    return rem[0] == 0 && rem[1] == 0;
}

long long squarefree_part(long long v) {
    if (v < 1)
        throw std::invalid_argument("squarefree_part: argument must be >= 1");
    long long d = 1;
    for (long long q = 2; q * q <= v; ++q) {
        int e = 0;
        while (v % q == 0) {
            v /= q;
            ++e;
        }
        if (e % 2)
            d *= q;
    }
    return d * v; // leftover v is prime (or 1), exponent one
}

} // namespace qwalk
