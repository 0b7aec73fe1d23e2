#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric_zeta/matrix.hpp"

namespace toric_zeta {

// Polynomial in t, ascending coefficients, no trailing zeros; empty = 0.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
// p(t^d).
Poly poly_spread(const Poly& p, std::size_t d);
std::size_t poly_degree(const Poly& p);  // degree of 0 is 0 here

// det(id - t^d B), expanded; constant term is 1.
Poly det_factor(const RatMat& b, const Int& d);

// Formal product of (1 - t^d)^e factors and det(id - t^d B)^e factors,
// the latter stored as their expanded polynomials. Two-term determinant
// factors equal to 1 - t^d are folded into the cyclotomic map so that
// identity local systems reduce to the monomial-case factorization.
struct ZetaFactorization {
    std::map<Int, Int> cyclotomic;  // d -> exponent, d >= 1, e != 0
    std::map<Poly, Int> matrix_factors;  // constant term 1, e != 0

    bool operator==(const ZetaFactorization& o) const = default;
};

struct RationalFunction {
    Poly num;
    Poly den;  // constant term 1

    bool operator==(const RationalFunction& o) const = default;
};

ZetaFactorization zeta_one();
void mul_cyclotomic(ZetaFactorization& z, const Int& d, const Int& e);
void mul_matrix_factor(ZetaFactorization& z, const Poly& p, const Int& e);
ZetaFactorization multiply(const ZetaFactorization& a,
                           const ZetaFactorization& b);
Int degree(const ZetaFactorization& z);
RationalFunction to_rational(const ZetaFactorization& z);

std::string poly_to_string(const Poly& p);
std::string zeta_to_string(const ZetaFactorization& z);
std::string rational_to_string(const RationalFunction& r);

}  // namespace toric_zeta
