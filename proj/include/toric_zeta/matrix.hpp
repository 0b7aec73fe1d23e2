#pragma once

#include <optional>
#include <vector>

#include "toric_zeta/numbers.hpp"

namespace toric_zeta {

// Integer matrix as a list of rows.
using IntMat = std::vector<Vec>;

// Rational matrix as a list of rows.
using RatMat = std::vector<std::vector<Rat>>;

IntMat int_identity(std::size_t n);
IntMat transpose(const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// Row-style Hermite normal form: u * input = h with u unimodular.
// h is canonical: pivots positive, entries above a pivot reduced into
// [0, pivot), zero rows trailing. rank = number of nonzero rows of h.
struct HnfResult {
    IntMat h;
    IntMat u;
    std::size_t rank = 0;
};
HnfResult hermite_normal_form(const IntMat& m);

std::size_t int_rank(const IntMat& m);

// Basis (as rows) of { x : x * m = 0 }.
IntMat row_kernel(const IntMat& m);

// Basis (as rows) of { x : m * x = 0 }.
IntMat kernel(const IntMat& m);

// Exact determinant of a square integer matrix (Bareiss).
Int int_det(const IntMat& m);

RatMat rat_identity(std::size_t n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
bool rat_equal(const RatMat& a, const RatMat& b);
Rat rat_det(const RatMat& m);

// Exact inverse, or nullopt if singular.
std::optional<RatMat> rat_inverse(const RatMat& m);

// a^e for integer e; negative e uses the exact inverse (matrix must be
// invertible, checked by the caller).
RatMat rat_pow(const RatMat& a, const Int& e);

// Coefficients c[0..n] of det(lambda*I - A) = sum c[k] lambda^k, c[n] = 1
// (Faddeev-LeVerrier; all divisions exact).
std::vector<Rat> char_poly(const RatMat& a);

}  // namespace toric_zeta
