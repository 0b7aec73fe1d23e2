#pragma once

#include <map>
#include <utility>
#include <vector>

#include "toric_zeta/polyhedra.hpp"

namespace toric_zeta {

// One face Delta of K(S) with the sublattice M(S cap Delta) generated by
// the semigroup generators on it. Covectors on the face are written in
// the dual of sublattice.basis, so the dual lattice is Z^span_dim.
struct FaceContext {
    FaceDescriptor face;
    std::size_t span_dim = 0;
    Lattice sublattice;
};

// Finitely generated subsemigroup S of Z^n (0 implicit) with its cone
// K(S), lattice M(S) and per-face contexts.
struct SemigroupPresentation {
    std::size_t ambient_dim = 0;
    std::vector<Vec> generators;
    PolyCone cone;
    Lattice lattice;  // M(S)
    std::vector<FaceContext> faces;
};

// Finite exponent -> coefficient map; zero coefficients never stored.
struct ToricPolynomial {
    std::map<Vec, Rat> terms;
};

ToricPolynomial make_toric_polynomial(
    const std::vector<std::pair<Vec, Rat>>& terms);

std::vector<Vec> support(const ToricPolynomial& f);

// Validates strong convexity and rank M(S) = n, builds the face lattice.
SemigroupPresentation build_presentation(const std::vector<Vec>& generators,
                                         Exec exec = Exec::serial);

// Is v a nonnegative-integer combination of the generators? Decided by a
// bounded search: a strictly positive functional on K(S) caps the
// multiplicity of every generator in any representation.
bool semigroup_membership(const Vec& v, const SemigroupPresentation& s);

// Every exponent must pass semigroup_membership.
void validate_polynomial(const ToricPolynomial& f,
                         const SemigroupPresentation& s);

// f must be nonzero with no constant term.
void validate_vanishing(const ToricPolynomial& f);

// Ambient exponents of f lying on the face (sorted).
std::vector<Vec> support_on_face(const ToricPolynomial& f,
                                 const SemigroupPresentation& s,
                                 const FaceContext& ctx);

// The u-part of f on the face: terms of f|Delta whose exponents minimize
// <u, .>, with u in the dual basis of ctx.sublattice.
ToricPolynomial u_part(const ToricPolynomial& f,
                       const SemigroupPresentation& s, const FaceContext& ctx,
                       const DualVec& u);

}  // namespace toric_zeta
