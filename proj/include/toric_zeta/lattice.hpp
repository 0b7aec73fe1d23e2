#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric_zeta/matrix.hpp"
#include "toric_zeta/numbers.hpp"

namespace toric_zeta {

// Covector expressed in the dual basis of a specific Lattice; primitivity
// (gcd of coords = 1) is always meant with respect to that dual basis.
using DualVec = Vec;

// Sublattice of Z^ambient_dim. The basis is the canonical row-style
// Hermite normal form, so two lattices are equal iff their bases are.
struct Lattice {
    std::size_t ambient_dim = 0;
    IntMat basis;  // rank x ambient_dim, rows in canonical HNF

    std::size_t rank() const { return basis.size(); }
    bool operator==(const Lattice& o) const = default;
};

Lattice standard_lattice(std::size_t dim);

// Z-span of the given vectors; empty input gives the rank-0 lattice.
Lattice lattice_from_generators(const std::vector<Vec>& vectors,
                                std::size_t ambient_dim);

// [super : sub]; throws "not a sublattice" if containment or ranks fail.
Int lattice_index(const Lattice& sub, const Lattice& super);

// Solves c * basis = v over the rationals; nullopt if v is outside the
// real span. Entries need not be integers.
std::optional<std::vector<Rat>> span_coords_rat(const Vec& v,
                                                const Lattice& lat);

// Integer coordinates of v in lat's basis. Throws "outside span" or
// "not a lattice point".
Vec coords_in_basis(const Vec& v, const Lattice& lat);

bool in_span(const Vec& v, const Lattice& lat);
bool in_lattice(const Vec& v, const Lattice& lat);

// c * basis, mapping coordinates back to ambient vectors.
Vec from_coords(const Vec& c, const Lattice& lat);

// v / gcd(entries); throws "zero vector has no primitive" on v = 0.
Vec primitive(const Vec& v);

// <u, v> where u is in lat's dual basis and v is an ambient lattice point.
Int dual_pairing(const DualVec& u, const Vec& v, const Lattice& lat);

// Z^dim intersected with the real span of the vectors (kernel of kernel).
Lattice saturation_of_span(const std::vector<Vec>& vectors,
                           std::size_t ambient_dim);

// For a lattice whose row span is saturated: integer R with basis * R = I.
// Lets functionals on the sublattice be lifted to ambient covectors.
IntMat right_inverse_saturated(const Lattice& lat);

}  // namespace toric_zeta
