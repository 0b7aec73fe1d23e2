#pragma once

#include <utility>
#include <vector>

#include "toric_zeta/polyhedra.hpp"

namespace toric_zeta {

struct VolumeResult {
    Int value;  // dim! times the Euclidean volume; always an integer
    std::size_t dim = 0;
    Lattice lattice_used;
};

// Intrinsic normalized volume of conv(pts) where pts are coordinates
// relative to some lattice basis: measured in Z^rank intersected with the
// direction space of the affine hull. A point gives 1.
Int normalized_volume_coords(const std::vector<Vec>& pts,
                             Exec exec = Exec::serial);

// n-dimensional normalized volume in Z^n; 0 when conv(pts) is
// lower-dimensional.
Int topdim_normalized_volume(const std::vector<Vec>& pts, std::size_t n,
                             Exec exec = Exec::serial);

// Same, for ambient vertices measured in lat cap (direction space).
// Vertices must lie in lat.
Int normalized_volume(const std::vector<Vec>& vertices, const Lattice& lat,
                      Exec exec = Exec::serial);
VolumeResult normalized_volume_detailed(const std::vector<Vec>& vertices,
                                        const Lattice& lat,
                                        Exec exec = Exec::serial);

// (Vol(gamma), Vol(Gamma)) for Gamma = conv(gamma cup {0}), gamma the
// facet's vertex set in lat coordinates. Asserts Vol(Gamma) =
// min_value * Vol(gamma).
std::pair<Int, Int> cone_volume_identity_check(const CompactFacet& facet,
                                               const Lattice& lat,
                                               Exec exec = Exec::serial);

// Normalized mixed volume of exactly rank(lat) bounded polytopes given as
// ambient vertex lists, by inclusion-exclusion over Minkowski sums.
Int mixed_volume(const std::vector<std::vector<Vec>>& polys,
                 const Lattice& lat, Exec exec = Exec::serial);

// (-1)^(n-p) sum over compositions a_1+...+a_p = n (a_i >= 1) of the
// mixed volume with Q_i repeated a_i times.
Int bkk_euler(const std::vector<std::vector<Vec>>& polys, const Lattice& lat,
              Exec exec = Exec::serial);

}  // namespace toric_zeta
