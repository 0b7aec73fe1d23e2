#pragma once

#include <vector>

#include "toric_zeta/engine.hpp"
#include "toric_zeta/volumes.hpp"

namespace toric_zeta {

// Ehrhart oracle: counts lattice points of the dilates k*p for
// k = 0..dim and takes the dim-th finite difference, which is dim! times
// the leading Ehrhart coefficient. Only dims up to 3 and small
// coordinate ranges are feasible.
Int volume_by_point_counting(const std::vector<Vec>& vertices,
                             const Lattice& lat, Exec exec = Exec::serial);

// Polynomiality oracle: evaluates Vol(lambda_1 Q_1 + ... + lambda_n Q_n)
// on a positive integer grid, solves for the homogeneous degree-n
// polynomial with a full residual check, and returns the coefficient of
// lambda_1...lambda_n divided by n!.
Int mixed_volume_by_polynomiality(const std::vector<std::vector<Vec>>& polys,
                                  const Lattice& lat,
                                  Exec exec = Exec::serial);

// Replays logged pipeline volumes against the oracles. Events outside
// the oracles' feasible range are counted as skipped; a value mismatch
// is an internal error.
struct CheckSummary {
    std::size_t checked = 0;
    std::size_t skipped = 0;
};
CheckSummary replay_volume_events(const std::vector<VolumeEvent>& events,
                                  Exec exec = Exec::serial);

}  // namespace toric_zeta
