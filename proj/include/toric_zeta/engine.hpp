#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric_zeta/newton.hpp"
#include "toric_zeta/volumes.hpp"
#include "toric_zeta/zeta.hpp"

namespace toric_zeta {

// Per-face local systems, keyed by the sorted list of semigroup-generator
// indices lying on the face. Each face needs dim(face) commuting
// invertible square matrices of one size, in the order of the dual basis
// of the face sublattice.
struct LocalSystemData {
    std::map<std::vector<std::size_t>, std::vector<RatMat>> systems;
};

// One compact facet's contribution on a face.
struct FacetRecord {
    std::vector<Vec> gamma;   // vertex set in face coordinates
    DualVec u;                // primitive inner normal, dual coordinates
    Int d;                    // lattice distance
    Int weight;               // Vol(gamma) in single/sheaf mode, K in ci mode
    Int exponent;             // signed exponent of the contributed factor
    Poly det_poly;            // sheaf mode: det(id - t^d B), expanded
    bool is_matrix = false;
};

struct FaceReport {
    std::vector<std::size_t> face_key;  // sorted generator indices
    std::size_t dim = 0;
    bool skipped = false;
    std::string skipped_reason;  // "Γ₊∩Δ empty" | "m(Δ) > dim Δ"
    std::vector<std::size_t> ci_members;  // I(Delta) cup {k}, 0-based
    std::size_t m = 1;                    // |I(Delta)| + 1
    std::vector<FacetRecord> facets;
    Int orbit_chi;  // per-orbit Euler contribution
};

// Volume computed during a pipeline run, kept for oracle replay.
struct VolumeEvent {
    std::vector<std::vector<Vec>> polys;  // vertex lists, coordinates
    std::size_t rank = 0;                 // lattice rank (standard basis)
    Int value;
    bool mixed = false;
};

struct EngineOptions {
    Exec exec = Exec::serial;
    bool log_volumes = false;
};

struct ZetaResult {
    ZetaFactorization zeta;
    std::vector<FaceReport> reports;
    std::vector<VolumeEvent> volume_log;
};

struct EulerResult {
    Int chi;
    std::vector<std::pair<std::vector<std::size_t>, Int>> per_orbit;
    std::vector<FaceReport> reports;
    std::vector<VolumeEvent> volume_log;
};

ZetaResult zeta_fixed_point(const SemigroupPresentation& s,
                            const ToricPolynomial& f,
                            const EngineOptions& opts = {});

EulerResult euler_fixed_point(const SemigroupPresentation& s,
                              const ToricPolynomial& f,
                              const EngineOptions& opts = {});

ZetaResult zeta_complete_intersection(const SemigroupPresentation& s,
                                      const std::vector<ToricPolynomial>& fs,
                                      const EngineOptions& opts = {});

EulerResult euler_complete_intersection(
    const SemigroupPresentation& s, const std::vector<ToricPolynomial>& fs,
    const EngineOptions& opts = {});

ZetaResult zeta_sheaf(const SemigroupPresentation& s, const ToricPolynomial& f,
                      const LocalSystemData& ls,
                      const EngineOptions& opts = {});

}  // namespace toric_zeta
