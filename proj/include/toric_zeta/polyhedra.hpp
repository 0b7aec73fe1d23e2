#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric_zeta/lattice.hpp"
#include "toric_zeta/parallel.hpp"

namespace toric_zeta {

// One face of a PolyCone, carried with the sublattice generated by the
// cone generators lying on it (M(S cap Delta) for presentation cones).
struct FaceDescriptor {
    std::size_t dim = 0;  // rank of span_lattice
    std::vector<std::size_t> generator_indices;  // sorted; all gens on the face
    Lattice span_lattice;  // generated by those gens, in user ambient coords
    std::vector<std::size_t> active_normals;  // facet normals vanishing on it
};

// Polyhedral cone with its full face lattice. Generators are kept in the
// user's ambient coordinates; facet normals are covectors on `lattice`
// (coordinates in the dual of lattice.basis).
struct PolyCone {
    Lattice lattice;
    std::vector<Vec> generators;
    std::vector<Vec> gens_coords;  // generators in lattice coordinates
    Lattice span_sat;  // saturation of the generator span, lattice coords
    std::vector<DualVec> facet_normals;  // true facets only, lex-sorted
    std::vector<FaceDescriptor> faces;   // sorted by (dim, generator_indices)
    bool strongly_convex = false;
    std::size_t dim = 0;
};

// conv(points) + cone(rays) in coordinates of a rank-r lattice.
// Canonical: points are exactly the vertices (sorted), rays primitive,
// deduplicated and sorted.
struct LatticePolyhedron {
    Lattice lattice;
    std::vector<Vec> points;
    std::vector<Vec> rays;
};

// Bounded facet of a full-dimensional LatticePolyhedron: the face where
// the primitive inner normal attains its minimum.
struct CompactFacet {
    std::vector<Vec> vertex_set;
    DualVec normal;
    Int min_value;
    std::size_t dim = 0;
};

// True facet normals of cone(gens) inside its linear span, lifted back to
// exact functionals on Z^ambient (unprimitivized lift for degenerate
// spans; equal to the primitive normal when the cone is full-dimensional).
std::vector<Vec> cone_facet_normals(const std::vector<Vec>& gens,
                                    std::size_t ambient_dim,
                                    Exec exec = Exec::serial);

// Builds cone(vectors) with the full face lattice. Vectors must lie in
// the lattice; duplicates and zero vectors are absorbed.
PolyCone cone_from_generators(const std::vector<Vec>& vectors,
                              const Lattice& lattice,
                              Exec exec = Exec::serial);

bool is_strongly_convex(const PolyCone& c);

// Is v (in lattice coordinates) a point of the cone?
bool cone_contains(const PolyCone& c, const Vec& v_coords);

// Is v (in lattice coordinates) a point of the given face?
bool face_contains(const PolyCone& c, const FaceDescriptor& face,
                   const Vec& v_coords);

// conv(support) + cone, canonicalized, in cone.lattice coordinates.
// Support points are ambient vectors. Empty support: "zero polynomial".
LatticePolyhedron newton_polyhedron(const std::vector<Vec>& support,
                                    const PolyCone& cone,
                                    Exec exec = Exec::serial);

// Gamma cap Delta in face.span_lattice coordinates; nullopt when the
// intersection is empty. Support points are ambient vectors.
std::optional<LatticePolyhedron> restrict_to_face(
    const PolyCone& cone, const FaceDescriptor& face,
    const std::vector<Vec>& support, Exec exec = Exec::serial);

// All bounded facets of a full-dimensional polyhedron, lex-sorted by
// normal. Rank-0 lattices (single point) yield the empty list; otherwise
// a non-full-dimensional input is a "degenerate polyhedron" error.
std::vector<CompactFacet> compact_facets(const LatticePolyhedron& p,
                                         Exec exec = Exec::serial);

// argmin of <u, .> over the support (ties included), sorted.
std::vector<Vec> supporting_face(const std::vector<Vec>& support,
                                 const DualVec& u);

LatticePolyhedron minkowski_sum(const LatticePolyhedron& a,
                                const LatticePolyhedron& b,
                                Exec exec = Exec::serial);

// Canonicalizes an arbitrary (points, rays) description.
LatticePolyhedron make_polyhedron(const Lattice& lattice,
                                  std::vector<Vec> points,
                                  std::vector<Vec> rays,
                                  Exec exec = Exec::serial);

}  // namespace toric_zeta
