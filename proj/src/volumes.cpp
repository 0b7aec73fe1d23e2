#include "toric_zeta/volumes.hpp"

#include <algorithm>

namespace toric_zeta {

namespace {

// Pyramid decomposition over the facets not containing the base vertex;
// each pyramid contributes (lattice height) * Vol(facet).
Int volume_recursive(const std::vector<Vec>& pts, Exec exec) {
    internal_check(!pts.empty(), "volume: empty vertex list");
    std::size_t ambient = pts[0].size();
    std::vector<Vec> dirs;
    for (const Vec& p : pts) dirs.push_back(vec_sub(p, pts[0]));
    Lattice sat = saturation_of_span(dirs, ambient);
    std::size_t r = sat.rank();
    if (r == 0) return 1;
    std::vector<Vec> mapped;
    mapped.reserve(pts.size());
    for (const Vec& d : dirs) mapped.push_back(coords_in_basis(d, sat));
    if (r == 1) {
        Int lo = mapped[0][0], hi = mapped[0][0];
        for (const Vec& m : mapped) {
            if (m[0] < lo) lo = m[0];
            if (m[0] > hi) hi = m[0];
        }
        return hi - lo;
    }
    LatticePolyhedron poly =
        make_polyhedron(standard_lattice(r), mapped, {}, exec);
    std::vector<CompactFacet> facets = compact_facets(poly, exec);
    const Vec& v0 = poly.points[0];
    Int total = 0;
    for (const CompactFacet& f : facets) {
        Int h = dot(f.normal, v0) - f.min_value;
        if (h == 0) continue;
        total += h * volume_recursive(f.vertex_set, exec);
    }
    return total;
}

// Top-dimensional normalized volume in Z^n; 0 when conv(pts) is
// lower-dimensional.
Int topdim_volume(const std::vector<Vec>& pts, std::size_t n, Exec exec) {
    IntMat dirs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        dirs.push_back(vec_sub(pts[i], pts[0]));
    std::size_t rank = dirs.empty() ? 0 : int_rank(dirs);
    if (rank < n) return 0;
    return volume_recursive(pts, exec);
}

// Vertex sums of a Minkowski sum, canonicalized to keep lists small.
std::vector<Vec> sum_vertices(const std::vector<Vec>& a,
                              const std::vector<Vec>& b, std::size_t n,
                              Exec exec) {
    std::vector<Vec> sums;
    sums.reserve(a.size() * b.size());
    for (const Vec& p : a)
        for (const Vec& q : b) sums.push_back(vec_add(p, q));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    if (sums.size() <= 1) return sums;
    return make_polyhedron(standard_lattice(n), sums, {}, exec).points;
}

void enumerate_compositions(std::size_t total, std::size_t parts,
                            std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == parts) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::size_t a = 1; a + (parts - cur.size() - 1) <= total; ++a) {
        cur.push_back(a);
        enumerate_compositions(total - a, parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Int normalized_volume_coords(const std::vector<Vec>& pts, Exec exec) {
    return volume_recursive(pts, exec);
}

Int topdim_normalized_volume(const std::vector<Vec>& pts, std::size_t n,
                             Exec exec) {
    internal_check(!pts.empty(), "volume: empty vertex list");
    for (const Vec& p : pts)
        internal_check(p.size() == n, "topdim volume: rank mismatch");
    return topdim_volume(pts, n, exec);
}

Int normalized_volume(const std::vector<Vec>& vertices, const Lattice& lat,
                      Exec exec) {
    if (vertices.empty()) throw ValidationError("empty vertex list");
    std::vector<Vec> coords;
    coords.reserve(vertices.size());
    for (const Vec& v : vertices) coords.push_back(coords_in_basis(v, lat));
    return normalized_volume_coords(coords, exec);
}

VolumeResult normalized_volume_detailed(const std::vector<Vec>& vertices,
                                        const Lattice& lat, Exec exec) {
    if (vertices.empty()) throw ValidationError("empty vertex list");
    std::vector<Vec> coords;
    coords.reserve(vertices.size());
    for (const Vec& v : vertices) coords.push_back(coords_in_basis(v, lat));
    std::vector<Vec> dirs;
    for (const Vec& c : coords) dirs.push_back(vec_sub(c, coords[0]));
    VolumeResult res;
    res.lattice_used = saturation_of_span(dirs, lat.rank());
    res.dim = res.lattice_used.rank();
    res.value = normalized_volume_coords(coords, exec);
    internal_check(res.value >= 0, "negative volume");
    return res;
}

std::pair<Int, Int> cone_volume_identity_check(const CompactFacet& facet,
                                               const Lattice& lat,
                                               Exec exec) {
    for (const Vec& v : facet.vertex_set)
        internal_check(v.size() == lat.rank(),
                       "cone_volume_identity_check: rank mismatch");
    Int vol_gamma = normalized_volume_coords(facet.vertex_set, exec);
    std::vector<Vec> with_origin = facet.vertex_set;
    with_origin.push_back(Vec(lat.rank(), 0));
    Int vol_big = normalized_volume_coords(with_origin, exec);
    internal_check(vol_big == facet.min_value * vol_gamma,
                   "cone volume identity failed");
    return {vol_gamma, vol_big};
}

Int mixed_volume(const std::vector<std::vector<Vec>>& polys,
                 const Lattice& lat, Exec exec) {
    std::size_t n = lat.rank();
    if (polys.size() != n) throw ValidationError("arity must equal dimension");
    if (n == 0) return 1;
    std::vector<std::vector<Vec>> qs;
    qs.reserve(n);
    for (const auto& p : polys) {
        if (p.empty()) throw ValidationError("empty vertex list");
        std::vector<Vec> coords;
        coords.reserve(p.size());
        for (const Vec& v : p) coords.push_back(coords_in_basis(v, lat));
        // Translation-invariant; anchoring at the first vertex keeps
        // Minkowski sums small.
        Vec base = coords[0];
        for (Vec& c : coords) c = vec_sub(c, base);
        qs.push_back(std::move(coords));
    }

    std::size_t masks = (std::size_t(1) << n) - 1;
    std::vector<Int> terms(masks + 1, Int(0));
    parallel_for(masks, exec, [&](std::size_t i) {
        std::size_t mask = i + 1;
        std::vector<Vec> sum{Vec(n, 0)};
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t(1) << j)) {
                sum = sum_vertices(sum, qs[j], n, Exec::serial);
                ++count;
            }
        Int v = topdim_volume(sum, n, Exec::serial);
        terms[mask] = ((n - count) % 2 == 0) ? v : -v;
    });
    Int total = 0;
    for (std::size_t mask = 1; mask <= masks; ++mask) total += terms[mask];

    Int fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= Int(static_cast<long>(k));
    internal_check(total % fact == 0, "mixed volume not divisible by n!");
    Int mv = total / fact;
    internal_check(mv >= 0, "negative mixed volume");
    return mv;
}

Int bkk_euler(const std::vector<std::vector<Vec>>& polys, const Lattice& lat,
              Exec exec) {
    std::size_t p = polys.size();
    std::size_t n = lat.rank();
    if (p == 0) throw ValidationError("no polytopes");
    if (p > n) throw ValidationError("more polytopes than dimension");
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> cur;
    enumerate_compositions(n, p, cur, comps);
    Int sum = 0;
    for (const auto& comp : comps) {
        std::vector<std::vector<Vec>> args;
        args.reserve(n);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < comp[i]; ++j) args.push_back(polys[i]);
        sum += mixed_volume(args, lat, exec);
    }
    return ((n - p) % 2 == 0) ? sum : -sum;
}

}  // namespace toric_zeta
