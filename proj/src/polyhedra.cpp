#include "toric_zeta/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toric_zeta {

namespace {

std::vector<Vec> dedup_sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<Vec> cone_facet_normals(const std::vector<Vec>& gens,
                                    std::size_t ambient_dim, Exec exec) {
    std::vector<Vec> nz;
    for (const Vec& g : gens) {
        internal_check(g.size() == ambient_dim,
                       "cone_facet_normals: dimension mismatch");
        if (!is_zero_vec(g)) nz.push_back(g);
    }
    nz = dedup_sorted(nz);
    if (nz.empty()) return {};

    Lattice sat = saturation_of_span(nz, ambient_dim);
    std::size_t d = sat.rank();
    std::vector<Vec> sc;
    sc.reserve(nz.size());
    for (const Vec& g : nz) sc.push_back(coords_in_basis(g, sat));

    std::vector<Vec> cands;
    if (d == 1) {
        cands.push_back(Vec{Int(1)});
        cands.push_back(Vec{Int(-1)});
    } else {
        std::size_t m = nz.size();
        std::size_t total = binomial_count(m, d - 1);
        // The subset scan is exact but exponential; refuse instances far
        // outside the intended envelope instead of appearing to hang.
        if (total > 10000000)
            throw ValidationError(
                "facet enumeration infeasible: " + std::to_string(m) +
                " generators in dimension " + std::to_string(d));
        std::vector<std::vector<Vec>> buckets(total);
        parallel_for(total, exec, [&](std::size_t idx) {
            std::vector<std::size_t> subset = unrank_combination(m, d - 1, idx);
            IntMat rows;
            for (std::size_t i : subset) rows.push_back(sc[i]);
            if (int_rank(rows) != d - 1) return;
            IntMat k = kernel(rows);
            if (k.size() != 1) return;
            buckets[idx].push_back(primitive(k[0]));
        });
        for (auto& b : buckets)
            for (auto& w : b) cands.push_back(std::move(w));
        cands = dedup_sorted(cands);
    }

    std::vector<Vec> keep;
    for (const Vec& w : cands) {
        bool pos = true, neg = true;
        for (const Vec& s : sc) {
            Int val = dot(w, s);
            if (val > 0) neg = false;
            if (val < 0) pos = false;
        }
        Vec u;
        if (pos)
            u = w;
        else if (neg)
            u = vec_neg(w);
        else
            continue;
        IntMat zero_rows;
        for (const Vec& s : sc)
            if (dot(u, s) == 0) zero_rows.push_back(s);
        std::size_t zrank = zero_rows.empty() ? 0 : int_rank(zero_rows);
        if (zrank + 1 != d) continue;
        keep.push_back(u);
    }
    keep = dedup_sorted(keep);

    IntMat rinv = right_inverse_saturated(sat);
    std::vector<Vec> out;
    out.reserve(keep.size());
    for (const Vec& w : keep) {
        Vec u(ambient_dim, 0);
        for (std::size_t j = 0; j < ambient_dim; ++j)
            for (std::size_t k = 0; k < d; ++k) u[j] += rinv[j][k] * w[k];
        out.push_back(u);
    }
    return dedup_sorted(out);
}

PolyCone cone_from_generators(const std::vector<Vec>& vectors,
                              const Lattice& lattice, Exec exec) {
    if (vectors.empty())
        throw ValidationError("cone needs at least one generator");
    PolyCone c;
    c.lattice = lattice;
    c.generators = vectors;
    c.gens_coords.reserve(vectors.size());
    for (const Vec& v : vectors)
        c.gens_coords.push_back(coords_in_basis(v, lattice));
    std::size_t R = lattice.rank();
    c.span_sat = saturation_of_span(c.gens_coords, R);
    c.dim = c.span_sat.rank();
    c.facet_normals = cone_facet_normals(c.gens_coords, R, exec);

    std::size_t m = vectors.size();
    std::size_t f = c.facet_normals.size();
    std::vector<std::vector<std::size_t>> facet_sets(f);
    for (std::size_t k = 0; k < f; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (dot(c.facet_normals[k], c.gens_coords[i]) == 0)
                facet_sets[k].push_back(i);

    std::set<std::vector<std::size_t>> sets;
    std::vector<std::size_t> full(m);
    std::iota(full.begin(), full.end(), std::size_t(0));
    sets.insert(full);
    for (const auto& s : facet_sets) sets.insert(s);
    // Close under intersection; intersecting with facets suffices since
    // every face is an intersection of facets.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::size_t>> snapshot(sets.begin(),
                                                       sets.end());
        for (const auto& a : snapshot)
            for (const auto& fs : facet_sets) {
                std::vector<std::size_t> inter;
                std::set_intersection(a.begin(), a.end(), fs.begin(), fs.end(),
                                      std::back_inserter(inter));
                if (sets.insert(inter).second) changed = true;
            }
    }

    for (const auto& g : sets) {
        FaceDescriptor fd;
        fd.generator_indices = g;
        std::vector<Vec> face_gens;
        for (std::size_t i : g) face_gens.push_back(vectors[i]);
        fd.span_lattice =
            lattice_from_generators(face_gens, lattice.ambient_dim);
        fd.dim = fd.span_lattice.rank();
        for (std::size_t k = 0; k < f; ++k) {
            bool active = true;
            for (std::size_t i : g)
                if (dot(c.facet_normals[k], c.gens_coords[i]) != 0) {
                    active = false;
                    break;
                }
            if (active) fd.active_normals.push_back(k);
        }
        c.faces.push_back(std::move(fd));
    }
    std::sort(c.faces.begin(), c.faces.end(),
              [](const FaceDescriptor& a, const FaceDescriptor& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.generator_indices < b.generator_indices;
              });
    c.strongly_convex = !c.faces.empty() && c.faces.front().dim == 0;
    return c;
}

bool is_strongly_convex(const PolyCone& c) { return c.strongly_convex; }

bool cone_contains(const PolyCone& c, const Vec& v_coords) {
    if (!in_span(v_coords, c.span_sat)) return false;
    for (const DualVec& u : c.facet_normals)
        if (dot(u, v_coords) < 0) return false;
    return true;
}

bool face_contains(const PolyCone& c, const FaceDescriptor& face,
                   const Vec& v_coords) {
    if (!cone_contains(c, v_coords)) return false;
    for (std::size_t k : face.active_normals)
        if (dot(c.facet_normals[k], v_coords) != 0) return false;
    return true;
}

LatticePolyhedron make_polyhedron(const Lattice& lattice,
                                  std::vector<Vec> points,
                                  std::vector<Vec> rays, Exec exec) {
    std::size_t r = lattice.rank();
    for (const Vec& p : points)
        internal_check(p.size() == r, "make_polyhedron: point rank mismatch");
    std::vector<Vec> prim_rays;
    for (const Vec& v : rays) {
        internal_check(v.size() == r, "make_polyhedron: ray rank mismatch");
        if (!is_zero_vec(v)) prim_rays.push_back(primitive(v));
    }
    prim_rays = dedup_sorted(prim_rays);
    points = dedup_sorted(points);
    if (points.empty())
        throw ValidationError("polyhedron needs at least one point");

    LatticePolyhedron out;
    out.lattice = lattice;
    out.rays = prim_rays;
    if (points.size() == 1 && prim_rays.empty()) {
        out.points = points;
        return out;
    }

    // Homogenize: points at height 1, rays at height 0; vertices of the
    // polyhedron are the extreme rays of the cone at height 1.
    std::size_t D = r + 1;
    std::vector<Vec> hg;
    for (const Vec& p : points) {
        Vec h(D);
        h[0] = 1;
        for (std::size_t j = 0; j < r; ++j) h[j + 1] = p[j];
        hg.push_back(h);
    }
    for (const Vec& v : prim_rays) {
        Vec h(D);
        h[0] = 0;
        for (std::size_t j = 0; j < r; ++j) h[j + 1] = v[j];
        hg.push_back(h);
    }
    std::size_t d = int_rank(hg);
    std::vector<Vec> normals = cone_facet_normals(hg, D, exec);
    internal_check(!normals.empty() && int_rank(normals) == d,
                   "polyhedron has no vertices");

    for (const Vec& p : points) {
        Vec h(D);
        h[0] = 1;
        for (std::size_t j = 0; j < r; ++j) h[j + 1] = p[j];
        IntMat active;
        for (const Vec& w : normals)
            if (dot(w, h) == 0) active.push_back(w);
        std::size_t arank = active.empty() ? 0 : int_rank(active);
        if (arank + 1 == d) out.points.push_back(p);
    }
    internal_check(!out.points.empty(), "canonicalization removed all points");
    return out;
}

LatticePolyhedron newton_polyhedron(const std::vector<Vec>& support,
                                    const PolyCone& cone, Exec exec) {
    if (support.empty()) throw ValidationError("zero polynomial");
    std::vector<Vec> points;
    points.reserve(support.size());
    for (const Vec& v : support)
        points.push_back(coords_in_basis(v, cone.lattice));
    return make_polyhedron(cone.lattice, std::move(points), cone.gens_coords,
                           exec);
}

std::optional<LatticePolyhedron> restrict_to_face(
    const PolyCone& cone, const FaceDescriptor& face,
    const std::vector<Vec>& support, Exec exec) {
    std::vector<Vec> sel;
    for (const Vec& v : support) {
        Vec vc = coords_in_basis(v, cone.lattice);
        bool on_face = true;
        for (std::size_t k : face.active_normals)
            if (dot(cone.facet_normals[k], vc) != 0) {
                on_face = false;
                break;
            }
        if (on_face) sel.push_back(v);
    }
    if (sel.empty()) return std::nullopt;
    std::vector<Vec> points;
    for (const Vec& v : sel) {
        try {
            points.push_back(coords_in_basis(v, face.span_lattice));
        } catch (const ValidationError&) {
            internal_check(false,
                           "support point on face escapes the face sublattice");
        }
    }
    std::vector<Vec> rays;
    for (std::size_t i : face.generator_indices) {
        const Vec& g = cone.generators[i];
        if (is_zero_vec(g)) continue;
        rays.push_back(coords_in_basis(g, face.span_lattice));
    }
    return make_polyhedron(face.span_lattice, std::move(points),
                           std::move(rays), exec);
}

std::vector<CompactFacet> compact_facets(const LatticePolyhedron& p,
                                         Exec exec) {
    std::size_t r = p.lattice.rank();
    std::vector<CompactFacet> out;
    if (r == 0) return out;

    IntMat dirs;
    for (std::size_t i = 1; i < p.points.size(); ++i)
        dirs.push_back(vec_sub(p.points[i], p.points[0]));
    for (const Vec& v : p.rays) dirs.push_back(v);
    std::size_t pdim = dirs.empty() ? 0 : int_rank(dirs);
    if (pdim != r) throw ValidationError("degenerate polyhedron");

    std::size_t D = r + 1;
    std::vector<Vec> hg;
    for (const Vec& pt : p.points) {
        Vec h(D);
        h[0] = 1;
        for (std::size_t j = 0; j < r; ++j) h[j + 1] = pt[j];
        hg.push_back(h);
    }
    for (const Vec& v : p.rays) {
        Vec h(D);
        h[0] = 0;
        for (std::size_t j = 0; j < r; ++j) h[j + 1] = v[j];
        hg.push_back(h);
    }
    std::vector<Vec> normals = cone_facet_normals(hg, D, exec);

    for (const Vec& w : normals) {
        Vec u(w.begin() + 1, w.end());
        bool compact = true;
        for (const Vec& ray : p.rays)
            if (dot(u, ray) <= 0) {
                compact = false;
                break;
            }
        if (!compact) continue;
        Int g = vec_gcd(u);
        internal_check(g > 0, "compact facet with zero normal");
        CompactFacet cf;
        cf.normal.resize(r);
        for (std::size_t j = 0; j < r; ++j) cf.normal[j] = u[j] / g;
        internal_check(w[0] % g == 0, "facet offset not divisible");
        cf.min_value = -(w[0] / g);
        for (const Vec& pt : p.points)
            if (dot(cf.normal, pt) == cf.min_value) cf.vertex_set.push_back(pt);
        internal_check(!cf.vertex_set.empty(), "compact facet without vertices");
        std::sort(cf.vertex_set.begin(), cf.vertex_set.end());
        cf.dim = r - 1;
        out.push_back(std::move(cf));
    }
    std::sort(out.begin(), out.end(),
              [](const CompactFacet& a, const CompactFacet& b) {
                  return a.normal < b.normal;
              });
    return out;
}

std::vector<Vec> supporting_face(const std::vector<Vec>& support,
                                 const DualVec& u) {
    internal_check(!support.empty(), "supporting_face: empty support");
    Int best = dot(u, support[0]);
    for (const Vec& v : support) {
        Int val = dot(u, v);
        if (val < best) best = val;
    }
    std::vector<Vec> out;
    for (const Vec& v : support)
        if (dot(u, v) == best) out.push_back(v);
    return dedup_sorted(out);
}

LatticePolyhedron minkowski_sum(const LatticePolyhedron& a,
                                const LatticePolyhedron& b, Exec exec) {
    if (!(a.lattice == b.lattice)) throw ValidationError("lattice mismatch");
    std::vector<Vec> points;
    points.reserve(a.points.size() * b.points.size());
    for (const Vec& p : a.points)
        for (const Vec& q : b.points) points.push_back(vec_add(p, q));
    std::vector<Vec> rays = a.rays;
    rays.insert(rays.end(), b.rays.begin(), b.rays.end());
    return make_polyhedron(a.lattice, std::move(points), std::move(rays),
                           exec);
}

}  // namespace toric_zeta
