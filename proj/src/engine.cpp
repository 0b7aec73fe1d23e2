#include "toric_zeta/engine.hpp"

#include <algorithm>

namespace toric_zeta {

namespace {

struct FaceOutcome {
    FaceReport report;
    ZetaFactorization local;
    std::vector<VolumeEvent> events;
};

// Compositions (a_1,...,a_parts) of `total` with a_q >= 1 for q < parts
// and a_parts >= 0, in lexicographic order.
void asymmetric_compositions(std::size_t total, std::size_t parts,
                             std::vector<std::size_t>& cur,
                             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    std::size_t reserved = parts - cur.size() - 2;  // later slots with min 1
    for (std::size_t a = 1; a + reserved <= total; ++a) {
        cur.push_back(a);
        asymmetric_compositions(total - a, parts, cur, out);
        cur.pop_back();
    }
}

const std::vector<RatMat>* face_system(const LocalSystemData& ls,
                                       const std::vector<std::size_t>& key,
                                       std::size_t dim) {
    auto it = ls.systems.find(key);
    if (it == ls.systems.end()) {
        std::string k = "{";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(key[i]);
        }
        k += "}";
        throw ValidationError("missing local system for face " + k);
    }
    const std::vector<RatMat>& mats = it->second;
    if (mats.size() != dim)
        throw ValidationError(
            "local system must supply one matrix per face dimension");
    std::size_t r = mats.empty() ? 0 : mats[0].size();
    for (const RatMat& a : mats) {
        if (a.size() != r)
            throw ValidationError("local system matrix size mismatch");
        for (const auto& row : a)
            if (row.size() != r)
                throw ValidationError("local system matrix size mismatch");
    }
    for (const RatMat& a : mats)
        if (!rat_inverse(a).has_value())
            throw ValidationError("monodromy must be invertible");
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!rat_equal(rat_mul(mats[i], mats[j]),
                           rat_mul(mats[j], mats[i])))
                throw ValidationError("local system matrices must commute");
    return &mats;
}

// Single-polynomial analysis of one face; `mats` non-null in sheaf mode.
FaceOutcome analyze_face_single(const SemigroupPresentation& s,
                                const FaceContext& ctx,
                                const ToricPolynomial& f,
                                const std::vector<RatMat>* mats,
                                const EngineOptions& opts) {
    FaceOutcome out;
    out.report.face_key = ctx.face.generator_indices;
    out.report.dim = ctx.span_dim;
    out.report.orbit_chi = 0;

    std::optional<LatticePolyhedron> restr =
        restrict_to_face(s.cone, ctx.face, support(f));
    if (!restr) {
        out.report.skipped = true;
        out.report.skipped_reason = "Γ₊∩Δ empty";
        return out;
    }
    std::size_t dim = ctx.span_dim;
    internal_check(dim >= 1, "contributing face of dimension 0");
    Int sign = sign_pow(dim - 1);

    std::vector<CompactFacet> facets = compact_facets(*restr);
    for (const CompactFacet& cf : facets) {
        auto [vol, vol_cone] = cone_volume_identity_check(cf, ctx.sublattice);
        internal_check(cf.min_value >= 1, "lattice distance below 1");
        internal_check(vol >= 0, "negative facet volume");

        FacetRecord rec;
        rec.gamma = cf.vertex_set;
        rec.u = cf.normal;
        rec.d = cf.min_value;
        rec.weight = vol;
        rec.exponent = sign * vol;
        if (mats) {
            RatMat b = rat_identity(mats->empty() ? 0 : (*mats)[0].size());
            for (std::size_t j = 0; j < dim; ++j)
                b = rat_mul(b, rat_pow((*mats)[j], cf.normal[j]));
            rec.det_poly = det_factor(b, cf.min_value);
            rec.is_matrix = true;
            mul_matrix_factor(out.local, rec.det_poly, rec.exponent);
        } else {
            mul_cyclotomic(out.local, rec.d, rec.exponent);
        }
        out.report.facets.push_back(std::move(rec));
        out.report.orbit_chi += sign * vol_cone;

        if (opts.log_volumes) {
            out.events.push_back({{cf.vertex_set}, dim, vol, false});
            std::vector<Vec> with_origin = cf.vertex_set;
            with_origin.push_back(Vec(dim, 0));
            out.events.push_back({{with_origin}, dim, vol_cone, false});
        }
    }
    return out;
}

FaceOutcome analyze_face_ci(const SemigroupPresentation& s,
                            const FaceContext& ctx,
                            const std::vector<ToricPolynomial>& fs,
                            const EngineOptions& opts) {
    std::size_t k = fs.size();
    FaceOutcome out;
    out.report.face_key = ctx.face.generator_indices;
    out.report.dim = ctx.span_dim;
    out.report.orbit_chi = 0;

    std::optional<LatticePolyhedron> restr_k =
        restrict_to_face(s.cone, ctx.face, support(fs[k - 1]));
    if (!restr_k) {
        out.report.skipped = true;
        out.report.skipped_reason = "Γ₊∩Δ empty";
        return out;
    }
    std::size_t dim = ctx.span_dim;
    internal_check(dim >= 1, "contributing face of dimension 0");

    std::vector<std::size_t> members;
    std::vector<LatticePolyhedron> polys;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        std::optional<LatticePolyhedron> r =
            restrict_to_face(s.cone, ctx.face, support(fs[j]));
        if (r) {
            members.push_back(j);
            polys.push_back(std::move(*r));
        }
    }
    members.push_back(k - 1);
    polys.push_back(std::move(*restr_k));
    std::size_t m = members.size();
    out.report.ci_members = members;
    out.report.m = m;
    if (m > dim) {
        out.report.skipped = true;
        out.report.skipped_reason = "m(Δ) > dim Δ";
        return out;
    }

    LatticePolyhedron product = polys[0];
    for (std::size_t j = 1; j < m; ++j)
        product = minkowski_sum(product, polys[j]);

    Int sign = sign_pow(dim - m);
    const LatticePolyhedron& pk = polys[m - 1];

    std::vector<CompactFacet> facets = compact_facets(product);
    for (const CompactFacet& cf : facets) {
        // d is the minimum over f_k's polygon, not the product polygon.
        Int d = dot(cf.normal, pk.points[0]);
        for (const Vec& p : pk.points) {
            Int v = dot(cf.normal, p);
            if (v < d) d = v;
        }
        internal_check(d >= 1, "lattice distance below 1");

        std::vector<std::vector<Vec>> supports;
        supports.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            supports.push_back(supporting_face(polys[j].points, cf.normal));

        // gamma_i = sum of the supporting faces, as vertex sets.
        LatticePolyhedron sum_check =
            make_polyhedron(product.lattice, supports[0], {});
        for (std::size_t j = 1; j < m; ++j)
            sum_check = minkowski_sum(
                sum_check, make_polyhedron(product.lattice, supports[j], {}));
        internal_check(sum_check.points == cf.vertex_set,
                       "facet-sum identity failed");

        Int kval;
        if (dim == 1) {
            kval = 1;
        } else {
            // Direction lattice of gamma through one of its vertices.
            std::vector<Vec> dirs;
            for (const Vec& v : cf.vertex_set)
                dirs.push_back(vec_sub(v, cf.vertex_set[0]));
            Lattice dir_lat = saturation_of_span(dirs, dim);
            internal_check(dir_lat.rank() + 1 == dim,
                           "facet direction rank mismatch");
            std::vector<std::vector<Vec>> mapped(m);
            for (std::size_t j = 0; j < m; ++j) {
                const Vec& base = supports[j][0];
                for (const Vec& v : supports[j])
                    mapped[j].push_back(
                        coords_in_basis(vec_sub(v, base), dir_lat));
            }
            std::vector<std::vector<std::size_t>> comps;
            std::vector<std::size_t> cur;
            asymmetric_compositions(dim - 1, m, cur, comps);
            Lattice mv_lat = standard_lattice(dim - 1);
            kval = 0;
            for (const auto& comp : comps) {
                std::vector<std::vector<Vec>> args;
                args.reserve(dim - 1);
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t c = 0; c < comp[j]; ++c)
                        args.push_back(mapped[j]);
                Int mv = mixed_volume(args, mv_lat);
                kval += mv;
                if (opts.log_volumes)
                    out.events.push_back({args, dim - 1, mv, true});
            }
        }
        internal_check(kval >= 0, "negative K value");

        FacetRecord rec;
        rec.gamma = cf.vertex_set;
        rec.u = cf.normal;
        rec.d = d;
        rec.weight = kval;
        rec.exponent = sign * kval;
        mul_cyclotomic(out.local, rec.d, rec.exponent);
        out.report.orbit_chi += sign * d * kval;
        out.report.facets.push_back(std::move(rec));
    }
    return out;
}

std::vector<FaceOutcome> run_faces(
    const SemigroupPresentation& s, const EngineOptions& opts,
    const std::function<FaceOutcome(const FaceContext&)>& fn) {
    std::vector<FaceOutcome> outcomes(s.faces.size());
    parallel_for(s.faces.size(), opts.exec,
                 [&](std::size_t i) { outcomes[i] = fn(s.faces[i]); });
    return outcomes;
}

ZetaResult collect_zeta(std::vector<FaceOutcome> outcomes) {
    ZetaResult res;
    res.zeta = zeta_one();
    for (FaceOutcome& o : outcomes) {
        res.zeta = multiply(res.zeta, o.local);
        res.reports.push_back(std::move(o.report));
        for (VolumeEvent& e : o.events) res.volume_log.push_back(std::move(e));
    }
    return res;
}

EulerResult collect_euler(std::vector<FaceOutcome> outcomes) {
    EulerResult res;
    res.chi = 0;
    for (FaceOutcome& o : outcomes) {
        if (!o.report.skipped)
            res.per_orbit.emplace_back(o.report.face_key, o.report.orbit_chi);
        res.chi += o.report.orbit_chi;
        res.reports.push_back(std::move(o.report));
        for (VolumeEvent& e : o.events) res.volume_log.push_back(std::move(e));
    }
    return res;
}

void validate_single(const SemigroupPresentation& s, const ToricPolynomial& f) {
    validate_polynomial(f, s);
    validate_vanishing(f);
}

void validate_ci(const SemigroupPresentation& s,
                 const std::vector<ToricPolynomial>& fs) {
    if (fs.empty()) throw ValidationError("no polynomials");
    if (fs.size() > s.ambient_dim)
        throw ValidationError("more polynomials than the cone dimension");
    for (const ToricPolynomial& f : fs) validate_polynomial(f, s);
    validate_vanishing(fs.back());
}

}  // namespace

ZetaResult zeta_fixed_point(const SemigroupPresentation& s,
                            const ToricPolynomial& f,
                            const EngineOptions& opts) {
    validate_single(s, f);
    return collect_zeta(run_faces(s, opts, [&](const FaceContext& ctx) {
        return analyze_face_single(s, ctx, f, nullptr, opts);
    }));
}

EulerResult euler_fixed_point(const SemigroupPresentation& s,
                              const ToricPolynomial& f,
                              const EngineOptions& opts) {
    validate_single(s, f);
    return collect_euler(run_faces(s, opts, [&](const FaceContext& ctx) {
        return analyze_face_single(s, ctx, f, nullptr, opts);
    }));
}

ZetaResult zeta_complete_intersection(const SemigroupPresentation& s,
                                      const std::vector<ToricPolynomial>& fs,
                                      const EngineOptions& opts) {
    validate_ci(s, fs);
    return collect_zeta(run_faces(s, opts, [&](const FaceContext& ctx) {
        return analyze_face_ci(s, ctx, fs, opts);
    }));
}

EulerResult euler_complete_intersection(const SemigroupPresentation& s,
                                        const std::vector<ToricPolynomial>& fs,
                                        const EngineOptions& opts) {
    validate_ci(s, fs);
    return collect_euler(run_faces(s, opts, [&](const FaceContext& ctx) {
        return analyze_face_ci(s, ctx, fs, opts);
    }));
}

ZetaResult zeta_sheaf(const SemigroupPresentation& s, const ToricPolynomial& f,
                      const LocalSystemData& ls, const EngineOptions& opts) {
    validate_single(s, f);
    // Resolve and validate the systems for contributing faces up front so
    // validation errors surface deterministically in face order.
    std::vector<const std::vector<RatMat>*> mats(s.faces.size(), nullptr);
    for (std::size_t i = 0; i < s.faces.size(); ++i) {
        const FaceContext& ctx = s.faces[i];
        std::optional<LatticePolyhedron> restr =
            restrict_to_face(s.cone, ctx.face, support(f));
        if (!restr) continue;
        mats[i] = face_system(ls, ctx.face.generator_indices, ctx.span_dim);
    }
    auto outcomes = run_faces(s, opts, [&](const FaceContext& ctx) {
        std::size_t i = static_cast<std::size_t>(&ctx - s.faces.data());
        return analyze_face_single(s, ctx, f, mats[i], opts);
    });
    return collect_zeta(std::move(outcomes));
}

}  // namespace toric_zeta
