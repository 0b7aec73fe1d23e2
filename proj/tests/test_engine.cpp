#include "doctest.h"
#include "toric_zeta/engine.hpp"

#include <algorithm>

#include "corpus.hpp"

using namespace toric_zeta;

namespace {

ToricPolynomial tp(const std::vector<std::pair<Vec, Rat>>& terms) {
    return make_toric_polynomial(terms);
}

const FaceReport& find_report(const std::vector<FaceReport>& reports,
                              const std::vector<std::size_t>& key) {
    for (const FaceReport& r : reports)
        if (r.face_key == key) return r;
    REQUIRE(false);
    return reports.front();
}

Int orbit_value(const EulerResult& e, const std::vector<std::size_t>& key) {
    for (const auto& [k, v] : e.per_orbit)
        if (k == key) return v;
    REQUIRE(false);
    return 0;
}

// Rank-one identity system on every face; folds back to the basic pipeline.
LocalSystemData identity_systems(const SemigroupPresentation& s) {
    LocalSystemData ls;
    for (const FaceContext& ctx : s.faces)
        ls.systems[ctx.face.generator_indices] =
            std::vector<RatMat>(ctx.span_dim, RatMat{{Rat(1)}});
    return ls;
}

Vec apply_row(const Vec& v, const IntMat& u) {
    Vec w(u[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += v[i] * u[i][j];
    return w;
}

ToricPolynomial transform(const ToricPolynomial& f, const IntMat& u) {
    std::vector<std::pair<Vec, Rat>> terms;
    for (const auto& [e, c] : f.terms) terms.emplace_back(apply_row(e, u), c);
    return make_toric_polynomial(terms);
}

std::vector<std::pair<std::vector<std::size_t>, Int>> sorted_orbits(
    const EulerResult& e) {
    auto v = e.per_orbit;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("single pipeline: cusp golden") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f = tp({{{2, 0}, Rat(1)}, {{0, 3}, Rat(1)}});

    ZetaResult z = zeta_fixed_point(s, f);
    CHECK(z.zeta.cyclotomic ==
          std::map<Int, Int>{{2, 1}, {3, 1}, {6, -1}});
    CHECK(z.zeta.matrix_factors.empty());
    CHECK(degree(z.zeta) == -1);

    EulerResult e = euler_fixed_point(s, f);
    CHECK(e.chi == -1);
    CHECK(e.per_orbit.size() == 3);
    CHECK(orbit_value(e, {0}) == 2);
    CHECK(orbit_value(e, {1}) == 3);
    CHECK(orbit_value(e, {0, 1}) == -6);

    const FaceReport& full = find_report(z.reports, {0, 1});
    CHECK(full.dim == 2);
    REQUIRE(full.facets.size() == 1);
    CHECK(full.facets[0].u == DualVec{3, 2});
    CHECK(full.facets[0].d == 6);
    CHECK(full.facets[0].weight == 1);
    CHECK(full.facets[0].exponent == -1);
    CHECK(full.facets[0].gamma == std::vector<Vec>{{0, 3}, {2, 0}});

    const FaceReport& origin = find_report(z.reports, {});
    CHECK(origin.skipped);
    CHECK(origin.skipped_reason == "Γ₊∩Δ empty");
}

TEST_CASE("single pipeline: smooth golden") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f = tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});

    ZetaResult z = zeta_fixed_point(s, f);
    CHECK(z.zeta.cyclotomic == std::map<Int, Int>{{1, 1}});
    CHECK(degree(z.zeta) == 1);

    EulerResult e = euler_fixed_point(s, f);
    CHECK(e.chi == 1);
    CHECK(orbit_value(e, {0}) == 1);
    CHECK(orbit_value(e, {1}) == 1);
    CHECK(orbit_value(e, {0, 1}) == -1);

    const FaceReport& full = find_report(z.reports, {0, 1});
    REQUIRE(full.facets.size() == 1);
    CHECK(full.facets[0].u == DualVec{1, 1});
    CHECK(full.facets[0].d == 1);
    CHECK(full.facets[0].weight == 1);
}

TEST_CASE("single pipeline: quadric cone golden") {
    SemigroupPresentation s = build_presentation({{2, 0}, {1, 1}, {0, 2}});
    ToricPolynomial f = tp({{{2, 0}, Rat(1)}, {{0, 2}, Rat(-1)}});

    ZetaResult z = zeta_fixed_point(s, f);
    CHECK(z.zeta == zeta_one());
    CHECK(degree(z.zeta) == 0);

    EulerResult e = euler_fixed_point(s, f);
    CHECK(e.chi == 0);
    CHECK(orbit_value(e, {0}) == 1);
    CHECK(orbit_value(e, {2}) == 1);
    CHECK(orbit_value(e, {0, 1, 2}) == -2);

    // Full face in M(S) coordinates: support maps to (2,-1) and (0,1).
    const FaceReport& full = find_report(z.reports, {0, 1, 2});
    REQUIRE(full.facets.size() == 1);
    CHECK(full.facets[0].gamma == std::vector<Vec>{{0, 1}, {2, -1}});
    CHECK(full.facets[0].u == DualVec{1, 1});
    CHECK(full.facets[0].d == 1);
    CHECK(full.facets[0].weight == 2);
    CHECK(full.facets[0].exponent == -2);
}

TEST_CASE("ci pipeline: transverse linear pair") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f1 = tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
    ToricPolynomial f2 = tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(-1)}});

    ZetaResult z = zeta_complete_intersection(s, {f1, f2});
    CHECK(z.zeta.cyclotomic == std::map<Int, Int>{{1, 1}});
    CHECK(degree(z.zeta) == 1);

    const FaceReport& full = find_report(z.reports, {0, 1});
    CHECK(full.ci_members == std::vector<std::size_t>{0, 1});
    CHECK(full.m == 2);
    REQUIRE(full.facets.size() == 1);
    CHECK(full.facets[0].u == DualVec{1, 1});
    CHECK(full.facets[0].d == 1);
    CHECK(full.facets[0].weight == 1);
    CHECK(full.facets[0].exponent == 1);
    CHECK(full.facets[0].gamma == std::vector<Vec>{{0, 2}, {2, 0}});

    // Both polygons meet each ray, so m = 2 exceeds the ray dimension.
    for (const auto& key : {std::vector<std::size_t>{0}, {1}}) {
        const FaceReport& r = find_report(z.reports, key);
        CHECK(r.skipped);
        CHECK(r.skipped_reason == "m(Δ) > dim Δ");
        CHECK(r.m == 2);
    }

    EulerResult e = euler_complete_intersection(s, {f1, f2});
    CHECK(e.chi == 1);
    CHECK(e.per_orbit.size() == 1);
    CHECK(orbit_value(e, {0, 1}) == 1);
}

TEST_CASE("ci pipeline: line with cusp") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f1 = tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
    ToricPolynomial f2 = tp({{{2, 0}, Rat(1)}, {{0, 3}, Rat(1)}});

    ZetaResult z = zeta_complete_intersection(s, {f1, f2});
    CHECK(z.zeta.cyclotomic == std::map<Int, Int>{{2, 1}});
    CHECK(degree(z.zeta) == 2);

    const FaceReport& full = find_report(z.reports, {0, 1});
    CHECK(full.m == 2);
    REQUIRE(full.facets.size() == 2);
    CHECK(full.facets[0].u == DualVec{1, 1});
    CHECK(full.facets[0].d == 2);
    CHECK(full.facets[0].weight == 1);
    CHECK(full.facets[0].exponent == 1);
    CHECK(full.facets[0].gamma == std::vector<Vec>{{2, 1}, {3, 0}});
    CHECK(full.facets[1].u == DualVec{3, 2});
    CHECK(full.facets[1].d == 6);
    CHECK(full.facets[1].weight == 0);
    CHECK(full.facets[1].exponent == 0);
    CHECK(full.facets[1].gamma == std::vector<Vec>{{0, 4}, {2, 1}});

    EulerResult e = euler_complete_intersection(s, {f1, f2});
    CHECK(e.chi == 2);
    CHECK(orbit_value(e, {0, 1}) == 2);
}

TEST_CASE("ci pipeline: argument validation") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f = tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
    CHECK_THROWS_WITH_AS(zeta_complete_intersection(s, {}), "no polynomials",
                         ValidationError);
    CHECK_THROWS_WITH_AS(zeta_complete_intersection(s, {f, f, f}),
                         "more polynomials than the cone dimension",
                         ValidationError);
    // Only the last polynomial must vanish at the fixed point.
    ToricPolynomial unit = tp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}});
    CHECK_NOTHROW(zeta_complete_intersection(s, {unit, f}));
    CHECK_THROWS_WITH_AS(
        zeta_complete_intersection(s, {f, unit}),
        "f(0) ≠ 0: Milnor fiber at the fixed point undefined in this framework",
        ValidationError);
}

TEST_CASE("sheaf pipeline: monomial on the half line") {
    SemigroupPresentation s = build_presentation({{1}});
    for (long m : {1L, 2L, 3L}) {
        ToricPolynomial f = tp({{{m}, Rat(1)}});
        for (Rat a : {Rat(5), Rat(-2), Rat(1, 2)}) {
            LocalSystemData ls;
            ls.systems[{0}] = {RatMat{{a}}};
            ZetaResult z = zeta_sheaf(s, f, ls);
            // Single factor 1 - a t^m.
            Poly expect(static_cast<std::size_t>(m) + 1, Rat(0));
            expect[0] = 1;
            expect.back() = -a;
            CHECK(z.zeta.cyclotomic.empty());
            CHECK(z.zeta.matrix_factors ==
                  std::map<Poly, Int>{{expect, 1}});
            CHECK(degree(z.zeta) == m);
        }
        // a = 1 folds into the cyclotomic part.
        LocalSystemData ls;
        ls.systems[{0}] = {RatMat{{Rat(1)}}};
        ZetaResult z = zeta_sheaf(s, f, ls);
        CHECK(z.zeta.cyclotomic == std::map<Int, Int>{{m, 1}});
        CHECK(z.zeta.matrix_factors.empty());
    }
}

TEST_CASE("sheaf pipeline: cusp with rank-one system") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f = tp({{{2, 0}, Rat(1)}, {{0, 3}, Rat(1)}});
    LocalSystemData ls;
    ls.systems[{0}] = {RatMat{{Rat(1)}}};
    ls.systems[{1}] = {RatMat{{Rat(1)}}};
    ls.systems[{0, 1}] = {RatMat{{Rat(1, 2)}}, RatMat{{Rat(3)}}};

    ZetaResult z = zeta_sheaf(s, f, ls);
    CHECK(z.zeta.cyclotomic == std::map<Int, Int>{{2, 1}, {3, 1}});
    // (1/2)^3 * 3^2 = 9/8 along u = (3,2).
    Poly expect(7, Rat(0));
    expect[0] = 1;
    expect[6] = Rat(-9, 8);
    CHECK(z.zeta.matrix_factors == std::map<Poly, Int>{{expect, -1}});
    CHECK(degree(z.zeta) == -1);

    const FaceReport& full = find_report(z.reports, {0, 1});
    REQUIRE(full.facets.size() == 1);
    CHECK(full.facets[0].is_matrix);
    CHECK(full.facets[0].det_poly == expect);
    CHECK(full.facets[0].u == DualVec{3, 2});
    CHECK(full.facets[0].d == 6);
}

TEST_CASE("sheaf pipeline: validation errors") {
    SemigroupPresentation s = build_presentation({{1, 0}, {0, 1}});
    ToricPolynomial f = tp({{{2, 0}, Rat(1)}, {{0, 3}, Rat(1)}});

    LocalSystemData missing;
    missing.systems[{0}] = {RatMat{{Rat(1)}}};
    missing.systems[{0, 1}] = {RatMat{{Rat(1)}}, RatMat{{Rat(1)}}};
    CHECK_THROWS_WITH_AS(zeta_sheaf(s, f, missing),
                         "missing local system for face {1}", ValidationError);

    LocalSystemData wrong_count = identity_systems(s);
    wrong_count.systems[{0, 1}] = {RatMat{{Rat(1)}}};
    CHECK_THROWS_WITH_AS(zeta_sheaf(s, f, wrong_count),
                         "local system must supply one matrix per face dimension",
                         ValidationError);

    LocalSystemData mismatch = identity_systems(s);
    mismatch.systems[{0, 1}] = {RatMat{{Rat(1)}},
                                RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    CHECK_THROWS_WITH_AS(zeta_sheaf(s, f, mismatch),
                         "local system matrix size mismatch", ValidationError);

    LocalSystemData singular = identity_systems(s);
    singular.systems[{0, 1}] = {RatMat{{Rat(0)}}, RatMat{{Rat(1)}}};
    CHECK_THROWS_WITH_AS(zeta_sheaf(s, f, singular),
                         "monodromy must be invertible", ValidationError);

    LocalSystemData noncomm = identity_systems(s);
    noncomm.systems[{0, 1}] = {RatMat{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}},
                               RatMat{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}};
    CHECK_THROWS_WITH_AS(zeta_sheaf(s, f, noncomm),
                         "local system matrices must commute", ValidationError);
}

TEST_CASE("identity local systems reduce to the basic pipeline") {
    SemigroupPresentation orthant = build_presentation({{1, 0}, {0, 1}});
    SemigroupPresentation quadric = build_presentation({{2, 0}, {1, 1}, {0, 2}});
    std::vector<std::pair<SemigroupPresentation*, ToricPolynomial>> cases = {
        {&orthant, tp({{{2, 0}, Rat(1)}, {{0, 3}, Rat(1)}})},
        {&orthant, tp({{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}})},
        {&quadric, tp({{{2, 0}, Rat(1)}, {{0, 2}, Rat(-1)}})},
    };
    for (const auto& [s, f] : cases) {
        ZetaResult plain = zeta_fixed_point(*s, f);
        ZetaResult sheaf = zeta_sheaf(*s, f, identity_systems(*s));
        CHECK(sheaf.zeta == plain.zeta);
    }

    corpus::Rng rng(721);
    for (int iter = 0; iter < 15; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        ZetaResult plain = zeta_fixed_point(c.s, c.f);
        ZetaResult sheaf = zeta_sheaf(c.s, c.f, identity_systems(c.s));
        CHECK(sheaf.zeta == plain.zeta);
    }
}

TEST_CASE("ci with one polynomial matches the single pipeline") {
    corpus::Rng rng(193);
    for (int iter = 0; iter < 50; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        ZetaResult single = zeta_fixed_point(c.s, c.f);
        ZetaResult ci = zeta_complete_intersection(c.s, {c.f});
        CHECK(single.zeta == ci.zeta);

        EulerResult es = euler_fixed_point(c.s, c.f);
        EulerResult ec = euler_complete_intersection(c.s, {c.f});
        CHECK(es.chi == ec.chi);
        CHECK(sorted_orbits(es) == sorted_orbits(ec));
    }
}

TEST_CASE("zeta degree equals the Euler characteristic") {
    corpus::Rng rng(377);
    for (int iter = 0; iter < 50; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        CHECK(degree(zeta_fixed_point(c.s, c.f).zeta) ==
              euler_fixed_point(c.s, c.f).chi);
    }
    for (int iter = 0; iter < 20; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng, 4);
        ToricPolynomial g = corpus::random_polynomial(rng, c.s, 3);
        std::vector<ToricPolynomial> fs = {g, c.f};
        CHECK(degree(zeta_complete_intersection(c.s, fs).zeta) ==
              euler_complete_intersection(c.s, fs).chi);
    }
}

TEST_CASE("zeta depends only on the Newton polygon") {
    corpus::Rng rng(455);
    for (int iter = 0; iter < 25; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        std::vector<std::pair<Vec, Rat>> changed;
        for (const auto& [e, coeff] : c.f.terms)
            changed.emplace_back(e, corpus::random_nonzero_rat(rng));
        ToricPolynomial g = make_toric_polynomial(changed);
        CHECK(zeta_fixed_point(c.s, c.f).zeta == zeta_fixed_point(c.s, g).zeta);
        CHECK(sorted_orbits(euler_fixed_point(c.s, c.f)) ==
              sorted_orbits(euler_fixed_point(c.s, g)));
    }
}

TEST_CASE("zeta is invariant under unimodular coordinate changes") {
    corpus::Rng rng(533);
    for (int iter = 0; iter < 25; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        IntMat u = corpus::random_unimodular(rng, c.s.ambient_dim);
        std::vector<Vec> gens;
        for (const Vec& g : c.s.generators) gens.push_back(apply_row(g, u));
        SemigroupPresentation s2 = build_presentation(gens);
        ToricPolynomial f2 = transform(c.f, u);

        CHECK(zeta_fixed_point(s2, f2).zeta == zeta_fixed_point(c.s, c.f).zeta);
        CHECK(sorted_orbits(euler_fixed_point(s2, f2)) ==
              sorted_orbits(euler_fixed_point(c.s, c.f)));
    }
}

TEST_CASE("serial and openmp execution agree") {
    corpus::Rng rng(611);
    for (int iter = 0; iter < 15; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        EngineOptions par{Exec::openmp, false};
        ZetaResult zs = zeta_fixed_point(c.s, c.f);
        ZetaResult zp = zeta_fixed_point(c.s, c.f, par);
        CHECK(zs.zeta == zp.zeta);
        REQUIRE(zs.reports.size() == zp.reports.size());
        for (std::size_t i = 0; i < zs.reports.size(); ++i) {
            CHECK(zs.reports[i].face_key == zp.reports[i].face_key);
            CHECK(zs.reports[i].skipped == zp.reports[i].skipped);
            CHECK(zs.reports[i].orbit_chi == zp.reports[i].orbit_chi);
        }
    }
}

TEST_CASE("face reports satisfy the structural invariants") {
    corpus::Rng rng(801);
    for (int iter = 0; iter < 25; ++iter) {
        corpus::CorpusCase c = corpus::random_case(rng);
        ZetaResult z = zeta_fixed_point(c.s, c.f);
        for (const FaceReport& r : z.reports) {
            if (r.skipped) {
                CHECK(r.skipped_reason == "Γ₊∩Δ empty");
                CHECK(r.facets.empty());
                continue;
            }
            CHECK(r.dim >= 1);
            Int sign = sign_pow(r.dim - 1);
            for (const FacetRecord& rec : r.facets) {
                CHECK(rec.d >= 1);
                CHECK(rec.weight >= 0);
                CHECK(rec.exponent == sign * rec.weight);
                CHECK(rec.u.size() == r.dim);
            }
        }

        ToricPolynomial g = corpus::random_polynomial(rng, c.s, 3);
        ZetaResult zc = zeta_complete_intersection(c.s, {g, c.f});
        for (const FaceReport& r : zc.reports) {
            if (r.skipped) {
                CHECK((r.skipped_reason == "Γ₊∩Δ empty" ||
                       r.skipped_reason == "m(Δ) > dim Δ"));
                continue;
            }
            CHECK(r.m == r.ci_members.size());
            CHECK(r.m <= r.dim);
            Int sign = sign_pow(r.dim - r.m);
            for (const FacetRecord& rec : r.facets) {
                CHECK(rec.d >= 1);
                CHECK(rec.weight >= 0);
                CHECK(rec.exponent == sign * rec.weight);
            }
        }
    }
}
