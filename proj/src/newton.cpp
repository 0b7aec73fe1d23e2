#include "toric_zeta/newton.hpp"

#include <algorithm>
#include <set>

namespace toric_zeta {

ToricPolynomial make_toric_polynomial(
    const std::vector<std::pair<Vec, Rat>>& terms) {
    ToricPolynomial f;
    for (const auto& [e, c] : terms) {
        auto it = f.terms.find(e);
        if (it == f.terms.end()) {
            if (c != 0) f.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) f.terms.erase(it);
        }
    }
    return f;
}

std::vector<Vec> support(const ToricPolynomial& f) {
    std::vector<Vec> out;
    out.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms) out.push_back(e);
    return out;
}

SemigroupPresentation build_presentation(const std::vector<Vec>& generators,
                                         Exec exec) {
    if (generators.empty())
        throw ValidationError("semigroup needs at least one generator");
    std::size_t n = generators[0].size();
    for (const Vec& g : generators)
        if (g.size() != n)
            throw ValidationError("generator dimension mismatch");

    SemigroupPresentation s;
    s.ambient_dim = n;
    s.generators = generators;
    s.lattice = lattice_from_generators(generators, n);
    s.cone = cone_from_generators(generators, s.lattice, exec);
    if (!s.cone.strongly_convex)
        throw ValidationError(
            "K(S) contains a line; only strongly convex cones are supported");
    if (s.lattice.rank() < n)
        throw ValidationError(
            "dim K(S) < n: re-express S in M(S) coordinates first");
    for (const FaceDescriptor& fd : s.cone.faces) {
        FaceContext ctx;
        ctx.face = fd;
        ctx.span_dim = fd.dim;
        ctx.sublattice = fd.span_lattice;
        internal_check(ctx.sublattice.rank() == fd.dim,
                       "face sublattice rank mismatch");
        s.faces.push_back(std::move(ctx));
    }
    return s;
}

namespace {

bool membership_search(const Vec& target, const SemigroupPresentation& s,
                       const std::vector<Vec>& gen_coords,
                       const DualVec& ell, std::set<Vec>& failed) {
    if (is_zero_vec(target)) return true;
    if (failed.count(target)) return false;
    Int budget = dot(ell, target);
    for (const Vec& g : gen_coords) {
        if (dot(ell, g) > budget) continue;
        Vec rest = vec_sub(target, g);
        if (!cone_contains(s.cone, rest)) continue;
        if (membership_search(rest, s, gen_coords, ell, failed)) return true;
    }
    failed.insert(target);
    return false;
}

}  // namespace

bool semigroup_membership(const Vec& v, const SemigroupPresentation& s) {
    if (v.size() != s.ambient_dim) return false;
    if (is_zero_vec(v)) return true;
    if (!in_lattice(v, s.lattice)) return false;
    Vec vc = coords_in_basis(v, s.lattice);
    if (!cone_contains(s.cone, vc)) return false;

    // ell = sum of facet normals: strictly positive on K(S) minus 0, so
    // every step of the search strictly shrinks the budget.
    DualVec ell(s.lattice.rank(), 0);
    for (const DualVec& u : s.cone.facet_normals) ell = vec_add(ell, u);
    std::vector<Vec> gen_coords;
    for (const Vec& g : s.cone.gens_coords)
        if (!is_zero_vec(g)) gen_coords.push_back(g);
    std::sort(gen_coords.begin(), gen_coords.end());
    gen_coords.erase(std::unique(gen_coords.begin(), gen_coords.end()),
                     gen_coords.end());
    for (const Vec& g : gen_coords)
        internal_check(dot(ell, g) > 0, "functional not positive on generator");

    std::set<Vec> failed;
    return membership_search(vc, s, gen_coords, ell, failed);
}

void validate_polynomial(const ToricPolynomial& f,
                         const SemigroupPresentation& s) {
    if (f.terms.empty()) throw ValidationError("zero polynomial");
    for (const auto& [e, c] : f.terms) {
        internal_check(c != 0, "zero coefficient stored");
        if (!semigroup_membership(e, s))
            throw ValidationError("exponent " + to_string(e) +
                                  " is not an element of the semigroup");
    }
}

void validate_vanishing(const ToricPolynomial& f) {
    if (f.terms.empty()) throw ValidationError("zero polynomial");
    for (const auto& [e, c] : f.terms)
        if (is_zero_vec(e))
            throw ValidationError(
                "f(0) ≠ 0: Milnor fiber at the fixed point undefined in this "
                "framework");
}

std::vector<Vec> support_on_face(const ToricPolynomial& f,
                                 const SemigroupPresentation& s,
                                 const FaceContext& ctx) {
    std::vector<Vec> out;
    for (const auto& [e, c] : f.terms) {
        Vec ec = coords_in_basis(e, s.lattice);
        if (face_contains(s.cone, ctx.face, ec)) out.push_back(e);
    }
    return out;
}

ToricPolynomial u_part(const ToricPolynomial& f,
                       const SemigroupPresentation& s, const FaceContext& ctx,
                       const DualVec& u) {
    std::vector<Vec> sel = support_on_face(f, s, ctx);
    if (sel.empty())
        throw ValidationError("face does not meet Newton polygon");
    internal_check(u.size() == ctx.span_dim, "u_part: covector rank mismatch");
    bool first = true;
    Int best = 0;
    std::vector<std::pair<Vec, Int>> vals;
    for (const Vec& e : sel) {
        Vec fc = coords_in_basis(e, ctx.sublattice);
        Int val = dot(u, fc);
        vals.emplace_back(e, val);
        if (first || val < best) {
            best = val;
            first = false;
        }
    }
    ToricPolynomial out;
    for (const auto& [e, val] : vals)
        if (val == best) out.terms.emplace(e, f.terms.at(e));
    return out;
}

}  // namespace toric_zeta
