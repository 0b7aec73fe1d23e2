#include "toric_zeta/lattice.hpp"

#include <algorithm>

namespace toric_zeta {

Lattice standard_lattice(std::size_t dim) {
    return Lattice{dim, int_identity(dim)};
}

Lattice lattice_from_generators(const std::vector<Vec>& vectors,
                                std::size_t ambient_dim) {
    IntMat rows;
    for (const Vec& v : vectors) {
        internal_check(v.size() == ambient_dim,
                       "lattice_from_generators: dimension mismatch");
        rows.push_back(v);
    }
    Lattice lat;
    lat.ambient_dim = ambient_dim;
    if (rows.empty()) return lat;
    HnfResult r = hermite_normal_form(rows);
    lat.basis.assign(r.h.begin(), r.h.begin() + r.rank);
    return lat;
}

std::optional<std::vector<Rat>> span_coords_rat(const Vec& v,
                                                const Lattice& lat) {
    internal_check(v.size() == lat.ambient_dim,
                   "span_coords_rat: dimension mismatch");
    std::size_t r = lat.rank();
    std::vector<Rat> c(r, Rat(0));
    std::vector<Rat> rem(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) rem[j] = v[j];
    // HNF rows solve forward: each row's pivot column is zero in all
    // later rows.
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t p = 0;
        while (p < lat.ambient_dim && lat.basis[i][p] == 0) ++p;
        internal_check(p < lat.ambient_dim, "span_coords_rat: zero basis row");
        c[i] = rem[p] / Rat(lat.basis[i][p]);
        for (std::size_t j = 0; j < v.size(); ++j)
            rem[j] -= c[i] * Rat(lat.basis[i][j]);
    }
    for (const Rat& x : rem)
        if (x != 0) return std::nullopt;
    return c;
}

Vec coords_in_basis(const Vec& v, const Lattice& lat) {
    auto c = span_coords_rat(v, lat);
    if (!c) throw ValidationError("outside span");
    Vec out(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
        if ((*c)[i].get_den() != 1) throw ValidationError("not a lattice point");
        out[i] = (*c)[i].get_num();
    }
    return out;
}

bool in_span(const Vec& v, const Lattice& lat) {
    return span_coords_rat(v, lat).has_value();
}

bool in_lattice(const Vec& v, const Lattice& lat) {
    auto c = span_coords_rat(v, lat);
    if (!c) return false;
    for (const Rat& x : *c)
        if (x.get_den() != 1) return false;
    return true;
}

Vec from_coords(const Vec& c, const Lattice& lat) {
    internal_check(c.size() == lat.rank(), "from_coords: rank mismatch");
    Vec v(lat.ambient_dim, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < lat.ambient_dim; ++j)
            v[j] += c[i] * lat.basis[i][j];
    return v;
}

Int lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_dim != super.ambient_dim || sub.rank() != super.rank())
        throw ValidationError("not a sublattice");
    IntMat coords;
    for (const Vec& row : sub.basis) {
        try {
            coords.push_back(coords_in_basis(row, super));
        } catch (const ValidationError&) {
            throw ValidationError("not a sublattice");
        }
    }
    if (coords.empty()) return 1;
    Int d = int_det(coords);
    internal_check(d != 0, "lattice_index: dependent basis");
    return d < 0 ? Int(-d) : d;
}

Vec primitive(const Vec& v) {
    Int g = vec_gcd(v);
    if (g == 0) throw ValidationError("zero vector has no primitive");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Int dual_pairing(const DualVec& u, const Vec& v, const Lattice& lat) {
    Vec c = coords_in_basis(v, lat);
    return dot(u, c);
}

Lattice saturation_of_span(const std::vector<Vec>& vectors,
                           std::size_t ambient_dim) {
    IntMat rows;
    for (const Vec& v : vectors) {
        internal_check(v.size() == ambient_dim,
                       "saturation_of_span: dimension mismatch");
        if (!is_zero_vec(v)) rows.push_back(v);
    }
    if (rows.empty()) return Lattice{ambient_dim, {}};
    // n in the orthogonal complement iff n is in the row kernel of the
    // transpose; saturating again recovers Z^dim cap span.
    IntMat normals = row_kernel(transpose(rows));
    if (normals.empty()) return standard_lattice(ambient_dim);
    IntMat sat = row_kernel(transpose(normals));
    Lattice lat = lattice_from_generators(sat, ambient_dim);
    internal_check(lat.rank() == int_rank(rows),
                   "saturation_of_span: rank changed");
    return lat;
}

IntMat right_inverse_saturated(const Lattice& lat) {
    std::size_t r = lat.rank();
    if (r == 0) return IntMat(lat.ambient_dim, Vec(0));
    HnfResult res = hermite_normal_form(transpose(lat.basis));
    internal_check(res.rank == r, "right_inverse_saturated: rank deficient");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            internal_check(res.h[i][j] == (i == j ? 1 : 0),
                           "right_inverse_saturated: basis not saturated");
    IntMat top(res.u.begin(), res.u.begin() + r);
    return transpose(top);
}

}  // namespace toric_zeta
