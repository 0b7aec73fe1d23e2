#include "toric_zeta/oracles.hpp"

#include <algorithm>

namespace toric_zeta {

namespace {

constexpr long kMaxGridPoints = 5000000;

// Lattice points of k*conv(pts) for a full-dimensional polytope in Z^r,
// via its facet description.
Int count_dilate(const std::vector<Vec>& pts,
                 const std::vector<CompactFacet>& facets, std::size_t r,
                 const Int& k) {
    if (k == 0) return 1;
    Vec lo(r), hi(r);
    for (std::size_t j = 0; j < r; ++j) {
        lo[j] = pts[0][j];
        hi[j] = pts[0][j];
        for (const Vec& p : pts) {
            if (p[j] < lo[j]) lo[j] = p[j];
            if (p[j] > hi[j]) hi[j] = p[j];
        }
        lo[j] *= k;
        hi[j] *= k;
    }
    Vec x = lo;
    Int count = 0;
    while (true) {
        bool inside = true;
        for (const CompactFacet& f : facets)
            if (dot(f.normal, x) < k * f.min_value) {
                inside = false;
                break;
            }
        if (inside) ++count;
        std::size_t j = 0;
        while (j < r) {
            ++x[j];
            if (x[j] <= hi[j]) break;
            x[j] = lo[j];
            ++j;
        }
        if (j == r) break;
    }
    return count;
}

Int binomial_int(std::size_t n, std::size_t k) {
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Int(static_cast<long>(n - i));
        r /= Int(static_cast<long>(i + 1));
    }
    return r;
}

std::vector<Vec> sum_vertex_lists(const std::vector<Vec>& a,
                                  const std::vector<Vec>& b, std::size_t n) {
    std::vector<Vec> sums;
    sums.reserve(a.size() * b.size());
    for (const Vec& p : a)
        for (const Vec& q : b) sums.push_back(vec_add(p, q));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    if (sums.size() <= 1) return sums;
    return make_polyhedron(standard_lattice(n), sums, {}).points;
}

// All alpha in N^n with |alpha| = n, lexicographic.
void homogeneous_exponents(std::size_t n, std::size_t slots,
                           std::vector<std::size_t>& cur,
                           std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == slots) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t a = 0; a <= n; ++a) {
        cur.push_back(a);
        homogeneous_exponents(n - a, slots, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Int volume_by_point_counting(const std::vector<Vec>& vertices,
                             const Lattice& lat, Exec exec) {
    if (vertices.empty()) throw ValidationError("empty vertex list");
    std::vector<Vec> coords;
    coords.reserve(vertices.size());
    for (const Vec& v : vertices) coords.push_back(coords_in_basis(v, lat));

    std::vector<Vec> dirs;
    for (const Vec& c : coords) dirs.push_back(vec_sub(c, coords[0]));
    Lattice sat = saturation_of_span(dirs, lat.rank());
    std::size_t r = sat.rank();
    if (r == 0) return 1;
    if (r > 3)
        throw ValidationError("dimension too large for point counting");
    std::vector<Vec> mapped;
    mapped.reserve(coords.size());
    for (const Vec& d : dirs) mapped.push_back(coords_in_basis(d, sat));

    Int grid = 1;
    for (std::size_t j = 0; j < r; ++j) {
        Int lo = mapped[0][j], hi = mapped[0][j];
        for (const Vec& p : mapped) {
            if (p[j] < lo) lo = p[j];
            if (p[j] > hi) hi = p[j];
        }
        grid *= Int(static_cast<long>(r)) * (hi - lo) + 1;
    }
    if (grid > kMaxGridPoints)
        throw ValidationError("enumeration bounds infeasible");

    LatticePolyhedron poly =
        make_polyhedron(standard_lattice(r), mapped, {});
    std::vector<CompactFacet> facets = compact_facets(poly);

    std::vector<Int> counts(r + 1);
    parallel_for(r + 1, exec, [&](std::size_t k) {
        counts[k] =
            count_dilate(poly.points, facets, r, Int(static_cast<long>(k)));
    });

    Int vol = 0;
    for (std::size_t i = 0; i <= r; ++i) {
        Int term = binomial_int(r, i) * counts[i];
        vol += ((r - i) % 2 == 0) ? term : -term;
    }
    internal_check(vol >= 0, "negative point-count volume");
    return vol;
}

Int mixed_volume_by_polynomiality(const std::vector<std::vector<Vec>>& polys,
                                  const Lattice& lat, Exec exec) {
    std::size_t n = lat.rank();
    if (polys.size() != n) throw ValidationError("arity must equal dimension");
    if (n == 0) return 1;
    if (n > 3)
        throw ValidationError("dimension too large for polynomiality oracle");

    std::vector<std::vector<Vec>> qs;
    for (const auto& p : polys) {
        if (p.empty()) throw ValidationError("empty vertex list");
        std::vector<Vec> coords;
        for (const Vec& v : p) coords.push_back(coords_in_basis(v, lat));
        Vec base = coords[0];
        for (Vec& c : coords) c = vec_sub(c, base);
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        qs.push_back(std::move(coords));
    }

    std::vector<std::vector<std::size_t>> monomials;
    std::vector<std::size_t> cur;
    homogeneous_exponents(n, n, cur, monomials);
    std::size_t cols = monomials.size();

    // Grid lambda in {1..n+1}^n.
    std::vector<std::vector<std::size_t>> grid;
    std::vector<std::size_t> lambda(n, 1);
    while (true) {
        grid.push_back(lambda);
        std::size_t j = 0;
        while (j < n) {
            ++lambda[j];
            if (lambda[j] <= n + 1) break;
            lambda[j] = 1;
            ++j;
        }
        if (j == n) break;
    }
    if (grid.size() < cols) throw ValidationError("grid too small");

    std::vector<Int> values(grid.size());
    parallel_for(grid.size(), exec, [&](std::size_t gi) {
        const auto& lam = grid[gi];
        std::vector<Vec> sum{Vec(n, 0)};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Vec> scaled;
            scaled.reserve(qs[i].size());
            for (const Vec& v : qs[i])
                scaled.push_back(
                    vec_scaled(v, Int(static_cast<long>(lam[i]))));
            sum = sum_vertex_lists(sum, scaled, n);
        }
        values[gi] = topdim_normalized_volume(sum, n);
    });

    // Exact solve of the homogeneous polynomial coefficients.
    std::vector<std::vector<Rat>> aug(grid.size(),
                                      std::vector<Rat>(cols + 1, Rat(0)));
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        for (std::size_t c = 0; c < cols; ++c) {
            Int m = 1;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t e = 0; e < monomials[c][j]; ++e)
                    m *= Int(static_cast<long>(grid[gi][j]));
            aug[gi][c] = m;
        }
        aug[gi][cols] = values[gi];
    }
    std::vector<std::vector<Rat>> work = aug;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = work.size();
        for (std::size_t i = row; i < work.size(); ++i)
            if (work[i][c] != 0) {
                p = i;
                break;
            }
        if (p == work.size()) throw ValidationError("grid too small");
        std::swap(work[row], work[p]);
        Rat inv = 1 / work[row][c];
        for (Rat& x : work[row]) x *= inv;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == row || work[i][c] == 0) continue;
            Rat f = work[i][c];
            for (std::size_t c2 = c; c2 <= cols; ++c2)
                work[i][c2] -= f * work[row][c2];
        }
        pivot_row[c] = row;
        ++row;
    }
    std::vector<Rat> coeff(cols);
    for (std::size_t c = 0; c < cols; ++c) coeff[c] = work[pivot_row[c]][cols];
    for (std::size_t gi = 0; gi < aug.size(); ++gi) {
        Rat acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += aug[gi][c] * coeff[c];
        internal_check(acc == aug[gi][cols], "polynomiality residual");
    }

    std::vector<std::size_t> ones(n, 1);
    std::size_t target = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (monomials[c] == ones) {
            target = c;
            break;
        }
    internal_check(target < cols, "mixed monomial missing");
    Int fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= Int(static_cast<long>(i));
    Rat result = coeff[target] / Rat(fact);
    internal_check(result.get_den() == 1, "mixed coefficient not integral");
    internal_check(result >= 0, "negative oracle mixed volume");
    return result.get_num();
}

CheckSummary replay_volume_events(const std::vector<VolumeEvent>& events,
                                  Exec exec) {
    CheckSummary summary;
    for (const VolumeEvent& ev : events) {
        internal_check(!ev.polys.empty(), "volume event without polytopes");
        try {
            Int oracle;
            if (ev.mixed) {
                oracle = mixed_volume_by_polynomiality(
                    ev.polys, standard_lattice(ev.rank), exec);
            } else {
                oracle = volume_by_point_counting(
                    ev.polys[0], standard_lattice(ev.rank), exec);
            }
            internal_check(oracle == ev.value, "oracle mismatch");
            ++summary.checked;
        } catch (const ValidationError&) {
            ++summary.skipped;
        }
    }
    return summary;
}

}  // namespace toric_zeta
