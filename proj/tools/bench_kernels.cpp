#include <chrono>
#include <cstdio>
#include <random>

#include "toric_zeta/engine.hpp"
#include "toric_zeta/oracles.hpp"

using namespace toric_zeta;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial, double openmp, bool agree) {
    std::printf("%-24s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial,
                openmp, serial / openmp, agree ? "results agree" : "MISMATCH");
}

std::vector<Vec> random_points(std::mt19937_64& rng, std::size_t count,
                               std::size_t dim, long lo, long hi) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < count; ++i) {
        Vec v(dim);
        for (Int& x : v) x = coord(rng);
        pts.push_back(std::move(v));
    }
    return pts;
}

}  // namespace

int main() {
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp",
                "speedup");

    {
        std::mt19937_64 rng(7);
        std::size_t dim = 6;
        std::vector<Vec> gens = random_points(rng, 16, dim, 0, 4);
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            gens.push_back(e);
        }
        std::vector<DualVec> a, b;
        double ts = time_ms(
            [&] { a = cone_facet_normals(gens, dim, Exec::serial); });
        double tp = time_ms(
            [&] { b = cone_facet_normals(gens, dim, Exec::openmp); });
        row("cone facet normals", ts, tp, a == b);
    }

    {
        std::mt19937_64 rng(11);
        std::size_t dim = 3;
        std::vector<std::vector<Vec>> polys;
        for (std::size_t i = 0; i < dim; ++i)
            polys.push_back(random_points(rng, 5, dim, 0, 3));
        Lattice lat = standard_lattice(dim);
        Int a, b;
        double ts =
            time_ms([&] { a = mixed_volume(polys, lat, Exec::serial); });
        double tp =
            time_ms([&] { b = mixed_volume(polys, lat, Exec::openmp); });
        row("mixed volume", ts, tp, a == b);
    }

    {
        std::mt19937_64 rng(13);
        std::size_t dim = 3;
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            gens.push_back(e);
        }
        std::vector<std::pair<Vec, Rat>> terms;
        for (const Vec& p : random_points(rng, 40, dim, 0, 8))
            if (!is_zero_vec(p)) terms.emplace_back(p, Rat(1));
        ToricPolynomial f = make_toric_polynomial(terms);
        SemigroupPresentation s = build_presentation(gens);
        ZetaResult a, b;
        EngineOptions so, po;
        so.exec = Exec::serial;
        po.exec = Exec::openmp;
        double ts = time_ms([&] { a = zeta_fixed_point(s, f, so); });
        double tp = time_ms([&] { b = zeta_fixed_point(s, f, po); });
        row("zeta pipeline", ts, tp, a.zeta == b.zeta);
    }

    return 0;
}
