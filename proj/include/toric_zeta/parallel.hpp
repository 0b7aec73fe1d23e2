#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric_zeta {

// Execution policy threaded through the kernels. The serial path is the
// reference implementation; the openmp path must produce identical results.
enum class Exec { serial, openmp };

// Runs fn(i) for i in [0, n). Exceptions are captured per index and the
// first one (in index order) is rethrown, so error behaviour matches the
// serial path.
inline void parallel_for(std::size_t n, Exec exec,
                         const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
#ifdef _OPENMP
    if (exec == Exec::openmp) {
        std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                errs[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (errs[i]) std::rethrow_exception(errs[i]);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Number of k-subsets of an n-set, as size_t (callers keep n small).
inline std::size_t binomial_count(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// The `idx`-th k-subset of {0,..,n-1} in lexicographic order. Used so the
// parallel facet scan visits subsets in exactly the serial order.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k,
                                                   std::size_t idx) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t x = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        while (true) {
            std::size_t c = binomial_count(n - x - 1, k - slot - 1);
            if (idx < c) {
                out.push_back(x);
                ++x;
                break;
            }
            idx -= c;
            ++x;
        }
    }
    return out;
}

}  // namespace toric_zeta
