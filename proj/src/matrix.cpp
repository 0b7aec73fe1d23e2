#include "toric_zeta/matrix.hpp"

#include <algorithm>
#include <utility>

namespace toric_zeta {

IntMat int_identity(std::size_t n) {
    IntMat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        internal_check(m[i].size() == m[0].size(), "transpose: ragged matrix");
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    }
    return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), c = b[0].size();
    IntMat r(n, Vec(c, 0));
    for (std::size_t i = 0; i < n; ++i) {
        internal_check(a[i].size() == k, "mat_mul: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < c; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    }
    return r;
}

HnfResult hermite_normal_form(const IntMat& m) {
    HnfResult res;
    res.h = m;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (const Vec& r : m)
        internal_check(r.size() == cols, "hnf: ragged matrix");
    res.u = int_identity(rows);
    IntMat& h = res.h;
    IntMat& u = res.u;

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (h[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(h[row], h[pivot]);
        std::swap(u[row], u[pivot]);

        for (std::size_t i = row + 1; i < rows; ++i) {
            if (h[i][col] == 0) continue;
            // Unimodular 2x2 transform [[s,t],[-b,a]] with det 1 sends the
            // pair of pivot entries to (g, 0).
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       h[row][col].get_mpz_t(), h[i][col].get_mpz_t());
            Int a = h[row][col] / g;
            Int b = h[i][col] / g;
            for (std::size_t j = 0; j < cols; ++j) {
                Int x = h[row][j], y = h[i][j];
                h[row][j] = s * x + t * y;
                h[i][j] = -b * x + a * y;
            }
            for (std::size_t j = 0; j < rows; ++j) {
                Int x = u[row][j], y = u[i][j];
                u[row][j] = s * x + t * y;
                u[i][j] = -b * x + a * y;
            }
        }
        if (h[row][col] < 0) {
            for (Int& x : h[row]) x = -x;
            for (Int& x : u[row]) x = -x;
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(h[i][col], h[row][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[row][j];
            for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[row][j];
        }
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t int_rank(const IntMat& m) {
    if (m.empty()) return 0;
    return hermite_normal_form(m).rank;
}

IntMat row_kernel(const IntMat& m) {
    HnfResult r = hermite_normal_form(m);
    IntMat out;
    for (std::size_t i = r.rank; i < r.u.size(); ++i) out.push_back(r.u[i]);
    return out;
}

IntMat kernel(const IntMat& m) { return row_kernel(transpose(m)); }

Int int_det(const IntMat& m) {
    std::size_t n = m.size();
    for (const Vec& r : m) internal_check(r.size() == n, "int_det: not square");
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: division by the previous pivot is exact.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RatMat rat_identity(std::size_t n) {
    RatMat m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), c = b[0].size();
    RatMat r(n, std::vector<Rat>(c, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        internal_check(a[i].size() == k, "rat_mul: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < c; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    }
    return r;
}

bool rat_equal(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Rat rat_det(const RatMat& m) {
    std::size_t n = m.size();
    for (const auto& r : m) internal_check(r.size() == n, "rat_det: not square");
    RatMat a = m;
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][k] != 0) {
                p = i;
                break;
            }
        if (p == n) return Rat(0);
        if (p != k) {
            std::swap(a[k], a[p]);
            det = -det;
        }
        det *= a[k][k];
        Rat inv = 1 / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

std::optional<RatMat> rat_inverse(const RatMat& m) {
    std::size_t n = m.size();
    for (const auto& r : m)
        internal_check(r.size() == n, "rat_inverse: not square");
    RatMat a = m;
    RatMat inv = rat_identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][k] != 0) {
                p = i;
                break;
            }
        if (p == n) return std::nullopt;
        std::swap(a[k], a[p]);
        std::swap(inv[k], inv[p]);
        Rat f = 1 / a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= f;
            inv[k][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat g = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[k][j];
                inv[i][j] -= g * inv[k][j];
            }
        }
    }
    return inv;
}

RatMat rat_pow(const RatMat& a, const Int& e) {
    std::size_t n = a.size();
    RatMat base = a;
    Int exp = e;
    if (exp < 0) {
        auto inv = rat_inverse(a);
        internal_check(inv.has_value(), "rat_pow: singular base");
        base = *inv;
        exp = -exp;
    }
    RatMat result = rat_identity(n);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = rat_mul(result, base);
        base = rat_mul(base, base);
        exp = floor_div(exp, Int(2));
    }
    return result;
}

std::vector<Rat> char_poly(const RatMat& a) {
    std::size_t n = a.size();
    for (const auto& r : a)
        internal_check(r.size() == n, "char_poly: not square");
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    if (n == 0) return c;
    RatMat m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A * (M_{k-1} + c[n-k+1] * I)
            RatMat shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[n - k + 1];
            m = rat_mul(a, shifted);
        }
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return c;
}

}  // namespace toric_zeta
