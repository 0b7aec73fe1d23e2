#include "toric_zeta/zeta.hpp"

#include <algorithm>

namespace toric_zeta {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    internal_check(!b.empty(), "poly_divmod: division by zero");
    Poly rem = a;
    Poly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
    Rat lead = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
        Rat c = rem.back() / lead;
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] -= c * b[i];
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(quot)), std::move(rem)};
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

Poly poly_spread(const Poly& p, std::size_t d) {
    internal_check(d >= 1, "poly_spread: d must be positive");
    if (p.empty()) return {};
    Poly r((p.size() - 1) * d + 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i * d] = p[i];
    return r;
}

std::size_t poly_degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Poly det_factor(const RatMat& b, const Int& d) {
    std::size_t r = b.size();
    std::vector<Rat> c = char_poly(b);
    // det(I - sB) = s^r det((1/s)I - B): coefficient of s^j is c[r - j].
    Poly p(r + 1, Rat(0));
    for (std::size_t j = 0; j <= r; ++j) p[j] = c[r - j];
    p = poly_trim(std::move(p));
    internal_check(!p.empty() && p[0] == 1, "det factor constant term not 1");
    std::size_t dd = static_cast<std::size_t>(to_int64(d, "factor degree"));
    internal_check(dd >= 1, "det factor with d < 1");
    return poly_spread(p, dd);
}

ZetaFactorization zeta_one() { return {}; }

void mul_cyclotomic(ZetaFactorization& z, const Int& d, const Int& e) {
    internal_check(d >= 1, "cyclotomic factor with d < 1");
    if (e == 0) return;
    auto it = z.cyclotomic.find(d);
    if (it == z.cyclotomic.end()) {
        z.cyclotomic.emplace(d, e);
    } else {
        it->second += e;
        if (it->second == 0) z.cyclotomic.erase(it);
    }
}

void mul_matrix_factor(ZetaFactorization& z, const Poly& p, const Int& e) {
    if (e == 0) return;
    Poly q = poly_trim(p);
    internal_check(!q.empty() && q[0] == 1, "matrix factor constant term not 1");
    if (q.size() == 1) return;  // constant factor 1 (zero-size system)
    // 1 - t^d folds into the cyclotomic map.
    if (q.size() >= 2 && q.back() == -1) {
        bool two_term = true;
        for (std::size_t i = 1; i + 1 < q.size(); ++i)
            if (q[i] != 0) {
                two_term = false;
                break;
            }
        if (two_term) {
            mul_cyclotomic(z, Int(static_cast<long>(q.size() - 1)), e);
            return;
        }
    }
    auto it = z.matrix_factors.find(q);
    if (it == z.matrix_factors.end()) {
        z.matrix_factors.emplace(std::move(q), e);
    } else {
        it->second += e;
        if (it->second == 0) z.matrix_factors.erase(it);
    }
}

ZetaFactorization multiply(const ZetaFactorization& a,
                           const ZetaFactorization& b) {
    ZetaFactorization z = a;
    for (const auto& [d, e] : b.cyclotomic) mul_cyclotomic(z, d, e);
    for (const auto& [p, e] : b.matrix_factors) mul_matrix_factor(z, p, e);
    return z;
}

Int degree(const ZetaFactorization& z) {
    Int deg = 0;
    for (const auto& [d, e] : z.cyclotomic) deg += e * d;
    for (const auto& [p, e] : z.matrix_factors)
        deg += e * Int(static_cast<long>(poly_degree(p)));
    return deg;
}

RationalFunction to_rational(const ZetaFactorization& z) {
    Poly num{Rat(1)};
    Poly den{Rat(1)};
    auto apply = [&](const Poly& p, const Int& e) {
        Poly& target = (e > 0) ? num : den;
        Int count = e > 0 ? e : Int(-e);
        for (Int i = 0; i < count; ++i) target = poly_mul(target, p);
    };
    for (const auto& [d, e] : z.cyclotomic) {
        std::size_t dd = static_cast<std::size_t>(to_int64(d, "cyclotomic d"));
        Poly p(dd + 1, Rat(0));
        p[0] = 1;
        p[dd] = -1;
        apply(p, e);
    }
    for (const auto& [p, e] : z.matrix_factors) apply(p, e);

    Poly g = poly_gcd(num, den);
    if (!g.empty() && g.size() > 1) {
        auto [qn, rn] = poly_divmod(num, g);
        auto [qd, rd] = poly_divmod(den, g);
        internal_check(rn.empty() && rd.empty(), "gcd does not divide");
        num = std::move(qn);
        den = std::move(qd);
    }
    internal_check(!den.empty() && den[0] != 0,
                   "denominator vanishes at 0");
    Rat c = den[0];
    if (c != 1) {
        for (Rat& x : num) x /= c;
        for (Rat& x : den) x /= c;
    }
    return {std::move(num), std::move(den)};
}

namespace {

std::string monomial_to_string(const Rat& coeff, std::size_t k) {
    Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    std::string s;
    if (k == 0) return to_string(mag);
    if (mag != 1) s = to_string(mag) + " ";
    s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (first) {
            if (p[k] < 0) s += "-";
            first = false;
        } else {
            s += (p[k] < 0) ? " - " : " + ";
        }
        s += monomial_to_string(p[k], k);
    }
    if (first) return "0";
    return s;
}

std::string zeta_to_string(const ZetaFactorization& z) {
    if (z.cyclotomic.empty() && z.matrix_factors.empty()) return "1";
    std::string s;
    auto add_factor = [&](const std::string& body, const Int& e) {
        if (!s.empty()) s += " ";
        s += "(" + body + ")^" + to_string(e);
    };
    for (const auto& [d, e] : z.cyclotomic) {
        std::size_t dd = static_cast<std::size_t>(to_int64(d, "cyclotomic d"));
        Poly p(dd + 1, Rat(0));
        p[0] = 1;
        p[dd] = -1;
        add_factor(poly_to_string(p), e);
    }
    for (const auto& [p, e] : z.matrix_factors)
        add_factor(poly_to_string(p), e);
    return s;
}

std::string rational_to_string(const RationalFunction& r) {
    std::size_t num_terms = 0, den_terms = 0;
    for (const Rat& c : r.num)
        if (c != 0) ++num_terms;
    for (const Rat& c : r.den)
        if (c != 0) ++den_terms;
    bool den_is_one = (r.den.size() == 1 && r.den[0] == 1);
    std::string ns = poly_to_string(r.num);
    if (den_is_one) return ns;
    if (num_terms > 1) ns = "(" + ns + ")";
    std::string ds = poly_to_string(r.den);
    if (den_terms > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace toric_zeta
