#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric_zeta {

// Arbitrary-precision integers and rationals; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Row vector with Int entries; coordinate meaning is given by context
// (ambient coordinates or coordinates relative to a lattice basis).
using Vec = std::vector<Int>;

// Input violates a documented precondition (wrong data, not a bug).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem file cannot be read or does not match the schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant failed; indicates a bug, never an input problem.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("internal error: " + what);
}

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor division (gmp operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const Vec& a, const Vec& b) {
    internal_check(a.size() == b.size(), "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    internal_check(a.size() == b.size(), "vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    internal_check(a.size() == b.size(), "vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scaled(const Vec& a, const Int& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int vec_gcd(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

// (-1)^k as an Int.
inline Int sign_pow(std::size_t k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

inline std::int64_t to_int64(const Int& a, const char* what = "integer") {
    if (!a.fits_slong_p())
        throw std::logic_error(std::string("value out of 64-bit range: ") + what);
    return static_cast<std::int64_t>(a.get_si());
}

}  // namespace toric_zeta
