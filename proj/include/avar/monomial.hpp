// Monomials are exponent vectors indexed by ring variable. Laurent
// variables may carry negative exponents.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "avar/ring.hpp"

namespace avar {

using Monomial = std::vector<std::int32_t>;

inline Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

inline Monomial mono_var(std::size_t nvars, std::size_t i, std::int32_t e = 1) {
    Monomial m(nvars, 0);
    m[i] = e;
    return m;
}

inline bool mono_is_one(const Monomial& m) {
    for (auto e : m)
        if (e != 0) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// a / b without divisibility check (Laurent-style quotient).
inline Monomial mono_quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// b | a in the polynomial (non-Laurent) sense.
inline bool mono_divides(const Monomial& b, const Monomial& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
}

inline long mono_total_degree(const Monomial& m) {
    long d = 0;
    for (auto e : m) d += e;
    return d;
}

inline bool mono_nonnegative(const Monomial& m) {
    for (auto e : m)
        if (e < 0) return false;
    return true;
}

// Canonical serialization order: pure lexicographic by exponent vector,
// first variable most significant. Returns <0, 0, >0.
inline int mono_lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace avar
