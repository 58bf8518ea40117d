#include "avar/poly_gcd.hpp"

#include <algorithm>

namespace avar {

namespace {

LaurentPolynomial promote_field(const LaurentPolynomial& f) {
    if (f.ring()->domain().kind == DomainKind::integers) return f.to_rationals();
    return f;
}

LaurentPolynomial mono_poly(const RingPtr& r, const Monomial& m, const Coefficient& c) {
    return LaurentPolynomial::from_terms(r, {{m, c}});
}

// Plain polynomial exact division: nonnegative exponents, field coefficients.
std::optional<LaurentPolynomial> divide_core(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero()) return f;
    LaurentPolynomial r = f;
    LaurentPolynomial q = LaurentPolynomial::zero(f.ring());
    const auto& lg = g.lead();
    while (!r.is_zero()) {
        const auto& lr = r.lead();
        if (!mono_divides(lg.mono, lr.mono)) return std::nullopt;
        LaurentPolynomial t = mono_poly(f.ring(), mono_quotient(lr.mono, lg.mono), lr.coeff.div(lg.coeff));
        q = q + t;
        r = r - t * g;
    }
    return q;
}

std::int32_t deg_in(const LaurentPolynomial& f, std::size_t v) { return f.is_zero() ? -1 : f.degree(v); }

LaurentPolynomial lead_coeff_in(const LaurentPolynomial& f, std::size_t v) {
    return f.coeff_of(v, f.degree(v));
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, with respect to v.
LaurentPolynomial pseudo_rem(const LaurentPolynomial& a, const LaurentPolynomial& b, std::size_t v) {
    std::int32_t db = b.degree(v);
    LaurentPolynomial lb = lead_coeff_in(b, v);
    LaurentPolynomial r = a;
    long needed = a.degree(v) - db + 1;
    long steps = 0;
    while (!r.is_zero() && r.degree(v) >= db) {
        LaurentPolynomial lr = lead_coeff_in(r, v);
        Monomial shift = mono_var(r.ring()->nvars(), v, r.degree(v) - db);
        r = r * lb - (lr * b).times_monomial(shift);
        ++steps;
    }
    for (; steps < needed; ++steps) r = r * lb;
    return r;
}

LaurentPolynomial gcd_rec(const LaurentPolynomial& f, const LaurentPolynomial& g);

// gcd of the v-coefficients (the content of f viewed in v); no v occurs in it.
LaurentPolynomial content_in(const LaurentPolynomial& f, std::size_t v) {
    LaurentPolynomial c = LaurentPolynomial::zero(f.ring());
    for (std::int32_t k = f.min_degree(v); k <= f.degree(v); ++k) {
        LaurentPolynomial ck = f.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = gcd_rec(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

LaurentPolynomial divide_exact_or_throw(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    auto q = divide_exact(f, g);
    if (!q) throw InternalError("expected exact polynomial division failed");
    return *q;
}

int lowest_var_in(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    std::size_t n = f.ring()->nvars();
    for (std::size_t i = 0; i < n; ++i)
        if (f.contains_var(i) || g.contains_var(i)) return static_cast<int>(i);
    return -1;
}

// Both inputs stripped, nonnegative exponents, field coefficients.
LaurentPolynomial gcd_rec(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.normalized();
    if (g.is_zero()) return f.normalized();
    if (f.is_constant() || g.is_constant())
        return LaurentPolynomial::constant(f.ring(), 1);
    int vi = lowest_var_in(f, g);
    if (vi < 0) return LaurentPolynomial::constant(f.ring(), 1);
    std::size_t v = static_cast<std::size_t>(vi);
    std::int32_t df = f.degree(v), dg = g.degree(v);
    if (df == 0) return gcd_rec(f, content_in(g, v));
    if (dg == 0) return gcd_rec(content_in(f, v), g);

    LaurentPolynomial cf = content_in(f, v), cg = content_in(g, v);
    LaurentPolynomial c = gcd_rec(cf, cg);
    LaurentPolynomial a = divide_exact_or_throw(f, cf);
    LaurentPolynomial b = divide_exact_or_throw(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPolynomial r = pseudo_rem(a, b, v);
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = divide_exact_or_throw(r, content_in(r, v));
        }
    }
    LaurentPolynomial pp = divide_exact_or_throw(a, content_in(a, v));
    return (c * pp).normalized();
}

// p-th root when every exponent is divisible by p (prime field only).
LaurentPolynomial pth_root(const LaurentPolynomial& f) {
    std::uint64_t p = f.ring()->domain().p;
    std::vector<LaurentPolynomial::Term> out;
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        for (auto& e : m) {
            if (e % static_cast<std::int32_t>(p) != 0)
                throw InternalError("p-th root of polynomial with non-divisible exponent");
            e /= static_cast<std::int32_t>(p);
        }
        out.push_back({std::move(m), t.coeff});
    }
    return LaurentPolynomial::from_terms(f.ring(), std::move(out));
}

LaurentPolynomial sqfree_core(const LaurentPolynomial& fin) {
    LaurentPolynomial f = fin.strip_monomial().first.normalized();
    if (f.is_constant()) return LaurentPolynomial::constant(f.ring(), 1);
    std::vector<LaurentPolynomial> partials;
    bool any_nonzero = false;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
        if (!f.contains_var(v)) continue;
        LaurentPolynomial d = f.derivative(v);
        if (!d.is_zero()) {
            any_nonzero = true;
            partials.push_back(std::move(d));
        }
    }
    if (!any_nonzero) return sqfree_core(pth_root(f)); // char p, f = h^p
    LaurentPolynomial d = f;
    for (const auto& pd : partials) {
        d = poly_gcd(d, pd);
        if (d.is_constant()) break;
    }
    if (d.is_constant()) return f;
    LaurentPolynomial w = divide_exact_or_throw(f, d).strip_monomial().first.normalized();
    LaurentPolynomial s = sqfree_core(d);
    return poly_lcm(w, s);
}

} // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    if (f.is_zero()) return f;
    bool was_z = f.ring()->domain().kind == DomainKind::integers;
    LaurentPolynomial fq = promote_field(f), gq = promote_field(g);
    auto [fc, fm] = fq.strip_monomial();
    auto [gc, gm] = gq.strip_monomial();
    auto q = divide_core(fc, gc);
    if (!q) return std::nullopt;
    Monomial corr = mono_quotient(fm, gm);
    for (std::size_t i = 0; i < corr.size(); ++i)
        if (corr[i] < 0 && !f.ring()->var(i).laurent) return std::nullopt;
    LaurentPolynomial out = q->times_monomial(corr);
    if (was_z) {
        try {
            return out.map_domain(CoeffDomain::integers(),
                                  [](const Coefficient& c) { return Coefficient::from_mpq(CoeffDomain::integers(), c.rational()); });
        } catch (const InputError&) {
            return std::nullopt; // quotient not integral
        }
    }
    return out;
}

bool divides(const LaurentPolynomial& g, const LaurentPolynomial& f) {
    return divide_exact(f, g).has_value();
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw InputError("gcd operands over different rings");
    LaurentPolynomial fq = promote_field(f), gq = promote_field(g);
    if (fq.is_zero() && gq.is_zero()) return fq;
    LaurentPolynomial fc = fq.strip_monomial().first;
    LaurentPolynomial gc = gq.strip_monomial().first;
    return gcd_rec(fc, gc).normalized();
}

LaurentPolynomial poly_lcm(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return LaurentPolynomial::zero(f.ring());
    LaurentPolynomial d = poly_gcd(f, g);
    auto q = divide_exact(f, d);
    if (!q) throw InternalError("gcd does not divide its argument");
    return (*q * g).normalized();
}

LaurentPolynomial squarefree_part(const LaurentPolynomial& f) {
    if (f.is_zero()) throw InputError("squarefree part of the zero polynomial");
    LaurentPolynomial fq = promote_field(f);
    auto [core, mono] = fq.strip_monomial();
    LaurentPolynomial s = sqfree_core(core);
    Monomial collapsed = mono;
    for (auto& e : collapsed) e = e > 0 ? 1 : (e < 0 ? -1 : 0);
    return s.times_monomial(collapsed).scalar_normalized();
}

LaurentPolynomial resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t var) {
    if (!same_ring(f.ring(), g.ring())) throw InputError("resultant operands over different rings");
    LaurentPolynomial A = promote_field(f).clear_laurent().first;
    LaurentPolynomial B = promote_field(g).clear_laurent().first;
    const RingPtr& R = A.ring();
    if (A.is_zero() || B.is_zero()) return LaurentPolynomial::zero(R);
    std::int32_t da = A.degree(var), db = B.degree(var);
    if (da == 0 && db == 0) throw InputError("resultant: both inputs constant in the chosen variable");
    if (da == 0) return A.pow(db);
    if (db == 0) return B.pow(da);

    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((static_cast<long>(da) * db) % 2 == 1) sign = -sign;
    }
    LaurentPolynomial ca = content_in(A, var), cb = content_in(B, var);
    A = divide_exact_or_throw(A, ca);
    B = divide_exact_or_throw(B, cb);
    LaurentPolynomial prefactor = ca.pow(db) * cb.pow(da);

    LaurentPolynomial gg = LaurentPolynomial::constant(R, 1);
    LaurentPolynomial hh = LaurentPolynomial::constant(R, 1);
    for (;;) {
        da = A.degree(var);
        db = B.degree(var);
        std::int32_t d = da - db;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        LaurentPolynomial Rm = pseudo_rem(A, B, var);
        A = B;
        if (Rm.is_zero()) return LaurentPolynomial::zero(R);
        B = divide_exact_or_throw(Rm, gg * hh.pow(d));
        gg = lead_coeff_in(A, var);
        if (d == 1) hh = gg;
        else if (d > 1) hh = divide_exact_or_throw(gg.pow(d), hh.pow(d - 1));
        if (B.degree(var) == 0) break;
    }
    std::int32_t q = A.degree(var);
    LaurentPolynomial res = divide_exact_or_throw(B.pow(q), hh.pow(q - 1));
    res = res * prefactor;
    if (sign < 0) res = -res;
    return res;
}

} // namespace avar
