#include "avar/polynomial.hpp"

#include <algorithm>
#include <map>

namespace avar {

void LaurentPolynomial::check_ring(const LaurentPolynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw InputError("ring mismatch between polynomial operands");
}

void LaurentPolynomial::validate_laurent() const {
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] < 0 && !ring_->var(i).laurent)
                throw InputError("negative exponent on non-Laurent variable '" + ring_->var(i).name + "'");
}

LaurentPolynomial LaurentPolynomial::constant(RingPtr ring, const Coefficient& c) {
    LaurentPolynomial p(ring);
    if (!c.is_zero()) {
        if (!(c.domain() == ring->domain())) throw InputError("constant domain differs from ring domain");
        p.terms_.push_back({mono_one(ring->nvars()), c});
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(RingPtr ring, long v) {
    return constant(ring, Coefficient::from_long(ring->domain(), v));
}

LaurentPolynomial LaurentPolynomial::variable(RingPtr ring, std::size_t idx, std::int32_t exp) {
    if (idx >= ring->nvars()) throw InputError("variable index out of range");
    LaurentPolynomial p(ring);
    p.terms_.push_back({mono_var(ring->nvars(), idx, exp), Coefficient::one(ring->domain())});
    p.validate_laurent();
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(RingPtr ring, std::vector<Term> in) {
    std::map<Monomial, Coefficient> acc;
    for (auto& t : in) {
        if (t.coeff.is_zero()) continue;
        if (!(t.coeff.domain() == ring->domain())) throw InputError("term domain differs from ring domain");
        auto it = acc.find(t.mono);
        if (it == acc.end()) acc.emplace(std::move(t.mono), std::move(t.coeff));
        else {
            it->second = it->second + t.coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    LaurentPolynomial p(ring);
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) p.terms_.push_back({it->first, it->second});
    p.validate_laurent();
    return p;
}

const LaurentPolynomial::Term& LaurentPolynomial::lead() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return terms_.front();
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_ring(o);
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_lex_compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Coefficient s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::map<Monomial, Coefficient> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            Coefficient c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    LaurentPolynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) r.terms_.push_back({it->first, it->second});
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
}

LaurentPolynomial LaurentPolynomial::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero(ring_);
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

LaurentPolynomial LaurentPolynomial::times_monomial(const Monomial& m) const {
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff});
    r.validate_laurent();
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw InputError("negative power of a non-monomial polynomial");
        Monomial m = terms_[0].mono;
        for (auto& x : m) x = static_cast<std::int32_t>(x * e);
        LaurentPolynomial r(ring_);
        r.terms_.push_back({m, terms_[0].coeff.pow(e)});
        r.validate_laurent();
        return r;
    }
    LaurentPolynomial acc = constant(ring_, 1);
    LaurentPolynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::int32_t LaurentPolynomial::degree(std::size_t var) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.mono[var] > d) d = t.mono[var];
        first = false;
    }
    return d;
}

std::int32_t LaurentPolynomial::min_degree(std::size_t var) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.mono[var] < d) d = t.mono[var];
        first = false;
    }
    return d;
}

long LaurentPolynomial::total_degree() const {
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.mono));
    return d;
}

LaurentPolynomial LaurentPolynomial::coeff_of(std::size_t var, std::int32_t k) const {
    LaurentPolynomial r(ring_);
    for (const auto& t : terms_) {
        if (t.mono[var] == k) {
            Monomial m = t.mono;
            m[var] = 0;
            r.terms_.push_back({std::move(m), t.coeff});
        }
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return mono_lex_compare(a.mono, b.mono) > 0; });
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Coefficient c = t.coeff * Coefficient::from_long(t.coeff.domain(), t.mono[var]);
        if (c.is_zero()) continue;
        Monomial m = t.mono;
        m[var] -= 1;
        out.push_back({std::move(m), std::move(c)});
    }
    LaurentPolynomial r = from_terms(ring_, std::move(out));
    return r;
}

LaurentPolynomial LaurentPolynomial::substituted(std::size_t var, const LaurentPolynomial& repl) const {
    check_ring(repl);
    LaurentPolynomial r = zero(ring_);
    // group terms by exponent of var, evaluate by powers
    std::map<std::int32_t, LaurentPolynomial> slices;
    for (const auto& t : terms_) {
        std::int32_t e = t.mono[var];
        Monomial m = t.mono;
        m[var] = 0;
        auto it = slices.find(e);
        if (it == slices.end()) it = slices.emplace(e, zero(ring_)).first;
        LaurentPolynomial piece(ring_);
        piece.terms_.push_back({std::move(m), t.coeff});
        it->second = it->second + piece;
    }
    for (const auto& [e, slice] : slices) {
        if (e == 0) r = r + slice;
        else r = r + slice * repl.pow(e);
    }
    return r;
}

Coefficient LaurentPolynomial::evaluate(const std::vector<Coefficient>& point) const {
    if (point.size() != ring_->nvars()) throw InputError("evaluation point arity mismatch");
    Coefficient acc = Coefficient::zero(ring_->domain());
    for (const auto& t : terms_) {
        Coefficient v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (t.mono[i] != 0) v = v * point[i].pow(t.mono[i]);
        }
        acc = acc + v;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::map_domain(const CoeffDomain& target,
                                                const std::function<Coefficient(const Coefficient&)>& f) const {
    RingPtr nr = ring_with_domain(ring_, target);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Coefficient c = f(t.coeff);
        if (!c.is_zero()) out.push_back({t.mono, c});
    }
    return from_terms(nr, std::move(out));
}

LaurentPolynomial LaurentPolynomial::to_rationals() const {
    return map_domain(CoeffDomain::rationals(), [](const Coefficient& c) { return c.to_rationals(); });
}

LaurentPolynomial LaurentPolynomial::reduce_mod_p(std::uint64_t p) const {
    return map_domain(CoeffDomain::prime_field(p), [p](const Coefficient& c) { return c.reduce_mod_p(p); });
}

std::pair<LaurentPolynomial, Monomial> LaurentPolynomial::clear_laurent() const {
    Monomial shift = mono_one(ring_ ? ring_->nvars() : 0);
    if (terms_.empty()) return {*this, shift};
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < shift.size(); ++i)
            shift[i] = std::min(shift[i], t.mono[i]);
    for (auto& e : shift) e = e < 0 ? -e : 0;
    if (mono_is_one(shift)) return {*this, shift};
    return {times_monomial(shift), shift};
}

std::pair<LaurentPolynomial, Monomial> LaurentPolynomial::strip_monomial() const {
    if (terms_.empty()) return {*this, mono_one(ring_ ? ring_->nvars() : 0)};
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t.mono[i]);
    if (mono_is_one(g)) return {*this, g};
    Monomial inv = g;
    for (auto& e : inv) e = -e;
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, inv), t.coeff});
    return {r, g};
}

LaurentPolynomial LaurentPolynomial::inverted_vars(const std::vector<std::size_t>& vars) const {
    LaurentPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        for (auto v : vars) m[v] = -m[v];
        r.terms_.push_back({std::move(m), t.coeff});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return mono_lex_compare(a.mono, b.mono) > 0; });
    auto [cleared, shift] = r.clear_laurent();
    return cleared.strip_monomial().first;
}

Coefficient LaurentPolynomial::content() const {
    const CoeffDomain& d = ring_->domain();
    if (d.kind == DomainKind::prime_field) {
        return terms_.empty() ? Coefficient::zero(d) : Coefficient::one(d);
    }
    if (terms_.empty()) return Coefficient::zero(d);
    // gcd of numerators over lcm of denominators, as a positive rational
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class den = t.coeff.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    return Coefficient::from_mpq(d, c);
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    if (terms_.empty()) return *this;
    return strip_monomial().first.scalar_normalized();
}

LaurentPolynomial LaurentPolynomial::scalar_normalized() const {
    if (terms_.empty()) return *this;
    const LaurentPolynomial& r = *this;
    const CoeffDomain& d = ring_->domain();
    if (d.kind == DomainKind::prime_field) {
        return r.scaled(r.lead().coeff.inverse());
    }
    Coefficient c = r.content();
    if (r.lead().coeff.compare(Coefficient::zero(d)) < 0) c = -c;
    LaurentPolynomial out(ring_);
    out.terms_.reserve(r.terms_.size());
    for (const auto& t : r.terms_) out.terms_.push_back({t.mono, t.coeff.div(c)});
    return out;
}

LaurentPolynomial LaurentPolynomial::reindexed(RingPtr new_ring, const std::vector<int>& map) const {
    if (map.size() != ring_->nvars()) throw InternalError("reindex map arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = mono_one(new_ring->nvars());
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (map[i] < 0) throw InternalError("dropped variable still occurs: " + ring_->var(i).name);
            m[static_cast<std::size_t>(map[i])] += t.mono[i];
        }
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(new_ring, std::move(out));
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    const bool fp = ring_->domain().kind == DomainKind::prime_field;
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Coefficient c = t.coeff;
        bool neg = false;
        if (!fp && c.compare(Coefficient::zero(c.domain())) < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->var(i).name;
            if (t.mono[i] != 1) vars += "^" + std::to_string(t.mono[i]);
        }
        if (vars.empty()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += vars;
        } else {
            s += c.to_string() + "*" + vars;
        }
    }
    return s;
}

} // namespace avar
