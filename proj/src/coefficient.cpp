#include "avar/coefficient.hpp"

namespace avar {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InputError("division by zero in F_" + std::to_string(p));
    return powmod_u64(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    return {DomainKind::prime_field, p};
}

std::string CoeffDomain::to_string() const {
    switch (kind) {
        case DomainKind::integers: return "Z";
        case DomainKind::rationals: return "Q";
        case DomainKind::prime_field: return "F_" + std::to_string(p);
    }
    return "?";
}

Coefficient Coefficient::zero(const CoeffDomain& d) {
    Coefficient c;
    c.dom_ = d;
    return c;
}

Coefficient Coefficient::one(const CoeffDomain& d) {
    Coefficient c;
    c.dom_ = d;
    if (d.kind == DomainKind::prime_field) c.r_ = 1 % d.p;
    else c.q_ = 1;
    return c;
}

Coefficient Coefficient::from_long(const CoeffDomain& d, long v) {
    Coefficient c;
    c.dom_ = d;
    if (d.kind == DomainKind::prime_field) {
        long m = static_cast<long>(d.p);
        long r = v % m;
        if (r < 0) r += m;
        c.r_ = static_cast<std::uint64_t>(r);
    } else {
        c.q_ = v;
    }
    return c;
}

Coefficient Coefficient::from_mpq(const CoeffDomain& d, const mpq_class& v) {
    if (d.kind == DomainKind::prime_field) {
        Coefficient z;
        z.dom_ = CoeffDomain::rationals();
        z.q_ = v;
        z.q_.canonicalize();
        return z.reduce_mod_p(d.p);
    }
    Coefficient c;
    c.dom_ = d;
    c.q_ = v;
    c.q_.canonicalize();
    if (d.kind == DomainKind::integers && c.q_.get_den() != 1)
        throw InputError("non-integer value in Z domain: " + v.get_str());
    return c;
}

Coefficient Coefficient::fp(std::uint64_t p, std::uint64_t residue) {
    Coefficient c;
    c.dom_ = CoeffDomain::prime_field(p);
    c.r_ = residue % p;
    return c;
}

bool Coefficient::is_zero() const {
    return dom_.kind == DomainKind::prime_field ? r_ == 0 : q_ == 0;
}

bool Coefficient::is_one() const {
    return dom_.kind == DomainKind::prime_field ? r_ == 1 % dom_.p : q_ == 1;
}

void Coefficient::check_same_domain(const Coefficient& o) const {
    if (!(dom_ == o.dom_))
        throw InputError("coefficient domain mismatch: " + dom_.to_string() + " vs " + o.dom_.to_string());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    check_same_domain(o);
    Coefficient c;
    c.dom_ = dom_;
    if (dom_.kind == DomainKind::prime_field) {
        c.r_ = r_ + o.r_;
        if (c.r_ >= dom_.p) c.r_ -= dom_.p;
    } else {
        c.q_ = q_ + o.q_;
    }
    return c;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    check_same_domain(o);
    Coefficient c;
    c.dom_ = dom_;
    if (dom_.kind == DomainKind::prime_field) {
        c.r_ = r_ + dom_.p - o.r_;
        if (c.r_ >= dom_.p) c.r_ -= dom_.p;
    } else {
        c.q_ = q_ - o.q_;
    }
    return c;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    check_same_domain(o);
    Coefficient c;
    c.dom_ = dom_;
    if (dom_.kind == DomainKind::prime_field) c.r_ = mulmod_u64(r_, o.r_, dom_.p);
    else c.q_ = q_ * o.q_;
    return c;
}

Coefficient Coefficient::operator-() const {
    Coefficient c;
    c.dom_ = dom_;
    if (dom_.kind == DomainKind::prime_field) c.r_ = r_ == 0 ? 0 : dom_.p - r_;
    else c.q_ = -q_;
    return c;
}

Coefficient Coefficient::inverse() const {
    if (!dom_.is_field()) throw InputError("inverse requested in a non-field domain Z");
    if (is_zero()) throw InputError("inverse of zero");
    Coefficient c;
    c.dom_ = dom_;
    if (dom_.kind == DomainKind::prime_field) c.r_ = invmod_u64(r_, dom_.p);
    else c.q_ = 1 / q_;
    return c;
}

Coefficient Coefficient::div(const Coefficient& o) const {
    if (dom_.kind == DomainKind::integers) {
        // exact integer division only
        check_same_domain(o);
        if (o.q_ == 0) throw InputError("division by zero");
        mpq_class r = q_ / o.q_;
        r.canonicalize();
        if (r.get_den() != 1) throw InputError("inexact division in Z");
        Coefficient c;
        c.dom_ = dom_;
        c.q_ = r;
        return c;
    }
    return *this * o.inverse();
}

Coefficient Coefficient::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Coefficient acc = one(dom_);
    Coefficient base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Coefficient::compare(const Coefficient& o) const {
    check_same_domain(o);
    if (dom_.kind == DomainKind::prime_field)
        return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    return cmp(q_, o.q_);
}

Coefficient Coefficient::to_rationals() const {
    if (dom_.kind == DomainKind::prime_field)
        throw InputError("cannot promote F_p coefficient to Q");
    Coefficient c;
    c.dom_ = CoeffDomain::rationals();
    c.q_ = q_;
    return c;
}

Coefficient Coefficient::reduce_mod_p(std::uint64_t p) const {
    if (dom_.kind == DomainKind::prime_field)
        throw InputError("value already lives in a prime field");
    CoeffDomain d = CoeffDomain::prime_field(p);
    mpz_class num = q_.get_num(), den = q_.get_den(), pz(static_cast<unsigned long>(p));
    mpz_class dmod = den % pz;
    if (dmod == 0)
        throw InputError("bad prime " + std::to_string(p) + ": divides a denominator");
    mpz_class nmod = num % pz;
    if (nmod < 0) nmod += pz;
    std::uint64_t n = nmod.get_ui();
    std::uint64_t dr = mpz_class(dmod < 0 ? dmod + pz : dmod).get_ui();
    Coefficient c;
    c.dom_ = d;
    c.r_ = mulmod_u64(n, invmod_u64(dr, p), p);
    return c;
}

std::string Coefficient::to_string() const {
    if (dom_.kind == DomainKind::prime_field) return std::to_string(r_);
    return q_.get_str();
}

} // namespace avar
