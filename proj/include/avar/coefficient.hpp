// Exact coefficients: arbitrary-precision integers and rationals (GMP),
// and prime fields F_p with canonical residues 0..p-1.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "avar/errors.hpp"

namespace avar {

enum class DomainKind : std::uint8_t { integers, rationals, prime_field };

struct CoeffDomain {
    DomainKind kind = DomainKind::rationals;
    std::uint64_t p = 0; // modulus when kind == prime_field

    static CoeffDomain integers() { return {DomainKind::integers, 0}; }
    static CoeffDomain rationals() { return {DomainKind::rationals, 0}; }
    static CoeffDomain prime_field(std::uint64_t p); // validates primality

    bool is_field() const { return kind != DomainKind::integers; }
    bool operator==(const CoeffDomain&) const = default;
    std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

// A single exact coefficient. Carries its domain so mixed-domain arithmetic
// is rejected instead of silently coerced.
class Coefficient {
public:
    Coefficient() : dom_(CoeffDomain::rationals()), q_(0), r_(0) {}

    static Coefficient zero(const CoeffDomain& d);
    static Coefficient one(const CoeffDomain& d);
    static Coefficient from_long(const CoeffDomain& d, long v);
    static Coefficient from_mpq(const CoeffDomain& d, const mpq_class& v);
    static Coefficient fp(std::uint64_t p, std::uint64_t residue);

    const CoeffDomain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient inverse() const;   // field domains only; zero -> InputError
    Coefficient div(const Coefficient& o) const;
    Coefficient pow(long e) const; // negative e allowed in field domains

    // Total order within one domain (rationals by value, residues by value).
    // Used for canonical serialization, not for algebra.
    int compare(const Coefficient& o) const;
    bool operator==(const Coefficient& o) const { return compare(o) == 0; }

    // Payload access (valid for the matching domain only).
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    // For rationals/integers: numerator and denominator as mpz.
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    // Change of domain.
    Coefficient to_rationals() const;                  // Z -> Q (identity on Q)
    Coefficient reduce_mod_p(std::uint64_t p) const;   // Z/Q -> F_p; throws InputError on p | denominator

    std::string to_string() const;

private:
    CoeffDomain dom_;
    mpq_class q_;       // integers / rationals payload
    std::uint64_t r_;   // prime-field payload

    void check_same_domain(const Coefficient& o) const;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

} // namespace avar
