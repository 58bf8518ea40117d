// Sparse exact multivariate Laurent polynomials.
//
// Terms are kept sorted descending under the canonical lex order and never
// store zero coefficients; values are immutable in spirit (all operations
// return fresh polynomials), so sharing across threads is safe.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avar/monomial.hpp"

namespace avar {

class LaurentPolynomial {
public:
    struct Term {
        Monomial mono;
        Coefficient coeff;
    };

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static LaurentPolynomial zero(RingPtr ring) { return LaurentPolynomial(std::move(ring)); }
    static LaurentPolynomial constant(RingPtr ring, const Coefficient& c);
    static LaurentPolynomial constant(RingPtr ring, long v);
    static LaurentPolynomial variable(RingPtr ring, std::size_t idx, std::int32_t exp = 1);
    static LaurentPolynomial from_terms(RingPtr ring, std::vector<Term> terms); // collects + sorts

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono)); }
    std::size_t num_terms() const { return terms_.size(); }

    // Leading term under the canonical lex order (largest first).
    const Term& lead() const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const;

    LaurentPolynomial scaled(const Coefficient& c) const;
    LaurentPolynomial times_monomial(const Monomial& m) const;
    LaurentPolynomial pow(long e) const; // negative e only when *this is a unit monomial

    // Degree of `var` (max exponent); min_degree is the min exponent.
    // Zero polynomial reports degree 0.
    std::int32_t degree(std::size_t var) const;
    std::int32_t min_degree(std::size_t var) const;
    long total_degree() const;
    bool contains_var(std::size_t var) const { return degree(var) != 0 || min_degree(var) != 0; }

    // Coefficient of var^k, a polynomial in the remaining variables
    // (still indexed over the full ring, with exponent 0 at `var`).
    LaurentPolynomial coeff_of(std::size_t var, std::int32_t k) const;

    LaurentPolynomial derivative(std::size_t var) const;

    // Substitute a polynomial for a variable. Requires nonnegative
    // exponents on `var` unless the replacement is a unit monomial.
    LaurentPolynomial substituted(std::size_t var, const LaurentPolynomial& repl) const;

    // Full evaluation at a point (one coefficient per ring variable).
    Coefficient evaluate(const std::vector<Coefficient>& point) const;

    LaurentPolynomial map_domain(const CoeffDomain& target,
                                 const std::function<Coefficient(const Coefficient&)>& f) const;
    LaurentPolynomial to_rationals() const;
    LaurentPolynomial reduce_mod_p(std::uint64_t p) const;

    // Multiply by the minimal monomial making all exponents nonnegative.
    // Returns the cleared polynomial and the monomial that was multiplied in.
    std::pair<LaurentPolynomial, Monomial> clear_laurent() const;

    // Divide out the common monomial factor (runs over all variables,
    // including negative exponents). Returns {stripped, factor}.
    std::pair<LaurentPolynomial, Monomial> strip_monomial() const;

    // x_i -> x_i^{-1} for the selected variables, then cleared to
    // nonnegative exponents and monomial-stripped.
    LaurentPolynomial inverted_vars(const std::vector<std::size_t>& vars) const;

    // Rational/integer content as a positive rational; unit for F_p.
    Coefficient content() const;

    // Canonical representative among unit-monomial/scalar associates:
    // monomial factor stripped; over Q/Z primitive integer coefficients
    // with lex-leading coefficient positive; over F_p monic leading 1.
    LaurentPolynomial normalized() const;

    // Scale-only normalization (no monomial stripping).
    LaurentPolynomial scalar_normalized() const;

    // Move the polynomial to a ring with the same domain but different
    // variable list; `map[i]` gives the new index of old variable i
    // (-1 allowed only if the variable does not occur).
    LaurentPolynomial reindexed(RingPtr new_ring, const std::vector<int>& map) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_; // sorted descending by mono_lex_compare

    void check_ring(const LaurentPolynomial& o) const;
    void validate_laurent() const;
};

// Polynomial text form: sum of `coeff*v1^e1*v2^e2` terms; `a/b` rational
// coefficients; `^-k` on Laurent variables. Used by all CLI I/O.
LaurentPolynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace avar
