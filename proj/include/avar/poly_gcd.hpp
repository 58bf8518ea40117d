// Multivariate gcd (recursive primitive PRS), exact division, squarefree
// part, and Sylvester resultant via the subresultant PRS.
//
// All entry points accept Laurent input and work on the monomial-stripped
// polynomial core; results are canonically normalized, so equalities hold
// up to unit monomials, which is the intended notion of associate here.
#pragma once

#include <optional>

#include "avar/polynomial.hpp"

namespace avar {

// Canonical-normalized gcd; gcd(f, 0) = normalized f. Z input is promoted
// to Q; the normalized result has primitive integer coefficients.
LaurentPolynomial poly_gcd(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Product of the distinct irreducible factors of the stripped core of f,
// canonically normalized. Char-p inseparable layers (all partials zero)
// are handled by p-th roots. Zero input -> InputError.
LaurentPolynomial squarefree_part(const LaurentPolynomial& f);

// res_var(f, g): Sylvester determinant in the remaining variables.
// If exactly one input has degree 0 in var, returns the conventional
// power; both constant -> InputError.
LaurentPolynomial resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t var);

// Exact division up to unit monomials: returns q with q*g = f times a
// unit monomial correction, exact in the Laurent ring; nullopt when g
// does not divide f. g must be nonzero.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g);

bool divides(const LaurentPolynomial& g, const LaurentPolynomial& f);

LaurentPolynomial poly_lcm(const LaurentPolynomial& f, const LaurentPolynomial& g);

} // namespace avar
