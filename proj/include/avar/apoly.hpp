// The A-polynomial pipeline: upper-triangular peripheral system,
// saturation, elimination to the eigenvalue plane (Groebner route with a
// resultant-tower fallback), canonical normalization, the mod-p
// comparison, and reducedness checks.
#pragma once

#include "avar/newton.hpp"
#include "avar/repvar.hpp"

namespace avar {

enum class ElimRoute { automatic, groebner, resultant_tower };

struct ApolyOptions {
    bool keep_abelian = true;
    ElimRoute route = ElimRoute::automatic;
    GroebnerBudget budget;
};

struct ApolyProvenance {
    std::string route; // "groebner-elimination" or "resultant-tower"
    std::vector<LinearSubstitution> presubstitutions;
    std::vector<std::string> stripped_monomials;
    long abelian_factors_removed = 0;
    bool elimination_principal = true;
    std::vector<std::string> non_principal_residue; // extra generators, text form
    GroebnerStats gb_stats;
    std::size_t tower_resultants = 0;
    std::size_t tower_branches = 0;
    std::vector<std::string> notes;
};

struct APolynomial {
    // Canonical normalized polynomial in (m, l); integer coefficients in
    // characteristic 0, monic over F_p. Zero encodes "no codimension-1
    // constraint" (the elimination ideal was zero).
    LaurentPolynomial poly;
    ApolyProvenance provenance;
    bool abelian_kept = true;

    bool is_zero() const { return poly.is_zero(); }
};

// domain: rationals (result over Z) or a prime field.
APolynomial a_polynomial(const GroupPresentation& G, const CoeffDomain& domain, const ApolyOptions& opts = {});

// Equality up to unit monomial, global sign, and simultaneous
// (m,l) -> (m^-1, l^-1) inversion.
bool apoly_equivalent(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Canonical representative under the symmetry group above (string-least).
LaurentPolynomial apoly_canonical(const LaurentPolynomial& f);

bool is_reduced(const LaurentPolynomial& f);
inline bool is_reduced(const APolynomial& f) { return is_reduced(f.poly); }

enum class ModPVerdict { equal_up_to_unit, extra_factor, bad_prime };

struct ModPComparisonReport {
    std::uint64_t p = 2;
    ModPVerdict verdict = ModPVerdict::bad_prime;
    LaurentPolynomial a0_mod_p;
    LaurentPolynomial ap_native;
    LaurentPolynomial cofactor; // g with A0bar = g * Ap, when extra_factor
    std::string reason;
    ApolyProvenance ap_provenance;
};

ModPComparisonReport compare_mod_p(const GroupPresentation& G, std::uint64_t p, const ApolyOptions& opts = {});
ModPComparisonReport compare_mod_p(const APolynomial& a0, const GroupPresentation& G, std::uint64_t p,
                                   const ApolyOptions& opts = {});

// Newton-polygon boundary slopes of the A-polynomial (empty for constants).
SlopeSet boundary_slopes_from_apoly(const APolynomial& f);
SlopeSet boundary_slopes(const LaurentPolynomial& f);

std::string verdict_name(ModPVerdict v);

} // namespace avar
