// Polynomial ideals, reduced Groebner bases (Buchberger with the
// Gebauer-Moeller pair criteria), normal forms, elimination, saturation,
// and weight-initial ideals.
//
// Every computation is budgeted and fails loudly with BudgetError; outputs
// of successful runs are deterministic functions of (ideal, order).
#pragma once

#include <optional>

#include "avar/order.hpp"
#include "avar/poly_gcd.hpp"
#include "avar/polynomial.hpp"

namespace avar {

struct GroebnerBudget {
    std::size_t max_basis = 5000;   // intermediate basis size cap
    std::size_t max_pairs = 500000; // processed S-pair cap
    double timeout_sec = 300.0;     // wall clock; <=0 disables
};

// Deterministic counters from a Groebner run (safe to serialize).
struct GroebnerStats {
    std::size_t pairs_processed = 0;
    std::size_t basis_peak = 0;
    std::size_t reductions_to_zero = 0;
};

class PolynomialIdeal {
public:
    PolynomialIdeal(RingPtr ring, std::vector<LaurentPolynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<LaurentPolynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

private:
    RingPtr ring_;
    std::vector<LaurentPolynomial> gens_; // non-Laurent cleared, nonzero
};

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<LaurentPolynomial> elements; // reduced, monic, ascending leading monomials
    GroebnerStats stats;

    bool is_unit() const;
};

// Reduced Groebner basis of I under ord. Field coefficients required.
// Non-global (weight) orders are accepted only for homogeneous input.
GroebnerBasis buchberger(const PolynomialIdeal& I, const MonomialOrder& ord,
                         const GroebnerBudget& budget = {});

// Unique remainder of f modulo G (full reduction of every term).
LaurentPolynomial normal_form(const LaurentPolynomial& f, const GroebnerBasis& G);

bool ideal_contains(const PolynomialIdeal& I, const LaurentPolynomial& f,
                    const GroebnerBudget& budget = {});

// I cap k[vars minus drop], returned over the reduced ring (dropped
// variables removed, order of the remaining ones preserved).
PolynomialIdeal eliminate(const PolynomialIdeal& I, const std::vector<std::size_t>& drop,
                          const GroebnerBudget& budget = {});

// I : (prod vars)^infty via a fresh Rabinowitsch variable.
PolynomialIdeal saturate_by_variables(const PolynomialIdeal& I, const std::vector<std::size_t>& vars,
                                      const GroebnerBudget& budget = {});

// Ideal of w-initial forms (max convention), computed through
// homogenization so arbitrary rational weight vectors are valid.
// `w` is indexed by ring variable; entries are numerator/denominator
// cleared to integers by the caller-facing wrapper in newton/.
PolynomialIdeal initial_form_ideal(const PolynomialIdeal& I, const std::vector<long long>& w,
                                   const GroebnerBudget& budget = {});

// True iff the saturation of I by the product of all variables is <1>.
bool contains_monomial(const PolynomialIdeal& I, const GroebnerBudget& budget = {});

// Convenience: substitute generators with a variable eliminated through a
// generator of the shape c*v + r (c a nonzero constant, v absent from r).
// Returns the reduced ideal together with the record of substitutions.
struct LinearSubstitution {
    std::string var;
    std::string replacement;
};
struct PresimplifiedIdeal {
    PolynomialIdeal ideal;
    std::vector<LinearSubstitution> substitutions;
    std::vector<int> var_map; // old index -> new index or -1
};
PresimplifiedIdeal eliminate_unit_linear(const PolynomialIdeal& I, const std::vector<std::size_t>& keep);

} // namespace avar
