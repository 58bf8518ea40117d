// Defining ideals of SL(2) representation varieties: generic matrix
// variables per generator, the upper-triangular peripheral restriction
// with eigenvalue variables, and the multi-cusp trace-equation system.
#pragma once

#include <array>

#include "avar/groebner.hpp"
#include "avar/presentation.hpp"

namespace avar {

// Variable layout: for generator k (0-based) the block
//   a{k+1}, b{k+1}, c{k+1}, d{k+1}
// at indices 4k..4k+3; with eigenvalue variables appended per cusp:
// m, l (single cusp) or m1, l1, m2, l2, ... (Laurent-flagged).
struct RepRing {
    RingPtr ring;
    std::size_t num_gens = 0;
    std::size_t num_cusps = 0; // 0 when the ring has no eigenvalue block

    std::size_t entry_var(std::size_t gen, std::size_t e) const { return 4 * gen + e; }
    std::size_t m_var(std::size_t cusp) const { return 4 * num_gens + 2 * cusp; }
    std::size_t l_var(std::size_t cusp) const { return 4 * num_gens + 2 * cusp + 1; }
    std::vector<std::size_t> matrix_vars() const {
        std::vector<std::size_t> v(4 * num_gens);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
        return v;
    }
    std::vector<std::size_t> eigen_vars() const {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < 2 * num_cusps; ++i) v.push_back(4 * num_gens + i);
        return v;
    }
};

RepRing make_rep_ring(const GroupPresentation& G, const CoeffDomain& domain, bool with_eigen);

struct SymbolicMatrix {
    std::array<LaurentPolynomial, 4> e; // row-major 2x2

    SymbolicMatrix mul(const SymbolicMatrix& o) const;
};

SymbolicMatrix identity_matrix(const RingPtr& ring);

// Inverse letters use the determinant-1 adjugate, keeping all entries
// polynomial; the empty word gives the identity.
SymbolicMatrix word_matrix(const Word& w, const RepRing& R);

LaurentPolynomial trace_polynomial(const Word& w, const RepRing& R);

// Relator entry equations plus the determinant-1 condition per generator,
// over the matrix-variable ring (no eigenvalue block).
PolynomialIdeal rep_ideal(const GroupPresentation& G, const CoeffDomain& domain);

// rep_ideal generators plus, per cusp: lower-left of the meridian and
// longitude words vanish, and their upper-left entries equal m_i, l_i.
// Invertibility of m_i, l_i is imposed downstream by saturation.
PolynomialIdeal upper_triangular_ideal(const GroupPresentation& G, const CoeffDomain& domain);

// rep_ideal generators plus the three trace equations per cusp, cleared
// of denominators by multiplying through by m_i*l_i.
PolynomialIdeal eigenvalue_system(const GroupPresentation& G, const CoeffDomain& domain);

} // namespace avar
