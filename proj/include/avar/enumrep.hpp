// Exhaustive enumeration of homomorphisms into SL(2,F_p) for tiny p, the
// brute-force F_p point oracle for ideals, and the peripheral validation
// battery built on both.
#pragma once

#include <cstdint>
#include <optional>

#include "avar/groebner.hpp"
#include "avar/presentation.hpp"

namespace avar {

struct Mat2p {
    std::uint32_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2p&) const = default;
};

struct FiniteRepresentation {
    std::uint64_t p = 2;
    std::vector<Mat2p> images; // one per generator
};

Mat2p mat_mul(const Mat2p& x, const Mat2p& y, std::uint64_t p);
Mat2p mat_inv_det1(const Mat2p& x, std::uint64_t p);
Mat2p evaluate_word(const Word& w, const std::vector<Mat2p>& images, std::uint64_t p);

// All of SL(2,F_p) in lexicographic (a,b,c,d) order; cached per prime.
const std::vector<Mat2p>& sl2_elements(std::uint64_t p);

struct PeripheralEigenvalues {
    bool triangulable = false;                              // common eigenvector over F_p
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ml; // per cusp (m, l)
};

struct EnumerationReport {
    std::uint64_t p = 2;
    std::size_t count = 0;
    std::vector<FiniteRepresentation> reps; // full list, deterministic order
};

// p in {2,3,5,7}; |SL(2,F_p)|^{#generators} tuples must stay <= 10^8.
EnumerationReport enumerate_homs(const GroupPresentation& G, std::uint64_t p);

// Per-representation (m_i, l_i) data when the peripheral images share an
// eigenvector over F_p itself (extension fields are out of scope).
PeripheralEigenvalues peripheral_eigenvalues(const GroupPresentation& G, const FiniteRepresentation& rep);

// All F_p points of V(I); search space p^{#vars} must stay <= 10^8.
std::vector<std::vector<std::uint64_t>> ideal_points_exhaustive(const PolynomialIdeal& I, std::uint64_t p);

struct CrossCheckReport {
    bool pass = false;
    std::uint64_t p = 2;
    std::size_t hom_count = 0;
    std::size_t point_count = 0;
};

// Lemma-style oracle equivalence: the F_p points of rep_ideal coincide
// with the enumerated homomorphism tuples under the coordinate
// identification (a1,b1,c1,d1,a2,...).
CrossCheckReport cross_check(const GroupPresentation& G, std::uint64_t p);

struct PeripheralReport {
    bool pass = false;
    std::uint64_t p = 2;
    std::size_t reps_checked = 0;
    bool commutation_ok = false;
    std::optional<std::string> witness; // failing representation, printed
    bool homology_checked = false;
    bool longitude_null_homologous = false;
    bool meridian_generates = false;
    std::vector<std::string> notes;
};

// Necessary-condition battery: peripheral commutation in every enumerated
// SL(2,F_p) representation, plus the homological checks for single-cusp
// knot-like presentations. Passing does not certify peripheral structure.
PeripheralReport validate_peripheral(const GroupPresentation& G, std::uint64_t p);

} // namespace avar
