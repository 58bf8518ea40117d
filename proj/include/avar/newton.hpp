// Newton polytopes, boundary-slope extraction from 2D polygon edges,
// Minkowski sums, rational tropical membership probes, and the
// projectivised slope-coordinate maps for multi-cusp directions.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "avar/groebner.hpp"

namespace avar {

struct NewtonPolytope {
    std::size_t dim = 0;
    std::vector<Monomial> vertices; // convex position; 2D: counterclockwise, lex-min first
};

// Hull of the support of f. 2D uses the monotone chain; higher dimensions
// keep the points that are vertices of the hull (n <= 6). Zero -> InputError.
NewtonPolytope newton_polytope(const LaurentPolynomial& f);
// Axes restricted to the listed variables (order defines coordinates).
NewtonPolytope newton_polytope(const LaurentPolynomial& f, const std::vector<std::size_t>& axes);

NewtonPolytope minkowski_sum(const NewtonPolytope& P, const NewtonPolytope& Q);

// A slope p/q in lowest terms with q >= 0; q == 0 encodes infinity (p = 1).
struct Slope {
    long long p = 0;
    long long q = 1;

    static Slope infinity() { return {1, 0}; }
    static Slope of(long long p, long long q); // reduces and fixes signs
    bool is_infinite() const { return q == 0; }
    auto operator<=>(const Slope&) const = default;
    std::string to_string() const;
};

using SlopeSet = std::set<Slope>;

// Edge (dl, dm) in (l-exp, m-exp) coordinates contributes slope dm/dl;
// vertical edges (dl = 0) give infinity. Points give the empty set.
SlopeSet polygon_slopes(const NewtonPolytope& P);

// Rational direction, stored as a primitive integer vector; indexed
// (m_1, l_1, ..., m_h, l_h) when it lives over an eigenvalue ring.
struct TropicalDirection {
    std::vector<long long> v;

    static TropicalDirection of(std::vector<long long> raw); // divides by gcd; zero -> InputError
    bool operator==(const TropicalDirection&) const = default;
    bool operator<(const TropicalDirection& o) const { return v < o.v; }
    std::string to_string() const;
};

// Projectivised boundary-curve coordinates [n1 p1, n1 q1, ...]: integral,
// gcd one, each per-cusp pair sign-normalized (first nonzero entry > 0).
struct SlopeCoordinates {
    std::vector<long long> c;

    bool operator==(const SlopeCoordinates&) const = default;
    std::string to_string() const;
    // Slope of cusp i (p_i / q_i), or nullopt for an empty (0,0) pair.
    std::optional<Slope> cusp_slope(std::size_t i) const;
};

// Apply the block-diagonal rotation (x,y) -> (y,-x) per cusp, clear to a
// primitive integer vector, and sign-normalize per cusp.
SlopeCoordinates slope_coordinates(const TropicalDirection& zeta, std::size_t cusps);

// True iff in_xi(I) contains no monomial and I is proper.
bool tropical_membership(const PolynomialIdeal& I, const TropicalDirection& xi,
                         const GroebnerBudget& budget = {});

struct ProbeResult {
    TropicalDirection direction;
    bool member = false;
    bool budget_exceeded = false;
    std::string error;
};

// Probe the logarithmic limit set of V(I) at the candidate directions
// (defaults to +-facet normals of the generators' Newton polytopes).
// This is a probe of rational directions, not an exhaustive computation.
std::vector<ProbeResult> logarithmic_limit_probe(const PolynomialIdeal& I,
                                                 std::vector<TropicalDirection> candidates,
                                                 const GroebnerBudget& budget = {});

// Default candidate set: primitive +-normals of edges (2D) or facets
// (higher dim) of the Newton polytopes of all generators.
std::vector<TropicalDirection> default_probe_directions(const PolynomialIdeal& I);

// Deterministic SVG rendering of a 2D Newton polygon: support dots, hull
// polyline, slope labels per edge.
std::string newton_polygon_svg(const LaurentPolynomial& f);

} // namespace avar
