#include "avar/repvar.hpp"

namespace avar {

RepRing make_rep_ring(const GroupPresentation& G, const CoeffDomain& domain, bool with_eigen) {
    RepRing R;
    R.num_gens = G.num_generators();
    R.num_cusps = with_eigen ? G.num_cusps() : 0;
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < R.num_gens; ++k) {
        std::string idx = std::to_string(k + 1);
        vars.push_back({"a" + idx, false});
        vars.push_back({"b" + idx, false});
        vars.push_back({"c" + idx, false});
        vars.push_back({"d" + idx, false});
    }
    if (with_eigen) {
        for (std::size_t i = 0; i < R.num_cusps; ++i) {
            std::string idx = R.num_cusps == 1 ? "" : std::to_string(i + 1);
            vars.push_back({"m" + idx, true});
            vars.push_back({"l" + idx, true});
        }
    }
    R.ring = make_ring(domain, std::move(vars));
    return R;
}

SymbolicMatrix SymbolicMatrix::mul(const SymbolicMatrix& o) const {
    SymbolicMatrix r;
    r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return r;
}

SymbolicMatrix identity_matrix(const RingPtr& ring) {
    SymbolicMatrix m;
    m.e[0] = LaurentPolynomial::constant(ring, 1);
    m.e[1] = LaurentPolynomial::zero(ring);
    m.e[2] = LaurentPolynomial::zero(ring);
    m.e[3] = LaurentPolynomial::constant(ring, 1);
    return m;
}

SymbolicMatrix word_matrix(const Word& w, const RepRing& R) {
    SymbolicMatrix acc = identity_matrix(R.ring);
    for (auto letter : w) {
        std::size_t k = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
        if (k >= R.num_gens) throw InputError("word letter outside the presentation's generators");
        auto v = [&](std::size_t e) { return LaurentPolynomial::variable(R.ring, R.entry_var(k, e)); };
        SymbolicMatrix g;
        if (letter > 0) {
            g.e = {v(0), v(1), v(2), v(3)};
        } else {
            g.e = {v(3), -v(1), -v(2), v(0)}; // adjugate of a det-1 matrix
        }
        acc = acc.mul(g);
    }
    return acc;
}

LaurentPolynomial trace_polynomial(const Word& w, const RepRing& R) {
    SymbolicMatrix M = word_matrix(w, R);
    return M.e[0] + M.e[3];
}

namespace {

void append_rep_generators(const GroupPresentation& G, const RepRing& R, std::vector<LaurentPolynomial>& gens) {
    SymbolicMatrix id = identity_matrix(R.ring);
    for (const auto& rel : G.relators()) {
        SymbolicMatrix W = word_matrix(rel, R);
        for (int e = 0; e < 4; ++e) {
            LaurentPolynomial g = W.e[e] - id.e[e];
            if (!g.is_zero()) gens.push_back(g);
        }
    }
    for (std::size_t k = 0; k < R.num_gens; ++k) {
        auto v = [&](std::size_t e) { return LaurentPolynomial::variable(R.ring, R.entry_var(k, e)); };
        gens.push_back(v(0) * v(3) - v(1) * v(2) - LaurentPolynomial::constant(R.ring, 1));
    }
}

} // namespace

PolynomialIdeal rep_ideal(const GroupPresentation& G, const CoeffDomain& domain) {
    RepRing R = make_rep_ring(G, domain, false);
    std::vector<LaurentPolynomial> gens;
    append_rep_generators(G, R, gens);
    return PolynomialIdeal(R.ring, std::move(gens));
}

PolynomialIdeal upper_triangular_ideal(const GroupPresentation& G, const CoeffDomain& domain) {
    if (G.num_cusps() == 0) throw InputError("upper-triangular system needs at least one cusp");
    RepRing R = make_rep_ring(G, domain, true);
    std::vector<LaurentPolynomial> gens;
    append_rep_generators(G, R, gens);
    for (std::size_t i = 0; i < G.num_cusps(); ++i) {
        const Cusp& c = G.cusps()[i];
        SymbolicMatrix M = word_matrix(c.meridian, R);
        SymbolicMatrix L = word_matrix(c.longitude, R);
        if (!M.e[2].is_zero()) gens.push_back(M.e[2]);
        if (!L.e[2].is_zero()) gens.push_back(L.e[2]);
        gens.push_back(M.e[0] - LaurentPolynomial::variable(R.ring, R.m_var(i)));
        gens.push_back(L.e[0] - LaurentPolynomial::variable(R.ring, R.l_var(i)));
    }
    return PolynomialIdeal(R.ring, std::move(gens));
}

PolynomialIdeal eigenvalue_system(const GroupPresentation& G, const CoeffDomain& domain) {
    if (G.num_cusps() == 0) throw InputError("eigenvalue system needs at least one cusp (no peripheral structure)");
    RepRing R = make_rep_ring(G, domain, true);
    std::vector<LaurentPolynomial> gens;
    append_rep_generators(G, R, gens);
    for (std::size_t i = 0; i < G.num_cusps(); ++i) {
        const Cusp& c = G.cusps()[i];
        LaurentPolynomial m = LaurentPolynomial::variable(R.ring, R.m_var(i));
        LaurentPolynomial l = LaurentPolynomial::variable(R.ring, R.l_var(i));
        LaurentPolynomial ml = m * l;
        LaurentPolynomial one = LaurentPolynomial::constant(R.ring, 1);
        LaurentPolynomial trM = trace_polynomial(c.meridian, R);
        LaurentPolynomial trL = trace_polynomial(c.longitude, R);
        LaurentPolynomial trML = trace_polynomial(word_concat(c.meridian, c.longitude), R);
        // I_M = m + 1/m, I_L = l + 1/l, I_ML = ml + 1/(ml), cleared by m*l
        gens.push_back(ml * trM - m * m * l - l);
        gens.push_back(ml * trL - m * l * l - m);
        gens.push_back(ml * trML - m * m * l * l - one);
    }
    return PolynomialIdeal(R.ring, std::move(gens));
}

} // namespace avar
