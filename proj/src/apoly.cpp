#include "avar/apoly.hpp"

#include <algorithm>
#include <chrono>

namespace avar {

namespace {

using Clock = std::chrono::steady_clock;

// Strip the common monomial factor restricted to the given variables
// (saturation by those coordinates at the principal level).
LaurentPolynomial strip_vars_monomial(const LaurentPolynomial& f, const std::vector<std::size_t>& vars,
                                      std::vector<std::string>* record) {
    if (f.is_zero()) return f;
    Monomial g = f.terms().front().mono;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t.mono[i]);
    Monomial shift = mono_one(g.size());
    for (auto v : vars) shift[v] = -g[v];
    if (mono_is_one(shift)) return f;
    if (record) {
        std::string s = "stripped";
        for (auto v : vars)
            if (shift[v] != 0) s += " " + f.ring()->var(v).name + "^" + std::to_string(-shift[v]);
        record->push_back(s);
    }
    return f.times_monomial(shift);
}

struct TowerState {
    GroebnerBudget budget;
    Clock::time_point start = Clock::now();
    std::size_t resultants = 0;
    std::size_t branches = 0;

    void tick(const char* where) {
        if (budget.timeout_sec > 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > budget.timeout_sec)
            throw BudgetError(std::string("resultant tower wall-clock budget exceeded in ") + where);
        if (++resultants > budget.max_pairs) throw BudgetError("resultant tower operation budget exceeded");
    }
};

// Eliminate all variables except keep0/keep1 from the generator set by
// iterated resultants. Sound superset of the projection: every point of
// the projected variety kills every output polynomial.
std::vector<LaurentPolynomial> tower_eliminate(std::vector<LaurentPolynomial> gens, std::size_t keep0,
                                               std::size_t keep1, TowerState& st) {
    const RingPtr ring = gens.empty() ? nullptr : gens.front().ring();
    if (!ring) return gens;
    std::vector<std::size_t> keepvars = {keep0, keep1};

    auto cleanup = [&](std::vector<LaurentPolynomial>& set) {
        std::vector<LaurentPolynomial> out;
        for (auto& f : set) {
            if (f.is_zero()) continue;
            LaurentPolynomial g = strip_vars_monomial(f, keepvars, nullptr).scalar_normalized();
            if (g.is_constant()) {
                out.clear();
                out.push_back(LaurentPolynomial::constant(ring, 1));
                return out; // inconsistent branch: empty variety
            }
            bool dup = false;
            for (const auto& h : out)
                if (h == g) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(std::move(g));
        }
        return out;
    };

    gens = cleanup(gens);
    for (;;) {
        // pick the elimination variable and pivot
        std::size_t best_var = ring->nvars();
        std::size_t best_pivot = gens.size();
        long best_deg = -1;
        std::size_t best_terms = 0;
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            if (v == keep0 || v == keep1) continue;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                long d = gens[i].degree(v);
                if (d <= 0) continue;
                std::size_t nt = gens[i].num_terms();
                if (best_deg < 0 || d < best_deg || (d == best_deg && nt < best_terms)) {
                    best_deg = d;
                    best_terms = nt;
                    best_var = v;
                    best_pivot = i;
                }
            }
        }
        if (best_deg < 0) break; // only keep-variables remain
        std::size_t v = best_var;
        const LaurentPolynomial pivot = gens[best_pivot];
        std::vector<LaurentPolynomial> next;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == best_pivot) continue;
            if (gens[i].degree(v) <= 0 && gens[i].min_degree(v) >= 0) {
                next.push_back(gens[i]);
                continue;
            }
            st.tick("resultant");
            LaurentPolynomial r = resultant(pivot, gens[i], v);
            if (r.is_zero()) {
                // common factor in v: split off the gcd and retry the parts
                LaurentPolynomial d = poly_gcd(pivot, gens[i]);
                auto p1 = divide_exact(pivot, d), p2 = divide_exact(gens[i], d);
                if (!p1 || !p2) throw InternalError("zero resultant without a common factor");
                next.push_back(d); // V(pivot, g) = V(d) u V(pivot/d, g/d); keep the union coarsely
                if (!p1->is_constant() && !p2->is_constant()) {
                    st.tick("resultant");
                    LaurentPolynomial r2 = resultant(*p1, *p2, v);
                    if (!r2.is_zero()) next.push_back(r2);
                }
                continue;
            }
            next.push_back(std::move(r));
        }
        gens = cleanup(next);
        if (gens.size() == 1 && gens[0].is_constant()) break;
    }
    return gens;
}

LaurentPolynomial gcd_of_set(const std::vector<LaurentPolynomial>& polys, const RingPtr& ring) {
    LaurentPolynomial g = LaurentPolynomial::zero(ring);
    for (const auto& f : polys) g = poly_gcd(g, f);
    return g;
}

} // namespace

bool apoly_equivalent(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return apoly_canonical(f) == apoly_canonical(g);
}

LaurentPolynomial apoly_canonical(const LaurentPolynomial& f) {
    if (f.is_zero()) return f;
    LaurentPolynomial a = f.normalized();
    std::vector<std::size_t> all(f.ring()->nvars());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    LaurentPolynomial b = f.inverted_vars(all).normalized();
    return b.to_string() < a.to_string() ? b : a;
}

bool is_reduced(const LaurentPolynomial& f) {
    if (f.is_zero()) throw InputError("reducedness of the zero polynomial");
    LaurentPolynomial s = squarefree_part(f);
    return apoly_equivalent(s, f);
}

APolynomial a_polynomial(const GroupPresentation& G, const CoeffDomain& domain, const ApolyOptions& opts) {
    if (G.num_cusps() != 1) throw InputError("A-polynomial requires exactly one cusp");
    bool char0 = domain.kind != DomainKind::prime_field;
    CoeffDomain field = char0 ? CoeffDomain::rationals() : domain;

    APolynomial out;
    ApolyProvenance& prov = out.provenance;
    out.abelian_kept = opts.keep_abelian;

    PolynomialIdeal I0 = upper_triangular_ideal(G, field);
    RepRing RR = make_rep_ring(G, field, true);
    std::size_t m_idx = RR.m_var(0), l_idx = RR.l_var(0);

    PresimplifiedIdeal simp = eliminate_unit_linear(I0, {m_idx, l_idx});
    prov.presubstitutions = simp.substitutions;
    const RingPtr ring = simp.ideal.ring();
    std::size_t m2 = static_cast<std::size_t>(simp.var_map[m_idx]);
    std::size_t l2 = static_cast<std::size_t>(simp.var_map[l_idx]);

    // target two-variable ring (m, l)
    RingPtr plane = make_ring(field, {ring->var(m2), ring->var(l2)});

    std::vector<LaurentPolynomial> plane_polys;
    bool have_result = false;

    auto try_groebner = [&]() {
        // saturation by m*l folded into one block elimination (same ideal:
        // eliminating {t} first and the matrix block second equals
        // eliminating both at once)
        std::vector<Variable> ext = ring->vars();
        ext.push_back({"_t", false});
        RingPtr Rt = make_ring(field, ext);
        std::vector<int> up(ring->nvars());
        for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i);
        std::vector<LaurentPolynomial> gens;
        for (const auto& g : simp.ideal.generators()) gens.push_back(g.reindexed(Rt, up));
        gens.push_back(LaurentPolynomial::variable(Rt, Rt->nvars() - 1) *
                           LaurentPolynomial::variable(Rt, m2) * LaurentPolynomial::variable(Rt, l2) -
                       LaurentPolynomial::constant(Rt, 1));
        std::vector<std::size_t> drop;
        for (std::size_t i = 0; i < Rt->nvars(); ++i)
            if (i != m2 && i != l2) drop.push_back(i);
        PolynomialIdeal E = eliminate(PolynomialIdeal(Rt, std::move(gens)), drop, opts.budget);
        // E lives over a 2-variable ring (m, l) in original order
        std::vector<int> idm = {0, 1};
        for (const auto& g : E.generators()) plane_polys.push_back(g.reindexed(plane, idm));
        prov.route = "groebner-elimination";
        prov.notes.push_back("saturation by m*l folded into the block elimination");
        have_result = true;
    };

    auto try_tower = [&]() {
        TowerState st;
        st.budget = opts.budget;
        // gauge slice on the upper-right entries surviving presimplification
        std::vector<std::size_t> slice_vars;
        for (std::size_t k = 0; k < RR.num_gens; ++k) {
            int nv = simp.var_map[RR.entry_var(k, 1)];
            if (nv >= 0) slice_vars.push_back(static_cast<std::size_t>(nv));
        }
        std::vector<std::vector<LaurentPolynomial>> branch_results;
        std::size_t nbranches = slice_vars.size() + 1;
        for (std::size_t br = 0; br < nbranches; ++br) {
            ++st.branches;
            std::vector<LaurentPolynomial> gens = simp.ideal.generators();
            LaurentPolynomial one = LaurentPolynomial::constant(ring, 1);
            LaurentPolynomial zero = LaurentPolynomial::zero(ring);
            for (std::size_t j = 0; j < slice_vars.size(); ++j) {
                const LaurentPolynomial* repl = nullptr;
                if (j < br) repl = &zero;
                else if (j == br) repl = &one;
                else break; // untouched
                for (auto& g : gens) g = g.substituted(slice_vars[j], *repl);
            }
            branch_results.push_back(tower_eliminate(std::move(gens), m2, l2, st));
        }
        // union of the branch codimension-1 parts
        LaurentPolynomial acc = LaurentPolynomial::zero(plane);
        bool any_unconstrained = false;
        std::vector<int> to_plane(ring->nvars(), -1);
        to_plane[m2] = 0;
        to_plane[l2] = 1;
        for (auto& branch : branch_results) {
            if (branch.empty()) {
                any_unconstrained = true;
                continue;
            }
            if (branch.size() == 1 && branch[0].is_constant()) continue; // empty branch variety
            std::vector<LaurentPolynomial> planed;
            for (auto& f : branch) planed.push_back(f.reindexed(plane, to_plane));
            LaurentPolynomial g = gcd_of_set(planed, plane);
            if (g.is_constant()) continue; // branch projection has no codim-1 part
            if (acc.is_zero()) acc = g;
            else {
                acc = poly_lcm(acc, g);
            }
        }
        prov.route = "resultant-tower";
        prov.tower_resultants = st.resultants;
        prov.tower_branches = st.branches;
        prov.notes.push_back("diagonal gauge slicing over upper-right entries; union of branch projections");
        if (any_unconstrained) {
            plane_polys.clear(); // some branch projects onto the whole plane
        } else if (!acc.is_zero()) {
            plane_polys.push_back(acc);
        }
        have_result = true;
    };

    switch (opts.route) {
        case ElimRoute::groebner:
            try_groebner();
            break;
        case ElimRoute::resultant_tower:
            try_tower();
            break;
        case ElimRoute::automatic:
            try {
                try_groebner();
            } catch (const BudgetError& e) {
                prov.notes.push_back(std::string("groebner route exceeded budget: ") + e.what());
                try_tower();
            }
            break;
    }
    if (!have_result) throw InternalError("A-polynomial elimination produced no result");

    if (plane_polys.empty()) {
        out.poly = LaurentPolynomial::zero(char0 ? ring_with_domain(plane, CoeffDomain::integers()) : plane);
        prov.notes.push_back("A = 0: no codimension-1 constraint");
        return out;
    }

    LaurentPolynomial A = gcd_of_set(plane_polys, plane);
    if (plane_polys.size() > 1) {
        prov.elimination_principal = false;
        for (const auto& g : plane_polys) prov.non_principal_residue.push_back(g.to_string());
        prov.notes.push_back("elimination ideal not principal; gcd of generators taken as the codimension-1 part");
    }

    auto [stripped, factor] = A.strip_monomial();
    if (!mono_is_one(factor)) {
        std::string s = "stripped unit monomial";
        for (std::size_t i = 0; i < factor.size(); ++i)
            if (factor[i] != 0) s += " " + plane->var(i).name + "^" + std::to_string(factor[i]);
        prov.stripped_monomials.push_back(s);
    }
    A = stripped.scalar_normalized();

    if (!opts.keep_abelian) {
        // divide out abelian (l - 1) factors
        LaurentPolynomial lm1 = LaurentPolynomial::variable(plane, 1) - LaurentPolynomial::constant(plane, 1);
        for (;;) {
            auto q = divide_exact(A, lm1);
            if (!q) break;
            A = q->normalized();
            ++prov.abelian_factors_removed;
        }
        if (A.is_constant()) prov.notes.push_back("only the abelian factor remained");
    }

    A = A.normalized();
    if (char0) {
        // primitive integer coefficients; present over Z
        A = A.map_domain(CoeffDomain::integers(), [](const Coefficient& c) {
            return Coefficient::from_mpq(CoeffDomain::integers(), c.rational());
        });
    }
    out.poly = A;
    return out;
}

SlopeSet boundary_slopes(const LaurentPolynomial& f) {
    SlopeSet out;
    if (f.is_zero() || f.is_constant()) return out;
    int li = f.ring()->find_var("l"), mi = f.ring()->find_var("m");
    if (li < 0 || mi < 0) throw InputError("boundary slopes expect variables named m and l");
    NewtonPolytope P = newton_polytope(f, {static_cast<std::size_t>(li), static_cast<std::size_t>(mi)});
    return polygon_slopes(P);
}

SlopeSet boundary_slopes_from_apoly(const APolynomial& f) { return boundary_slopes(f.poly); }

ModPComparisonReport compare_mod_p(const GroupPresentation& G, std::uint64_t p, const ApolyOptions& opts) {
    APolynomial a0 = a_polynomial(G, CoeffDomain::rationals(), opts);
    return compare_mod_p(a0, G, p, opts);
}

ModPComparisonReport compare_mod_p(const APolynomial& a0, const GroupPresentation& G, std::uint64_t p,
                                   const ApolyOptions& opts) {
    ModPComparisonReport rep;
    rep.p = p;
    if (a0.is_zero()) {
        rep.verdict = ModPVerdict::bad_prime;
        rep.reason = "characteristic-0 A-polynomial is zero";
        return rep;
    }
    LaurentPolynomial a0p = a0.poly.reduce_mod_p(p);
    rep.a0_mod_p = apoly_canonical(a0p);
    if (a0p.is_zero()) {
        rep.verdict = ModPVerdict::bad_prime;
        rep.reason = "A_0 vanishes identically mod p";
        return rep;
    }
    APolynomial ap = a_polynomial(G, CoeffDomain::prime_field(p), opts);
    rep.ap_provenance = ap.provenance;
    if (ap.is_zero()) {
        rep.verdict = ModPVerdict::bad_prime;
        rep.reason = "native mod-p A-polynomial is zero";
        return rep;
    }
    rep.ap_native = apoly_canonical(ap.poly);

    if (apoly_equivalent(a0p, ap.poly)) {
        rep.verdict = ModPVerdict::equal_up_to_unit;
        return rep;
    }
    auto q = divide_exact(rep.a0_mod_p, rep.ap_native);
    if (!q) {
        // try the inversion-symmetric representative of the divisor
        std::vector<std::size_t> all = {0, 1};
        q = divide_exact(rep.a0_mod_p, rep.ap_native.inverted_vars(all).normalized());
    }
    if (!q) {
        rep.verdict = ModPVerdict::bad_prime;
        rep.reason = "A_0 mod p is not a multiple of the native A_p";
        return rep;
    }
    LaurentPolynomial g = q->normalized();
    rep.cofactor = g;
    // every factor of g must appear in A_p: divide out gcds until constant
    LaurentPolynomial h = g;
    while (!h.is_constant()) {
        LaurentPolynomial d = poly_gcd(h, rep.ap_native);
        if (d.is_constant()) {
            rep.verdict = ModPVerdict::bad_prime;
            rep.reason = "cofactor has a factor not appearing in A_p";
            return rep;
        }
        auto hh = divide_exact(h, d);
        if (!hh) throw InternalError("gcd fails to divide in cofactor check");
        h = hh->normalized();
    }
    rep.verdict = ModPVerdict::extra_factor;
    return rep;
}

std::string verdict_name(ModPVerdict v) {
    switch (v) {
        case ModPVerdict::equal_up_to_unit: return "equal-up-to-unit";
        case ModPVerdict::extra_factor: return "extra-factor";
        case ModPVerdict::bad_prime: return "bad-prime";
    }
    return "?";
}

} // namespace avar
