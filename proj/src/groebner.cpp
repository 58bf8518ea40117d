#include "avar/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace avar {

namespace {

using Term = LaurentPolynomial::Term;
using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool enabled = false;

    static Deadline from_budget(const GroebnerBudget& b) {
        Deadline d;
        if (b.timeout_sec > 0) {
            d.enabled = true;
            d.end = Clock::now() + std::chrono::microseconds(static_cast<long long>(b.timeout_sec * 1e6));
        }
        return d;
    }
    void check(const char* where) const {
        if (enabled && Clock::now() > end)
            throw BudgetError(std::string("Groebner wall-clock budget exceeded in ") + where);
    }
};

// Polynomial as a term vector sorted descending under the active order.
struct OPoly {
    std::vector<Term> t;

    bool zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
};

OPoly sort_in(const LaurentPolynomial& p, const MonomialOrder& ord) {
    OPoly o;
    o.t = p.terms();
    std::sort(o.t.begin(), o.t.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    return o;
}

LaurentPolynomial to_poly(const RingPtr& ring, const OPoly& p) {
    return LaurentPolynomial::from_terms(ring, p.t);
}

// r = a[from..] - c * x^shift * b[skip..]
OPoly axpy_tail(const OPoly& a, std::size_t from, const Coefficient& c, const Monomial& shift,
                const OPoly& b, std::size_t skip, const MonomialOrder& ord) {
    OPoly r;
    r.t.reserve(a.t.size() - from + b.t.size() - skip);
    std::size_t i = from, j = skip;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = mono_mul(b.t[j].mono, shift);
        int cmp = ord.compare(a.t[i].mono, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({std::move(bm), -(c * b.t[j].coeff)});
            ++j;
        } else {
            Coefficient s = a.t[i].coeff - c * b.t[j].coeff;
            if (!s.is_zero()) r.t.push_back({a.t[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back({mono_mul(b.t[j].mono, shift), -(c * b.t[j].coeff)});
    return r;
}

void scalar_normalize(OPoly& p, const CoeffDomain& dom) {
    if (p.zero()) return;
    if (dom.kind == DomainKind::prime_field) {
        Coefficient inv = p.lead().coeff.inverse();
        if (inv.is_one()) return;
        for (auto& t : p.t) t.coeff = t.coeff * inv;
        return;
    }
    // primitive integer content, positive leading coefficient
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.t) {
        mpz_class n = t.coeff.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coeff.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    if (p.lead().coeff.rational() < 0) c = -c;
    if (c == 1) return;
    Coefficient inv = Coefficient::from_mpq(dom, 1 / c);
    for (auto& t : p.t) t.coeff = t.coeff * inv;
}

struct Engine {
    RingPtr ring;
    MonomialOrder ord;
    GroebnerBudget budget;
    Deadline deadline;
    GroebnerStats stats;

    std::vector<OPoly> basis;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    struct PairLess {
        const Engine* e;
        bool operator()(const Pair& a, const Pair& b) const {
            int c = e->ord.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0; // smaller lcm first
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::multiset<Pair, PairLess> pairs;

    Engine(RingPtr r, MonomialOrder o, const GroebnerBudget& b)
        : ring(std::move(r)), ord(std::move(o)), budget(b),
          deadline(Deadline::from_budget(b)), pairs(PairLess{this}) {}

    const Monomial& lm(std::size_t i) const { return basis[i].lead().mono; }

    // Full reduction of p by the current basis; result scalar-normalized
    // only when `normalize` is set (normal forms must stay exact).
    OPoly reduce_full(OPoly p, bool normalize) {
        OPoly out;
        std::size_t start = 0;
        long steps = 0;
        while (start < p.t.size()) {
            if (((++steps) & 1023) == 0) deadline.check("reduction");
            const Term& lt = p.t[start];
            bool reduced = false;
            for (std::size_t gi = 0; gi < basis.size(); ++gi) {
                const OPoly& g = basis[gi];
                if (!mono_divides(g.lead().mono, lt.mono)) continue;
                Coefficient c = lt.coeff.div(g.lead().coeff);
                Monomial shift = mono_quotient(lt.mono, g.lead().mono);
                p = axpy_tail(p, start + 1, c, shift, g, 1, ord);
                start = 0;
                reduced = true;
                break;
            }
            if (!reduced) {
                out.t.push_back(lt);
                ++start;
            }
        }
        if (normalize) scalar_normalize(out, ring->domain());
        return out;
    }

    OPoly spoly(std::size_t i, std::size_t j) {
        const OPoly& f = basis[i];
        const OPoly& g = basis[j];
        Monomial l = mono_lcm(f.lead().mono, g.lead().mono);
        Monomial sf = mono_quotient(l, f.lead().mono);
        Monomial sg = mono_quotient(l, g.lead().mono);
        // (x^sf f)/lc(f) - (x^sg g)/lc(g): leading terms cancel by construction
        OPoly a;
        a.t.reserve(f.t.size() - 1);
        Coefficient cf = f.lead().coeff.inverse();
        for (std::size_t k = 1; k < f.t.size(); ++k)
            a.t.push_back({mono_mul(f.t[k].mono, sf), f.t[k].coeff * cf});
        Coefficient cg = g.lead().coeff.inverse();
        return axpy_tail(a, 0, cg, sg, g, 1, ord);
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0 && b[i] > 0) return false;
        return true;
    }

    // Gebauer-Moeller pair update on inserting basis element k.
    void update_pairs(std::size_t k) {
        const Monomial& lmk = lm(k);
        // chain criterion on existing pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial& l = it->lcm;
            if (mono_divides(lmk, l) && mono_lcm(lm(it->i), lmk) != l && mono_lcm(lm(it->j), lmk) != l)
                it = pairs.erase(it);
            else
                ++it;
        }
        // candidate pairs with k, pruned among themselves
        std::vector<Pair> cand;
        cand.reserve(k);
        for (std::size_t i = 0; i < k; ++i) cand.push_back({i, k, mono_lcm(lm(i), lmk)});
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (drop[a]) break;
                if (a == b || drop[b]) continue;
                if (cand[a].lcm == cand[b].lcm) {
                    if (b < a) drop[a] = true; // keep the earliest of equal lcms
                } else if (mono_divides(cand[b].lcm, cand[a].lcm)) {
                    drop[a] = true;
                }
            }
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            if (coprime(lm(cand[a].i), lmk)) continue; // product criterion
            pairs.insert(cand[a]);
        }
    }

    void add_element(OPoly h) {
        basis.push_back(std::move(h));
        stats.basis_peak = std::max(stats.basis_peak, basis.size());
        if (basis.size() > budget.max_basis)
            throw BudgetError("Groebner basis size budget exceeded (" + std::to_string(budget.max_basis) + ")");
        update_pairs(basis.size() - 1);
    }

    void run(const std::vector<LaurentPolynomial>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            OPoly og = reduce_full(sort_in(g, ord), true);
            if (!og.zero()) add_element(std::move(og));
        }
        while (!pairs.empty()) {
            deadline.check("pair loop");
            if (++stats.pairs_processed > budget.max_pairs)
                throw BudgetError("Groebner S-pair budget exceeded");
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            OPoly h = reduce_full(spoly(p.i, p.j), true);
            if (h.zero()) {
                ++stats.reductions_to_zero;
                continue;
            }
            add_element(std::move(h));
        }
    }

    // Minimalize + tail-reduce into the unique reduced basis.
    std::vector<LaurentPolynomial> reduced_basis() {
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            int c = ord.compare(lm(a), lm(b));
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<std::size_t> kept;
        for (auto i : idx) {
            bool dominated = false;
            for (auto j : kept) {
                if (mono_divides(lm(j), lm(i))) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(i);
        }
        std::vector<OPoly> mini;
        mini.reserve(kept.size());
        for (auto i : kept) mini.push_back(basis[i]);

        std::vector<LaurentPolynomial> out;
        out.reserve(mini.size());
        for (std::size_t i = 0; i < mini.size(); ++i) {
            std::vector<OPoly> others;
            others.reserve(mini.size() - 1);
            for (std::size_t j = 0; j < mini.size(); ++j)
                if (j != i) others.push_back(mini[j]);
            std::swap(basis, others);
            OPoly r = reduce_full(mini[i], false);
            std::swap(basis, others);
            // monic
            if (!r.zero()) {
                Coefficient inv = r.lead().coeff.inverse();
                for (auto& t : r.t) t.coeff = t.coeff * inv;
            }
            out.push_back(to_poly(ring, r));
        }
        std::sort(out.begin(), out.end(), [&](const LaurentPolynomial& a, const LaurentPolynomial& b) {
            return ord.compare(sort_in(a, ord).lead().mono, sort_in(b, ord).lead().mono) < 0;
        });
        return out;
    }
};

bool all_homogeneous(const std::vector<LaurentPolynomial>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        long d = mono_total_degree(g.terms().front().mono);
        for (const auto& t : g.terms())
            if (mono_total_degree(t.mono) != d) return false;
    }
    return true;
}

std::vector<std::size_t> all_var_indices(const RingPtr& r) {
    std::vector<std::size_t> v(r->nvars());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

} // namespace

PolynomialIdeal::PolynomialIdeal(RingPtr ring, std::vector<LaurentPolynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw InputError("ideal generator over a different ring");
        gens_.push_back(g.clear_laurent().first);
    }
}

bool GroebnerBasis::is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

GroebnerBasis buchberger(const PolynomialIdeal& I, const MonomialOrder& ord, const GroebnerBudget& budget) {
    if (!I.ring()->domain().is_field())
        throw InputError("Groebner bases require field coefficients (Q or F_p)");
    if (!ord.is_global() && !all_homogeneous(I.generators()))
        throw InputError("weight-refined orders require homogeneous generators");
    if (ord.kind() == OrderKind::weight && ord.weights().size() != I.ring()->nvars())
        throw InputError("weight vector arity mismatch");
    Engine e(I.ring(), ord, budget);
    e.run(I.generators());
    GroebnerBasis out;
    out.ring = I.ring();
    out.order = ord;
    out.elements = e.reduced_basis();
    out.stats = e.stats;
    return out;
}

LaurentPolynomial normal_form(const LaurentPolynomial& f, const GroebnerBasis& G) {
    if (!same_ring(f.ring(), G.ring)) throw InputError("normal form over a different ring");
    Engine e(G.ring, G.order, GroebnerBudget{});
    for (const auto& g : G.elements) e.basis.push_back(sort_in(g, G.order));
    OPoly r = e.reduce_full(sort_in(f.clear_laurent().first, G.order), false);
    return to_poly(G.ring, r);
}

bool ideal_contains(const PolynomialIdeal& I, const LaurentPolynomial& f, const GroebnerBudget& budget) {
    if (f.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    GroebnerBasis G = buchberger(I, MonomialOrder::grevlex(), budget);
    return normal_form(f, G).is_zero();
}

PolynomialIdeal eliminate(const PolynomialIdeal& I, const std::vector<std::size_t>& drop,
                          const GroebnerBudget& budget) {
    const RingPtr& R = I.ring();
    std::vector<char> dropped(R->nvars(), 0);
    for (auto i : drop) {
        if (i >= R->nvars()) throw InputError("eliminate: variable index out of range");
        dropped[i] = 1;
    }
    std::vector<Variable> keep_vars;
    std::vector<int> vmap(R->nvars(), -1);
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        if (!dropped[i]) {
            vmap[i] = static_cast<int>(keep_vars.size());
            keep_vars.push_back(R->var(i));
        }
    }
    RingPtr reduced = make_ring(R->domain(), keep_vars);
    if (I.is_zero_ideal()) return PolynomialIdeal(reduced, {});

    GroebnerBasis G = buchberger(I, MonomialOrder::block_elimination(drop, R->nvars()), budget);
    std::vector<LaurentPolynomial> kept;
    for (const auto& g : G.elements) {
        bool uses_dropped = false;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < R->nvars() && !uses_dropped; ++i)
                if (dropped[i] && t.mono[i] != 0) uses_dropped = true;
            if (uses_dropped) break;
        }
        if (!uses_dropped) kept.push_back(g.reindexed(reduced, vmap));
    }
    return PolynomialIdeal(reduced, std::move(kept));
}

PolynomialIdeal saturate_by_variables(const PolynomialIdeal& I, const std::vector<std::size_t>& vars,
                                      const GroebnerBudget& budget) {
    const RingPtr& R = I.ring();
    if (vars.empty()) throw InputError("saturation requires at least one variable");
    std::vector<Variable> ext = R->vars();
    std::string tname = "_t";
    while (R->find_var(tname) >= 0) tname += "_";
    ext.push_back({tname, false});
    RingPtr Rt = make_ring(R->domain(), ext);

    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i);
    std::vector<LaurentPolynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.reindexed(Rt, up));
    LaurentPolynomial rab = LaurentPolynomial::variable(Rt, Rt->nvars() - 1);
    for (auto v : vars) {
        if (v >= R->nvars()) throw InputError("saturation variable index out of range");
        rab = rab * LaurentPolynomial::variable(Rt, v);
    }
    gens.push_back(rab - LaurentPolynomial::constant(Rt, 1));

    PolynomialIdeal J(Rt, std::move(gens));
    PolynomialIdeal E = eliminate(J, {Rt->nvars() - 1}, budget);
    // bring back onto the original ring object
    std::vector<int> idm(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) idm[i] = static_cast<int>(i);
    std::vector<LaurentPolynomial> back;
    for (const auto& g : E.generators()) back.push_back(g.reindexed(R, idm));
    return PolynomialIdeal(R, std::move(back));
}

PolynomialIdeal initial_form_ideal(const PolynomialIdeal& I, const std::vector<long long>& w,
                                   const GroebnerBudget& budget) {
    const RingPtr& R = I.ring();
    if (w.size() != R->nvars()) throw InputError("weight vector arity mismatch");
    if (I.is_zero_ideal()) return PolynomialIdeal(R, {});

    std::vector<Variable> ext = R->vars();
    std::string hname = "_h";
    while (R->find_var(hname) >= 0) hname += "_";
    ext.push_back({hname, false});
    RingPtr Rh = make_ring(R->domain(), ext);
    std::size_t hidx = Rh->nvars() - 1;

    std::vector<LaurentPolynomial> hgens;
    for (const auto& g : I.generators()) {
        long D = g.total_degree();
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m(Rh->nvars(), 0);
            std::copy(t.mono.begin(), t.mono.end(), m.begin());
            m[hidx] = static_cast<std::int32_t>(D - mono_total_degree(t.mono));
            terms.push_back({std::move(m), t.coeff});
        }
        hgens.push_back(LaurentPolynomial::from_terms(Rh, std::move(terms)));
    }
    std::vector<long long> wh = w;
    wh.push_back(0);
    GroebnerBasis G = buchberger(PolynomialIdeal(Rh, std::move(hgens)), MonomialOrder::weighted(wh), budget);

    auto weight_of = [&](const Monomial& m) {
        __int128 s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<__int128>(wh[i]) * m[i];
        return s;
    };
    std::vector<int> down(Rh->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) down[i] = static_cast<int>(i);
    down[hidx] = -1;
    std::vector<LaurentPolynomial> init;
    for (const auto& g : G.elements) {
        OPoly o = sort_in(g, G.order);
        __int128 top = weight_of(o.lead().mono);
        std::vector<Term> keep;
        for (const auto& t : o.t) {
            if (weight_of(t.mono) != top) break;
            Monomial m = t.mono;
            m[hidx] = 0;
            keep.push_back({std::move(m), t.coeff});
        }
        LaurentPolynomial p = LaurentPolynomial::from_terms(Rh, std::move(keep));
        init.push_back(p.reindexed(R, down));
    }
    return PolynomialIdeal(R, std::move(init));
}

bool contains_monomial(const PolynomialIdeal& I, const GroebnerBudget& budget) {
    if (I.is_zero_ideal()) return false;
    PolynomialIdeal S = saturate_by_variables(I, all_var_indices(I.ring()), budget);
    for (const auto& g : S.generators())
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

PresimplifiedIdeal eliminate_unit_linear(const PolynomialIdeal& I, const std::vector<std::size_t>& keep) {
    const RingPtr& R = I.ring();
    std::vector<char> keep_mask(R->nvars(), 0);
    for (auto k : keep) keep_mask[k] = 1;
    std::vector<char> gone(R->nvars(), 0);
    std::vector<LaurentPolynomial> gens = I.generators();
    std::vector<LinearSubstitution> subs;

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t gi = 0; gi < gens.size() && !progress; ++gi) {
            const LaurentPolynomial& g = gens[gi];
            if (g.is_zero()) continue;
            for (std::size_t v = 0; v < R->nvars(); ++v) {
                if (keep_mask[v] || gone[v]) continue;
                if (g.degree(v) != 1 || g.min_degree(v) < 0) continue;
                LaurentPolynomial c1 = g.coeff_of(v, 1);
                if (!c1.is_constant() || c1.is_zero()) continue;
                LaurentPolynomial c0 = g.coeff_of(v, 0);
                LaurentPolynomial repl = (-c0).scaled(c1.lead().coeff.inverse());
                std::vector<LaurentPolynomial> next;
                for (std::size_t gj = 0; gj < gens.size(); ++gj) {
                    if (gj == gi) continue;
                    next.push_back(gens[gj].substituted(v, repl));
                }
                subs.push_back({R->var(v).name, repl.to_string()});
                gone[v] = 1;
                gens = std::move(next);
                progress = true;
                break;
            }
        }
    }

    std::vector<Variable> keep_vars;
    std::vector<int> vmap(R->nvars(), -1);
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        if (!gone[i]) {
            vmap[i] = static_cast<int>(keep_vars.size());
            keep_vars.push_back(R->var(i));
        }
    }
    RingPtr reduced = make_ring(R->domain(), keep_vars);
    std::vector<LaurentPolynomial> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g.reindexed(reduced, vmap));
    return {PolynomialIdeal(reduced, std::move(out)), std::move(subs), std::move(vmap)};
}

} // namespace avar
