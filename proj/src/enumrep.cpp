#include "avar/enumrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "avar/repvar.hpp"

namespace avar {

Mat2p mat_mul(const Mat2p& x, const Mat2p& y, std::uint64_t p) {
    auto m = [p](std::uint64_t a, std::uint64_t b) { return (a * b) % p; };
    Mat2p r;
    r.a = static_cast<std::uint32_t>((m(x.a, y.a) + m(x.b, y.c)) % p);
    r.b = static_cast<std::uint32_t>((m(x.a, y.b) + m(x.b, y.d)) % p);
    r.c = static_cast<std::uint32_t>((m(x.c, y.a) + m(x.d, y.c)) % p);
    r.d = static_cast<std::uint32_t>((m(x.c, y.b) + m(x.d, y.d)) % p);
    return r;
}

Mat2p mat_inv_det1(const Mat2p& x, std::uint64_t p) {
    Mat2p r;
    r.a = x.d;
    r.b = static_cast<std::uint32_t>((p - x.b) % p);
    r.c = static_cast<std::uint32_t>((p - x.c) % p);
    r.d = x.a;
    return r;
}

Mat2p evaluate_word(const Word& w, const std::vector<Mat2p>& images, std::uint64_t p) {
    Mat2p acc;
    for (auto letter : w) {
        std::size_t k = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
        acc = mat_mul(acc, letter > 0 ? images[k] : mat_inv_det1(images[k], p), p);
    }
    return acc;
}

const std::vector<Mat2p>& sl2_elements(std::uint64_t p) {
    static std::map<std::uint64_t, std::vector<Mat2p>> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    if (!is_prime_u64(p)) throw InputError("SL(2,F_p) table: p must be prime");
    std::vector<Mat2p> els;
    els.reserve(p * (p * p - 1));
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    std::uint64_t det =
                        ((static_cast<std::uint64_t>(a) * d) % p + p - (static_cast<std::uint64_t>(b) * c) % p) % p;
                    if (det == 1 % p) els.push_back({a, b, c, d});
                }
    return cache.emplace(p, std::move(els)).first->second;
}

EnumerationReport enumerate_homs(const GroupPresentation& G, std::uint64_t p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw BudgetError("enumeration supports p in {2,3,5,7} only");
    const auto& els = sl2_elements(p);
    double tuples = std::pow(static_cast<double>(els.size()), static_cast<double>(G.num_generators()));
    if (tuples > 1e8) throw BudgetError("enumeration budget exceeded: |SL(2,F_p)|^n > 1e8");

    // relators checkable once all generators they mention are assigned
    std::size_t n = G.num_generators();
    std::vector<std::vector<const Word*>> by_depth(n + 1);
    for (const auto& r : G.relators()) {
        std::size_t maxgen = 0;
        for (auto x : r) maxgen = std::max(maxgen, static_cast<std::size_t>(x < 0 ? -x : x));
        by_depth[maxgen].push_back(&r);
    }

    EnumerationReport rep;
    rep.p = p;
    std::vector<Mat2p> images(n);
    Mat2p id;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            rep.reps.push_back({p, images});
            return;
        }
        for (const auto& e : els) {
            images[depth] = e;
            bool ok = true;
            for (const Word* r : by_depth[depth + 1]) {
                if (!(evaluate_word(*r, images, p) == id)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, depth + 1);
        }
    };
    rec(rec, 0);
    rep.count = rep.reps.size();
    return rep;
}

PeripheralEigenvalues peripheral_eigenvalues(const GroupPresentation& G, const FiniteRepresentation& rep) {
    std::uint64_t p = rep.p;
    PeripheralEigenvalues out;
    // candidate projective points (v0, v1): (1, t) then (0, 1)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::uint64_t t = 0; t < p; ++t) pts.push_back({1, t});
    pts.push_back({0, 1});

    std::vector<Mat2p> mats;
    for (const auto& c : G.cusps()) {
        mats.push_back(evaluate_word(c.meridian, rep.images, p));
        mats.push_back(evaluate_word(c.longitude, rep.images, p));
    }
    auto eigen_at = [&](const Mat2p& M, const std::pair<std::uint64_t, std::uint64_t>& v,
                        std::uint64_t& val) -> bool {
        std::uint64_t x0 = (M.a * v.first + M.b * v.second) % p;
        std::uint64_t x1 = (M.c * v.first + M.d * v.second) % p;
        // x must be proportional to v
        if ((x0 * v.second) % p != (x1 * v.first) % p) return false;
        val = v.first != 0 ? (x0 * invmod_u64(v.first, p)) % p : (x1 * invmod_u64(v.second, p)) % p;
        return true;
    };
    for (const auto& v : pts) {
        bool all = true;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> ml;
        for (std::size_t i = 0; i + 1 < mats.size() && all; i += 2) {
            std::uint64_t m = 0, l = 0;
            if (!eigen_at(mats[i], v, m) || !eigen_at(mats[i + 1], v, l)) all = false;
            else ml.push_back({m, l});
        }
        if (all) {
            out.triangulable = true;
            out.ml = std::move(ml);
            return out;
        }
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> ideal_points_exhaustive(const PolynomialIdeal& I, std::uint64_t p) {
    const RingPtr& R = I.ring();
    if (!(R->domain() == CoeffDomain::prime_field(p)))
        throw InputError("ideal_points_exhaustive: ideal must live over F_p for the given p");
    std::size_t n = R->nvars();
    double space = std::pow(static_cast<double>(p), static_cast<double>(n));
    if (space > 1e8) throw BudgetError("point enumeration budget exceeded: p^vars > 1e8");

    // dense evaluation tables: per generator, list of (coeff, exponents)
    struct FlatPoly {
        std::vector<std::uint64_t> coeffs;
        std::vector<std::vector<std::int32_t>> exps;
    };
    std::vector<FlatPoly> gens;
    for (const auto& g : I.generators()) {
        FlatPoly f;
        for (const auto& t : g.terms()) {
            f.coeffs.push_back(t.coeff.residue());
            f.exps.push_back(t.mono);
        }
        gens.push_back(std::move(f));
    }

    std::vector<std::vector<std::uint64_t>> points;
    std::vector<std::uint64_t> x(n, 0);
    // power table: pow[v][e] for e up to max degree
    std::int32_t maxdeg = 1;
    for (const auto& g : I.generators())
        for (const auto& t : g.terms())
            for (auto e : t.mono) maxdeg = std::max(maxdeg, e);
    std::vector<std::vector<std::uint64_t>> powtab(n, std::vector<std::uint64_t>(maxdeg + 1, 1));

    auto refresh = [&](std::size_t v) {
        for (std::int32_t e = 1; e <= maxdeg; ++e) powtab[v][e] = (powtab[v][e - 1] * x[v]) % p;
    };
    for (std::size_t v = 0; v < n; ++v) refresh(v);

    for (;;) {
        bool all_zero = true;
        for (const auto& f : gens) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < f.coeffs.size(); ++t) {
                std::uint64_t term = f.coeffs[t];
                const auto& ex = f.exps[t];
                for (std::size_t v = 0; v < n && term; ++v)
                    if (ex[v] != 0) term = (term * powtab[v][ex[v]]) % p;
                acc = (acc + term) % p;
            }
            if (acc != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) points.push_back(x);
        // odometer
        std::size_t v = 0;
        for (; v < n; ++v) {
            if (++x[v] < p) {
                refresh(v);
                break;
            }
            x[v] = 0;
            refresh(v);
        }
        if (v == n) break;
    }
    return points;
}

CrossCheckReport cross_check(const GroupPresentation& G, std::uint64_t p) {
    CrossCheckReport out;
    out.p = p;
    EnumerationReport homs = enumerate_homs(G, p);
    PolynomialIdeal I = rep_ideal(G, CoeffDomain::prime_field(p));
    auto points = ideal_points_exhaustive(I, p);
    out.hom_count = homs.count;
    out.point_count = points.size();

    std::vector<std::vector<std::uint64_t>> hom_tuples;
    for (const auto& r : homs.reps) {
        std::vector<std::uint64_t> t;
        for (const auto& m : r.images) {
            t.push_back(m.a);
            t.push_back(m.b);
            t.push_back(m.c);
            t.push_back(m.d);
        }
        hom_tuples.push_back(std::move(t));
    }
    std::sort(hom_tuples.begin(), hom_tuples.end());
    std::sort(points.begin(), points.end());
    out.pass = hom_tuples == points;
    return out;
}

namespace {

std::string print_rep(const GroupPresentation& G, const FiniteRepresentation& r) {
    std::ostringstream ss;
    for (std::size_t k = 0; k < r.images.size(); ++k) {
        const auto& m = r.images[k];
        ss << G.generator_names()[k] << "=[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]] ";
    }
    return ss.str();
}

} // namespace

PeripheralReport validate_peripheral(const GroupPresentation& G, std::uint64_t p) {
    PeripheralReport out;
    out.p = p;
    if (G.num_cusps() == 0) {
        out.notes.push_back("presentation has no cusps; nothing to validate");
        out.pass = false;
        return out;
    }
    EnumerationReport homs = enumerate_homs(G, p);
    out.reps_checked = homs.count;
    out.commutation_ok = true;
    for (const auto& rep : homs.reps) {
        for (const auto& c : G.cusps()) {
            Mat2p M = evaluate_word(c.meridian, rep.images, p);
            Mat2p L = evaluate_word(c.longitude, rep.images, p);
            if (!(mat_mul(M, L, p) == mat_mul(L, M, p))) {
                out.commutation_ok = false;
                out.witness = print_rep(G, rep);
                break;
            }
        }
        if (!out.commutation_ok) break;
    }

    out.pass = out.commutation_ok;
    // homological battery for single-cusp knot-like presentations
    if (G.num_cusps() == 1) {
        std::vector<std::vector<long>> lattice;
        for (const auto& r : G.relators()) lattice.push_back(G.abelianization_image(r));
        HomologySummary h = homology_of_quotient(lattice, G.num_generators());
        if (h.free_rank == 1) {
            out.homology_checked = true;
            out.longitude_null_homologous = in_lattice(lattice, G.abelianization_image(G.cusps()[0].longitude));
            std::vector<long> mu = free_part_image(lattice, G.num_generators(),
                                                   G.abelianization_image(G.cusps()[0].meridian));
            out.meridian_generates = mu.size() == 1 && (mu[0] == 1 || mu[0] == -1);
            out.pass = out.pass && out.longitude_null_homologous && out.meridian_generates;
        } else {
            out.notes.push_back("first homology has free rank " + std::to_string(h.free_rank) +
                                "; knot-specific homological checks skipped");
        }
    }
    out.notes.push_back("necessary-condition battery only; a pass does not certify peripheral structure");
    return out;
}

} // namespace avar
