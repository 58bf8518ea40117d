#include "avar/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace avar {

namespace {

using Point = Monomial;

long long cross2(const Point& o, const Point& a, const Point& b) {
    return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> hull_2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && cross2(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross2(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower; // counterclockwise, lex-min first
}

// Exact feasibility of v in conv(pts) via phase-1 simplex with Bland's rule.
bool in_convex_hull(const Point& v, const std::vector<Point>& pts) {
    std::size_t d = v.size(), k = pts.size();
    if (k == 0) return false;
    std::size_t rows = d + 1, cols = k + rows; // lambdas + artificials
    std::vector<std::vector<mpq_class>> T(rows, std::vector<mpq_class>(cols + 1, 0));
    std::vector<mpq_class> rhs(rows);
    for (std::size_t r = 0; r < d; ++r) rhs[r] = v[r];
    rhs[d] = 1;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < k; ++j) T[r][j] = r < d ? mpq_class(pts[j][r]) : mpq_class(1);
        if (rhs[r] < 0) {
            for (std::size_t j = 0; j < k; ++j) T[r][j] = -T[r][j];
            rhs[r] = -rhs[r];
        }
        T[r][k + r] = 1;
        T[r][cols] = rhs[r];
    }
    std::vector<std::size_t> basic(rows);
    for (std::size_t r = 0; r < rows; ++r) basic[r] = k + r;
    // objective: minimize sum of artificials -> reduced costs
    std::vector<mpq_class> z(cols + 1, 0);
    for (std::size_t j = 0; j <= cols; ++j)
        for (std::size_t r = 0; r < rows; ++r) z[j] += T[r][j];
    for (std::size_t r = 0; r < rows; ++r) z[k + r] = 0;

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (z[j] > 0) {
                enter = j;
                break; // Bland: smallest index
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (T[r][enter] > 0) {
                mpq_class ratio = T[r][cols] / T[r][enter];
                if (leave == rows || ratio < best || (ratio == best && basic[r] < basic[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave == rows) break; // unbounded (should not happen in phase 1)
        mpq_class piv = T[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave) continue;
            mpq_class f = T[r][enter];
            if (f != 0)
                for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
        }
        mpq_class fz = z[enter];
        if (fz != 0)
            for (std::size_t j = 0; j <= cols; ++j) z[j] -= fz * T[leave][j];
        basic[leave] = enter;
    }
    return z[cols] == 0; // objective value == 0 -> feasible
}

std::vector<Point> hull_nd_vertices(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
    }
    return verts;
}

long long llgcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Determinant of a small integer matrix (exact, fraction-free Bareiss).
__int128 int_det(std::vector<std::vector<__int128>> M) {
    std::size_t n = M.size();
    __int128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && M[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(M[s], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

} // namespace

NewtonPolytope newton_polytope(const LaurentPolynomial& f, const std::vector<std::size_t>& axes) {
    if (f.is_zero()) throw InputError("Newton polytope of the zero polynomial");
    std::vector<Point> pts;
    for (const auto& t : f.terms()) {
        Point p(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) p[i] = t.mono[axes[i]];
        pts.push_back(std::move(p));
    }
    NewtonPolytope P;
    P.dim = axes.size();
    if (axes.size() == 2) P.vertices = hull_2d(std::move(pts));
    else P.vertices = hull_nd_vertices(std::move(pts));
    return P;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
    std::vector<std::size_t> axes(f.ring()->nvars());
    std::iota(axes.begin(), axes.end(), 0);
    return newton_polytope(f, axes);
}

NewtonPolytope minkowski_sum(const NewtonPolytope& P, const NewtonPolytope& Q) {
    if (P.dim != Q.dim) throw InputError("Minkowski sum of polytopes of different dimension");
    std::vector<Point> sums;
    for (const auto& p : P.vertices)
        for (const auto& q : Q.vertices) sums.push_back(mono_mul(p, q));
    NewtonPolytope R;
    R.dim = P.dim;
    if (P.dim == 2) R.vertices = hull_2d(std::move(sums));
    else R.vertices = hull_nd_vertices(std::move(sums));
    return R;
}

Slope Slope::of(long long p, long long q) {
    if (p == 0 && q == 0) throw InputError("slope 0/0");
    if (q == 0) return infinity();
    long long g = llgcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

std::string Slope::to_string() const {
    if (is_infinite()) return "inf";
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

SlopeSet polygon_slopes(const NewtonPolytope& P) {
    SlopeSet out;
    if (P.dim != 2) throw InputError("polygon slopes need a 2D polytope");
    const auto& v = P.vertices;
    if (v.size() < 2) return out;
    std::size_t n = v.size();
    std::size_t edges = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        long long dl = b[0] - a[0], dm = b[1] - a[1];
        out.insert(Slope::of(dm, dl)); // slope p/q with (q,p) = (dl, dm)
    }
    return out;
}

TropicalDirection TropicalDirection::of(std::vector<long long> raw) {
    long long g = 0;
    for (auto x : raw) g = llgcd(g, x);
    if (g == 0) throw InputError("tropical direction must be a nonzero vector");
    for (auto& x : raw) x /= g;
    return {std::move(raw)};
}

std::string TropicalDirection::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string SlopeCoordinates::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

std::optional<Slope> SlopeCoordinates::cusp_slope(std::size_t i) const {
    long long p = c.at(2 * i), q = c.at(2 * i + 1);
    if (p == 0 && q == 0) return std::nullopt;
    return Slope::of(p, q);
}

SlopeCoordinates slope_coordinates(const TropicalDirection& zeta, std::size_t cusps) {
    if (zeta.v.size() != 2 * cusps) throw InputError("direction dimension must be twice the cusp count");
    std::vector<long long> w(zeta.v.size());
    for (std::size_t i = 0; i < cusps; ++i) {
        // block rotation (x, y) -> (y, -x)
        w[2 * i] = zeta.v[2 * i + 1];
        w[2 * i + 1] = -zeta.v[2 * i];
    }
    long long g = 0;
    for (auto x : w) g = llgcd(g, x);
    if (g == 0) throw InputError("slope coordinates of the zero vector");
    for (auto& x : w) x /= g;
    for (std::size_t i = 0; i < cusps; ++i) {
        long long first = w[2 * i] != 0 ? w[2 * i] : w[2 * i + 1];
        if (first < 0) {
            w[2 * i] = -w[2 * i];
            w[2 * i + 1] = -w[2 * i + 1];
        }
    }
    return {std::move(w)};
}

bool tropical_membership(const PolynomialIdeal& I, const TropicalDirection& xi, const GroebnerBudget& budget) {
    if (xi.v.size() != I.ring()->nvars()) throw InputError("direction arity differs from ring arity");
    PolynomialIdeal J = initial_form_ideal(I, xi.v, budget);
    if (contains_monomial(J, budget)) return false;
    if (!I.is_zero_ideal()) {
        GroebnerBasis G = buchberger(I, MonomialOrder::grevlex(), budget);
        if (G.is_unit()) return false;
    }
    return true;
}

std::vector<TropicalDirection> default_probe_directions(const PolynomialIdeal& I) {
    std::set<std::vector<long long>> seen;
    std::size_t d = I.ring()->nvars();
    for (const auto& g : I.generators()) {
        NewtonPolytope P = newton_polytope(g);
        if (d == 2) {
            const auto& v = P.vertices;
            if (v.size() < 2) continue;
            std::size_t edges = v.size() == 2 ? 1 : v.size();
            for (std::size_t i = 0; i < edges; ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % v.size()];
                long long dx = b[0] - a[0], dy = b[1] - a[1];
                long long g2 = llgcd(dx, dy);
                std::vector<long long> n = {dy / g2, -dx / g2};
                seen.insert(n);
                seen.insert({-n[0], -n[1]});
            }
        } else {
            // facet normals from (d-1)-subsets of vertices
            const auto& v = P.vertices;
            if (v.size() < d) continue;
            std::vector<std::size_t> idx(d - 1);
            std::vector<std::size_t> pool(v.size());
            std::iota(pool.begin(), pool.end(), 0);
            std::vector<std::size_t> comb;
            auto emit = [&](const std::vector<std::size_t>& sel) {
                // rows = differences from the first selected point
                std::vector<std::vector<__int128>> rowsbase;
                for (std::size_t r = 1; r < sel.size(); ++r) {
                    std::vector<__int128> row(d);
                    for (std::size_t c = 0; c < d; ++c) row[c] = v[sel[r]][c] - v[sel[0]][c];
                    rowsbase.push_back(std::move(row));
                }
                // generalized cross product: n_i = (-1)^i det(minor_i)
                std::vector<long long> normal(d, 0);
                bool nonzero = false;
                for (std::size_t i = 0; i < d; ++i) {
                    std::vector<std::vector<__int128>> minor;
                    for (const auto& row : rowsbase) {
                        std::vector<__int128> r2;
                        for (std::size_t c = 0; c < d; ++c)
                            if (c != i) r2.push_back(row[c]);
                        minor.push_back(std::move(r2));
                    }
                    __int128 det = minor.empty() ? 1 : int_det(minor);
                    long long dv = static_cast<long long>(det);
                    normal[i] = (i % 2 == 0) ? dv : -dv;
                    if (dv != 0) nonzero = true;
                }
                if (!nonzero) return;
                // one-sidedness over all vertices
                bool pos = false, neg = false;
                for (const auto& q : v) {
                    __int128 s = 0;
                    for (std::size_t c = 0; c < d; ++c)
                        s += static_cast<__int128>(normal[c]) * (q[c] - v[sel[0]][c]);
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                }
                if (pos && neg) return;
                long long g2 = 0;
                for (auto x : normal) g2 = llgcd(g2, x);
                for (auto& x : normal) x /= g2;
                seen.insert(normal);
                std::vector<long long> m = normal;
                for (auto& x : m) x = -x;
                seen.insert(m);
            };
            // iterate (d-1)-combinations
            std::vector<std::size_t> sel(d - 1);
            auto combo = [&](auto&& self, std::size_t start, std::size_t k) -> void {
                if (k == d - 1) {
                    emit(sel);
                    return;
                }
                for (std::size_t i = start; i < v.size(); ++i) {
                    sel[k] = i;
                    self(self, i + 1, k + 1);
                }
            };
            combo(combo, 0, 0);
        }
    }
    std::vector<TropicalDirection> out;
    for (const auto& n : seen) out.push_back({n});
    return out;
}

std::vector<ProbeResult> logarithmic_limit_probe(const PolynomialIdeal& I,
                                                 std::vector<TropicalDirection> candidates,
                                                 const GroebnerBudget& budget) {
    if (I.is_zero_ideal()) throw InputError("logarithmic limit probe requires a proper nonzero ideal");
    if (candidates.empty()) throw InputError("logarithmic limit probe needs at least one candidate direction");
    std::sort(candidates.begin(), candidates.end());
    std::vector<ProbeResult> out;
    for (const auto& c : candidates) {
        ProbeResult r;
        r.direction = c;
        try {
            r.member = tropical_membership(I, c, budget);
        } catch (const BudgetError& e) {
            r.budget_exceeded = true;
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string newton_polygon_svg(const LaurentPolynomial& f) {
    const RingPtr& R = f.ring();
    if (R->nvars() != 2) throw InputError("SVG rendering expects a polynomial in exactly two variables (l, m)");
    std::vector<std::size_t> axes = {0, 1};
    // coordinate order (l-exp, m-exp): find variables named l/m if present
    int li = R->find_var("l"), mi = R->find_var("m");
    if (li >= 0 && mi >= 0) axes = {static_cast<std::size_t>(li), static_cast<std::size_t>(mi)};
    NewtonPolytope P = newton_polytope(f, axes);
    SlopeSet slopes = polygon_slopes(P);

    // plot x = m-exponent, y = l-exponent (classical picture), integer units
    long minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    std::vector<std::pair<long, long>> support;
    for (const auto& t : f.terms()) {
        long x = t.mono[axes[1]], y = t.mono[axes[0]];
        support.push_back({x, y});
        if (first || x < minx) minx = x;
        if (first || x > maxx) maxx = x;
        if (first || y < miny) miny = y;
        if (first || y > maxy) maxy = y;
        first = false;
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const long U = 48, PAD = 36;
    auto X = [&](long x) { return PAD + (x - minx) * U; };
    auto Y = [&](long y) { return PAD + (maxy - y) * U; };
    long W = 2 * PAD + (maxx - minx) * U, H = 2 * PAD + (maxy - miny) * U;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // hull polyline
    if (P.vertices.size() >= 2) {
        s << "<polygon points=\"";
        for (std::size_t i = 0; i < P.vertices.size(); ++i) {
            if (i) s << " ";
            s << X(P.vertices[i][1]) << "," << Y(P.vertices[i][0]);
        }
        s << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        std::size_t n = P.vertices.size();
        std::size_t edges = n == 2 ? 1 : n;
        for (std::size_t i = 0; i < edges; ++i) {
            const auto& a = P.vertices[i];
            const auto& b = P.vertices[(i + 1) % n];
            Slope sl = Slope::of(b[1] - a[1], b[0] - a[0]);
            long mx = (X(a[1]) + X(b[1])) / 2, my = (Y(a[0]) + Y(b[0])) / 2;
            s << "<text x=\"" << mx + 6 << "\" y=\"" << my - 6 << "\" font-size=\"14\">" << sl.to_string()
              << "</text>\n";
        }
    }
    for (const auto& [x, y] : support)
        s << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"4\" fill=\"black\"/>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace avar
