#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/forms.hpp"
#include "cubiq/matrix.hpp"
#include "cubiq/poly.hpp"
#include "cubiq/projective.hpp"

namespace cubiq {

// Canonical point of the plane P^2 a cubic section lives in.
template <class F>
struct P2Point {
    std::array<F, 3> x{};

    P2Point() = default;
    explicit P2Point(std::array<F, 3> coords) : x(std::move(coords)) {
        FieldOps<F>::canonicalize(std::span<F>(x));
        bool all_zero = true;
        for (const F& c : x)
            if (!is_zero(c)) all_zero = false;
        if (all_zero) throw degenerate_error("P2 point needs a nonzero coordinate");
    }
    P2Point(F a, F b, F c)
        : P2Point(std::array<F, 3>{std::move(a), std::move(b), std::move(c)}) {}

    static P2Point of_ints(long a, long b, long c) {
        return P2Point(FieldOps<F>::from_int(a), FieldOps<F>::from_int(b),
                       FieldOps<F>::from_int(c));
    }

    std::string str() const { return detail::join_colon(x); }
    friend bool operator==(const P2Point& a, const P2Point& b) { return a.x == b.x; }
    friend bool operator!=(const P2Point& a, const P2Point& b) { return !(a == b); }
    friend bool operator<(const P2Point& a, const P2Point& b) { return a.str() < b.str(); }
};

// Ternary cubic in plane-internal coordinates, plus the embedding data needed
// to round-trip points with P^3 when the curve arose as a plane section.
template <class F>
struct PlaneCubic {
    static const std::vector<std::array<int, 3>>& exponents() {
        static const auto table = detail::degree3_exponents<3>();
        return table;
    }

    std::array<F, 10> c{};
    // columns of the embedding P^2 -> P^3 (only meaningful when has_embedding)
    std::array<std::array<F, 4>, 3> basis{};
    std::array<F, 4> plane_dual{};
    bool has_embedding = false;

    bool is_zero_form() const {
        for (const F& v : c)
            if (!is_zero(v)) return false;
        return true;
    }

    F eval_raw(const std::array<F, 3>& p) const {
        F acc = FieldOps<F>::from_int(0);
        const auto& exps = exponents();
        for (std::size_t m = 0; m < 10; ++m) {
            if (is_zero(c[m])) continue;
            F term = c[m];
            for (int k = 0; k < 3; ++k)
                for (int e = 0; e < exps[m][static_cast<std::size_t>(k)]; ++e)
                    term = term * p[static_cast<std::size_t>(k)];
            acc = acc + term;
        }
        return acc;
    }

    std::array<F, 3> gradient_raw(const std::array<F, 3>& p) const {
        std::array<F, 3> g{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                           FieldOps<F>::from_int(0)};
        const auto& exps = exponents();
        for (std::size_t m = 0; m < 10; ++m) {
            if (is_zero(c[m])) continue;
            for (std::size_t d = 0; d < 3; ++d) {
                if (exps[m][d] == 0) continue;
                F term = c[m] * FieldOps<F>::from_int(exps[m][d]);
                for (std::size_t k = 0; k < 3; ++k) {
                    int e = exps[m][k] - (k == d ? 1 : 0);
                    for (int t = 0; t < e; ++t) term = term * p[k];
                }
                g[d] = g[d] + term;
            }
        }
        return g;
    }

    bool contains(const P2Point<F>& p) const { return is_zero(eval_raw(p.x)); }

    // Embed a plane-internal point back into P^3.
    ProjPoint<F> embed(const P2Point<F>& p) const {
        std::array<F, 4> out{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                             FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 3; ++j) out[k] = out[k] + basis[j][k] * p.x[j];
        return ProjPoint<F>(std::move(out));
    }

    // Express a P^3 point of the plane in the recorded basis.
    P2Point<F> plane_coords(const ProjPoint<F>& p) const {
        Mat<F> sys(4, 4);
        for (int r = 0; r < 4; ++r) {
            for (int j = 0; j < 3; ++j) sys(r, j) = basis[j][r];
            sys(r, 3) = p.x[static_cast<std::size_t>(r)];
        }
        auto null_basis = sys.kernel();
        if (null_basis.size() != 1 || is_zero(null_basis[0][3]))
            throw degenerate_error("plane_coords: point not on the embedded plane");
        const auto& v = null_basis[0];
        F s = -FieldOps<F>::from_int(1) / v[3];
        return P2Point<F>(v[0] * s, v[1] * s, v[2] * s);
    }
};

// mu_p(C): lowest total degree at p in an affine chart where p is finite.
template <class F>
int multiplicity(const PlaneCubic<F>& curve, const P2Point<F>& p) {
    if (!curve.contains(p)) throw error("multiplicity: point not on the curve");
    // Linear change of coordinates sending (1:0:0) to p: columns p, e_i, e_j
    // where k is the first nonzero coordinate of p and {i,j} the others.
    std::size_t k = 0;
    while (is_zero(p.x[k])) ++k;
    std::array<std::array<F, 3>, 3> cols;
    cols[0] = p.x;
    std::size_t idx = 1;
    for (std::size_t j = 0; j < 3; ++j) {
        if (j == k) continue;
        cols[idx] = {FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                     FieldOps<F>::from_int(0)};
        cols[idx][j] = FieldOps<F>::from_int(1);
        ++idx;
    }
    detail::SparseForm<F, 3> total;
    const auto& exps = PlaneCubic<F>::exponents();
    for (std::size_t m = 0; m < 10; ++m) {
        if (is_zero(curve.c[m])) continue;
        detail::SparseForm<F, 3> term;
        term.emplace(std::array<int, 3>{}, curve.c[m]);
        for (std::size_t v = 0; v < 3; ++v) {
            std::array<F, 3> lin{cols[0][v], cols[1][v], cols[2][v]};
            term = detail::sparse_mul(term,
                                      detail::sparse_pow(detail::sparse_linear(lin), exps[m][v]));
        }
        for (const auto& [e, val] : term) detail::sparse_add(total, e, val);
    }
    int best = 4;
    for (const auto& [e, val] : total) {
        (void)val;
        best = std::min(best, e[1] + e[2]);
    }
    if (best == 4) throw error("multiplicity: curve is identically zero");
    return best;
}

template <class F>
bool is_smooth_point(const PlaneCubic<F>& curve, const P2Point<F>& p) {
    auto g = curve.gradient_raw(p.x);
    for (const F& v : g)
        if (!is_zero(v)) return true;
    return false;
}

namespace detail {

// f(s*x + t*y) for a ternary cubic, coefficients of s^3, s^2 t, s t^2, t^3.
template <class F>
std::array<F, 4> restrict_ternary(const PlaneCubic<F>& curve, const std::array<F, 3>& x,
                                  const std::array<F, 3>& y) {
    std::array<F, 4> out{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                         FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
    const auto& exps = PlaneCubic<F>::exponents();
    for (std::size_t m = 0; m < 10; ++m) {
        if (is_zero(curve.c[m])) continue;
        // product over variables of (s*x_v + t*y_v)^e_v, tracked by t-degree
        std::array<F, 4> acc{curve.c[m], FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                             FieldOps<F>::from_int(0)};
        int deg = 0;
        for (std::size_t v = 0; v < 3; ++v) {
            for (int e = 0; e < exps[m][v]; ++e) {
                std::array<F, 4> next{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                                      FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
                for (int d = 0; d <= deg; ++d) {
                    next[d] = next[d] + acc[d] * x[v];
                    next[d + 1] = next[d + 1] + acc[d] * y[v];
                }
                acc = next;
                ++deg;
            }
        }
        for (int d = 0; d <= 3; ++d) out[d] = out[d] + acc[d];
    }
    return out;
}

}  // namespace detail

// The chord-tangent operation: third intersection of line(x,y) with the
// curve, the tangent line when x == y.
template <class F>
P2Point<F> chord_op(const PlaneCubic<F>& curve, const P2Point<F>& x, const P2Point<F>& y) {
    if (!curve.contains(x) || !curve.contains(y))
        throw error("chord_op: input not on the curve");
    if (!is_smooth_point(curve, x) || !is_smooth_point(curve, y))
        throw singular_point_error("chord_op: singular input point");
    if (x == y) {
        auto g = curve.gradient_raw(x.x);
        Mat<F> m(1, 3);
        for (int k = 0; k < 3; ++k) m(0, k) = g[static_cast<std::size_t>(k)];
        auto null_basis = m.kernel();
        // tangent direction independent of x
        std::array<F, 3> q{};
        bool found = false;
        for (const auto& cand : null_basis) {
            Mat<F> chk(2, 3);
            for (int k = 0; k < 3; ++k) {
                chk(0, k) = x.x[static_cast<std::size_t>(k)];
                chk(1, k) = cand[static_cast<std::size_t>(k)];
            }
            if (chk.rank() == 2) {
                q = {cand[0], cand[1], cand[2]};
                found = true;
                break;
            }
        }
        if (!found) throw error("chord_op: no tangent direction");
        auto rc = detail::restrict_ternary(curve, x.x, q);
        // rc = c2 s t^2 + c3 t^3 (double contact at x)
        if (is_zero(rc[2]) && is_zero(rc[3]))
            throw contained_line_error("chord_op: tangent line lies in the curve");
        if (is_zero(rc[2])) return x;  // flex: tangent meets the curve only at x
        std::array<F, 3> third{};
        for (int k = 0; k < 3; ++k)
            third[static_cast<std::size_t>(k)] =
                rc[3] * x.x[static_cast<std::size_t>(k)] - rc[2] * q[static_cast<std::size_t>(k)];
        return P2Point<F>(std::move(third));
    }
    auto rc = detail::restrict_ternary(curve, x.x, y.x);
    // both on the curve: rc = s t (beta s + gamma t)
    const F& beta = rc[1];
    const F& gamma = rc[2];
    if (is_zero(beta) && is_zero(gamma))
        throw contained_line_error("chord_op: chord lies in the curve");
    if (is_zero(gamma)) return y;
    if (is_zero(beta)) return x;
    std::array<F, 3> third{};
    for (int k = 0; k < 3; ++k)
        third[static_cast<std::size_t>(k)] =
            gamma * x.x[static_cast<std::size_t>(k)] - beta * y.x[static_cast<std::size_t>(k)];
    return P2Point<F>(std::move(third));
}

// x + y := u o (x o y)
template <class F>
P2Point<F> group_add(const PlaneCubic<F>& curve, const P2Point<F>& u, const P2Point<F>& x,
                     const P2Point<F>& y) {
    return chord_op(curve, u, chord_op(curve, x, y));
}

// solves x + z = u via z = x o (u o u)
template <class F>
P2Point<F> group_inverse(const PlaneCubic<F>& curve, const P2Point<F>& u, const P2Point<F>& x) {
    return chord_op(curve, x, chord_op(curve, u, u));
}

template <class F>
P2Point<F> group_sub(const PlaneCubic<F>& curve, const P2Point<F>& u, const P2Point<F>& x,
                     const P2Point<F>& y) {
    return group_add(curve, u, x, group_inverse(curve, u, y));
}

// x o y = (u o u) - x - y
template <class F>
bool check_circ_identity(const PlaneCubic<F>& curve, const P2Point<F>& u, const P2Point<F>& x,
                         const P2Point<F>& y) {
    P2Point<F> lhs = chord_op(curve, x, y);
    P2Point<F> rhs = group_sub(curve, u, group_sub(curve, u, chord_op(curve, u, u), x), y);
    return lhs == rhs;
}

template <class F>
struct SingularPointsResult {
    std::vector<P2Point<F>> points;
    // false when elimination left factors whose roots the working field
    // cannot express (or a positive-dimensional locus was detected)
    bool complete_over_field = true;
};

namespace detail {

// roots in the working field of a polynomial of degree <= 2 (after
// square-free-ing degree collapses are the caller's business)
template <class F>
std::vector<F> low_degree_roots(const UniPoly<F>& p, bool* complete) {
    std::vector<F> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    if (p.degree() == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }
    if (p.degree() == 2) {
        F a = p[2], b = p[1], c = p[0];
        F disc = b * b - FieldOps<F>::from_int(4) * a * c;
        auto s = FieldOps<F>::sqrt_exact(disc);
        if (!s) return roots;
        F two_a = FieldOps<F>::from_int(2) * a;
        roots.push_back((-b + *s) / two_a);
        if (!is_zero(*s)) roots.push_back((-b - *s) / two_a);
        return roots;
    }
    *complete = false;
    return roots;
}

}  // namespace detail

namespace detail {

// Univariate polynomials in var1 whose coefficients sit at each var2-degree;
// the bivariate specialization of one gradient component on a chart.
template <class F>
using BiPoly = std::vector<UniPoly<F>>;

template <class F>
int bipoly_deg2(const BiPoly<F>& rows) {
    int deg = -1;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (!rows[k].is_zero()) deg = static_cast<int>(k);
    return deg;
}

// Sylvester resultant eliminating var2.  Vanishing at a var1 value is
// necessary for the two polynomials to share a var2 root there.
template <class F>
UniPoly<F> resultant_var2(const BiPoly<F>& f, const BiPoly<F>& g) {
    int df = bipoly_deg2(f);
    int dg = bipoly_deg2(g);
    if (df < 0 || dg < 0) return UniPoly<F>();
    if (df == 0) return f[0];
    if (dg == 0) return g[0];
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<UniPoly<F>>> syl(n, std::vector<UniPoly<F>>(n));
    for (int r = 0; r < dg; ++r)
        for (int kk = 0; kk <= df; ++kk)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + kk)] =
                f[static_cast<std::size_t>(df - kk)];
    for (int r = 0; r < df; ++r)
        for (int kk = 0; kk <= dg; ++kk)
            syl[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + kk)] =
                g[static_cast<std::size_t>(dg - kk)];
    auto det = [&](auto&& self, std::vector<std::vector<UniPoly<F>>> m) -> UniPoly<F> {
        std::size_t sz = m.size();
        if (sz == 1) return m[0][0];
        UniPoly<F> acc;
        for (std::size_t col = 0; col < sz; ++col) {
            if (m[0][col].is_zero()) continue;
            std::vector<std::vector<UniPoly<F>>> minor;
            for (std::size_t r = 1; r < sz; ++r) {
                std::vector<UniPoly<F>> row;
                for (std::size_t cc = 0; cc < sz; ++cc)
                    if (cc != col) row.push_back(m[r][cc]);
                minor.push_back(std::move(row));
            }
            UniPoly<F> term = m[0][col] * self(self, std::move(minor));
            if (col % 2)
                acc = acc - term;
            else
                acc = acc + term;
        }
        return acc;
    };
    return det(det, std::move(syl));
}

template <class F>
UniPoly<F> square_free_part(UniPoly<F> p) {
    if (p.degree() < 2) return p;
    std::vector<F> dc;
    for (int k = 1; k <= p.degree(); ++k)
        dc.push_back(p[static_cast<std::size_t>(k)] * FieldOps<F>::from_int(k));
    UniPoly<F> deriv{std::vector<F>(dc)};
    if (deriv.is_zero()) return p;
    auto g = poly_gcd(p, deriv);
    if (g.degree() > 0) return p.divmod(g).first;
    return p;
}

}  // namespace detail

// Field-rational singular points found by chart-wise elimination (two
// resultants per chart).  May be incomplete over the closure; the flag says
// whether the scan was exhaustive even for field-rational points.
template <class F>
SingularPointsResult<F> singular_points_rational(const PlaneCubic<F>& curve) {
    SingularPointsResult<F> out;
    auto emit = [&](const P2Point<F>& cand) {
        auto g = curve.gradient_raw(cand.x);
        for (const F& gv : g)
            if (!is_zero(gv)) return;
        if (!curve.contains(cand)) return;
        for (const auto& p : out.points)
            if (p == cand) return;
        out.points.push_back(cand);
    };
    // Chart k: coordinate k is 1, earlier coordinates 0; later coordinates
    // free.  Every projective point lands in exactly one chart.
    for (int chart = 0; chart < 3; ++chart) {
        std::vector<std::size_t> free_vars;
        for (std::size_t v = static_cast<std::size_t>(chart) + 1; v < 3; ++v)
            free_vars.push_back(v);

        std::vector<detail::BiPoly<F>> partials;
        const auto& exps = PlaneCubic<F>::exponents();
        for (std::size_t d = 0; d < 3; ++d) {
            detail::BiPoly<F> rows;
            auto bump = [&](std::size_t deg2, UniPoly<F> add) {
                if (rows.size() <= deg2) rows.resize(deg2 + 1);
                rows[deg2] = rows[deg2] + add;
            };
            for (std::size_t m = 0; m < 10; ++m) {
                if (is_zero(curve.c[m])) continue;
                auto e = exps[m];
                if (e[d] == 0) continue;
                F coeff = curve.c[m] * FieldOps<F>::from_int(e[d]);
                e[d] -= 1;
                bool dead = false;
                for (int v = 0; v < chart; ++v)
                    if (e[static_cast<std::size_t>(v)] > 0) dead = true;
                if (dead) continue;
                std::size_t d1 = free_vars.size() >= 1 ? static_cast<std::size_t>(e[free_vars[0]]) : 0;
                std::size_t d2 = free_vars.size() >= 2 ? static_cast<std::size_t>(e[free_vars[1]]) : 0;
                std::vector<F> mono(d1 + 1, FieldOps<F>::from_int(0));
                mono[d1] = coeff;
                bump(d2, UniPoly<F>(std::move(mono)));
            }
            partials.push_back(std::move(rows));
        }

        auto make_point = [&](const F& v1, const F& v2) {
            std::array<F, 3> pt{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                                FieldOps<F>::from_int(0)};
            pt[static_cast<std::size_t>(chart)] = FieldOps<F>::from_int(1);
            if (free_vars.size() >= 1) pt[free_vars[0]] = v1;
            if (free_vars.size() >= 2) pt[free_vars[1]] = v2;
            return P2Point<F>(pt[0], pt[1], pt[2]);
        };

        if (free_vars.empty()) {
            emit(make_point(FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)));
            continue;
        }

        if (free_vars.size() == 1) {
            UniPoly<F> common;
            bool first = true;
            for (const auto& rows : partials) {
                UniPoly<F> s = rows.empty() ? UniPoly<F>() : rows[0];
                if (s.is_zero()) continue;
                common = first ? s : poly_gcd(common, s);
                first = false;
            }
            if (first) {
                // all partials vanish on this whole chart line
                out.complete_over_field = false;
                continue;
            }
            for (const F& v1 :
                 detail::low_degree_roots(detail::square_free_part(common),
                                          &out.complete_over_field))
                emit(make_point(v1, FieldOps<F>::from_int(0)));
            continue;
        }

        UniPoly<F> cand_poly;
        bool all_zero = true;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                auto res = detail::resultant_var2(partials[static_cast<std::size_t>(a)],
                                                  partials[static_cast<std::size_t>(b)]);
                if (res.is_zero()) continue;
                cand_poly = all_zero ? res : poly_gcd(cand_poly, res);
                all_zero = false;
            }
        if (all_zero) {
            out.complete_over_field = false;
            continue;
        }
        for (const F& v1 : detail::low_degree_roots(detail::square_free_part(cand_poly),
                                                    &out.complete_over_field)) {
            UniPoly<F> common;
            bool first = true;
            bool positive_dim = true;
            for (const auto& rows : partials) {
                std::vector<F> spec;
                for (const auto& rp : rows) spec.push_back(rp.eval(v1));
                UniPoly<F> s{std::vector<F>(spec)};
                if (s.is_zero()) continue;
                positive_dim = false;
                common = first ? s : poly_gcd(common, s);
                first = false;
            }
            if (positive_dim) {
                out.complete_over_field = false;
                continue;
            }
            if (common.degree() == 0) continue;
            for (const F& v2 : detail::low_degree_roots(common, &out.complete_over_field))
                emit(make_point(v1, v2));
        }
    }
    return out;
}

// sum of multiplicities of two distinct points is at most the degree (3)
template <class F>
bool mult_pair_bound_check(const PlaneCubic<F>& curve, const P2Point<F>& a, const P2Point<F>& b) {
    if (a == b) throw error("mult_pair_bound_check: points must be distinct");
    return multiplicity(curve, a) + multiplicity(curve, b) <= 3;
}

template <class F>
bool mult_triple_bound_check(const PlaneCubic<F>& curve, const P2Point<F>& a1,
                             const P2Point<F>& a2, const P2Point<F>& a3) {
    return mult_pair_bound_check(curve, a1, a2) && mult_pair_bound_check(curve, a1, a3) &&
           mult_pair_bound_check(curve, a2, a3);
}

}  // namespace cubiq
