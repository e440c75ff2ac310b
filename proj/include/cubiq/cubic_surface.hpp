#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/forms.hpp"
#include "cubiq/matrix.hpp"
#include "cubiq/plane_cubic.hpp"
#include "cubiq/poly.hpp"
#include "cubiq/projective.hpp"

namespace cubiq {

// Homogeneous cubic form in (x, y, z, w): 20 monomials in fixed lex order.
template <class F>
struct CubicForm {
    static const std::vector<std::array<int, 4>>& exponents() {
        static const auto table = detail::degree3_exponents<4>();
        return table;
    }

    static std::size_t monomial_index(int i, int j, int k, int l) {
        const auto& exps = exponents();
        for (std::size_t m = 0; m < exps.size(); ++m)
            if (exps[m][0] == i && exps[m][1] == j && exps[m][2] == k && exps[m][3] == l)
                return m;
        throw error("monomial exponents must be nonnegative and sum to 3");
    }

    std::array<F, 20> c{};

    void set_term(int i, int j, int k, int l, F v) {
        c[monomial_index(i, j, k, l)] = std::move(v);
    }
    const F& term(int i, int j, int k, int l) const { return c[monomial_index(i, j, k, l)]; }

    bool is_zero_form() const {
        for (const F& v : c)
            if (!is_zero(v)) return false;
        return true;
    }

    F eval_raw(const std::array<F, 4>& p) const {
        F acc = FieldOps<F>::from_int(0);
        const auto& exps = exponents();
        for (std::size_t m = 0; m < 20; ++m) {
            if (is_zero(c[m])) continue;
            F term = c[m];
            for (std::size_t k = 0; k < 4; ++k)
                for (int e = 0; e < exps[m][k]; ++e) term = term * p[k];
            acc = acc + term;
        }
        return acc;
    }

    std::array<F, 4> gradient_raw(const std::array<F, 4>& p) const {
        std::array<F, 4> g{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                           FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
        const auto& exps = exponents();
        for (std::size_t m = 0; m < 20; ++m) {
            if (is_zero(c[m])) continue;
            for (std::size_t d = 0; d < 4; ++d) {
                if (exps[m][d] == 0) continue;
                F term = c[m] * FieldOps<F>::from_int(exps[m][d]);
                for (std::size_t k = 0; k < 4; ++k) {
                    int e = exps[m][k] - (k == d ? 1 : 0);
                    for (int t = 0; t < e; ++t) term = term * p[k];
                }
                g[d] = g[d] + term;
            }
        }
        return g;
    }
};

struct SmoothnessCertificate {
    enum class Kind { asserted, sampled_over_primes };
    Kind kind = Kind::asserted;
    std::string detail;
};

template <class F>
struct CubicSurface {
    CubicForm<F> form;
    std::string name = "custom";
    SmoothnessCertificate certificate;

    bool contains(const ProjPoint<F>& p) const { return is_zero(form.eval_raw(p.x)); }
};

// f restricted to the line s*p + t*q: coefficients of s^3, s^2 t, s t^2, t^3.
// When p and q both lie on the surface this is s*t*(beta*s + gamma*t).
template <class F>
struct RestrictedCubic {
    std::array<F, 4> c{};

    const F& beta() const { return c[1]; }
    const F& gamma() const { return c[2]; }
    bool identically_zero() const {
        for (const F& v : c)
            if (!is_zero(v)) return false;
        return true;
    }
};

template <class F>
RestrictedCubic<F> restrict_raw(const CubicSurface<F>& s, const std::array<F, 4>& p,
                                const std::array<F, 4>& q) {
    RestrictedCubic<F> out;
    for (F& v : out.c) v = FieldOps<F>::from_int(0);
    const auto& exps = CubicForm<F>::exponents();
    for (std::size_t m = 0; m < 20; ++m) {
        if (is_zero(s.form.c[m])) continue;
        std::array<F, 4> acc{s.form.c[m], FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                             FieldOps<F>::from_int(0)};
        int deg = 0;
        for (std::size_t v = 0; v < 4; ++v) {
            for (int e = 0; e < exps[m][v]; ++e) {
                std::array<F, 4> next{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                                      FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
                for (int d = 0; d <= deg; ++d) {
                    next[d] = next[d] + acc[d] * p[v];
                    next[d + 1] = next[d + 1] + acc[d] * q[v];
                }
                acc = next;
                ++deg;
            }
        }
        for (int d = 0; d <= 3; ++d) out.c[d] = out.c[d] + acc[d];
    }
    return out;
}

template <class F>
RestrictedCubic<F> restrict_to_line(const CubicSurface<F>& s, const ProjPoint<F>& p,
                                    const ProjPoint<F>& q) {
    if (p == q) throw degenerate_error("restrict_to_line: coincident points");
    return restrict_raw(s, p.x, q.x);
}

template <class F>
bool line_in_surface(const CubicSurface<F>& s, const ProjPoint<F>& p, const ProjPoint<F>& q) {
    if (p == q) throw degenerate_error("line_in_surface: coincident points");
    return restrict_raw(s, p.x, q.x).identically_zero();
}

// Third point of intersection (counting multiplicity) of line(p, q) with the
// surface.  Tangency returns the tangent point, matching the divisor
// semantics of the Geiser involution.
template <class F>
ProjPoint<F> third_intersection(const CubicSurface<F>& s, const ProjPoint<F>& p,
                                const ProjPoint<F>& q) {
    if (p == q) throw degenerate_error("third_intersection: coincident points");
    if (!s.contains(p) || !s.contains(q))
        throw error("third_intersection: both points must lie on the surface");
    auto rc = restrict_raw(s, p.x, q.x);
    const F& beta = rc.beta();
    const F& gamma = rc.gamma();
    if (is_zero(beta) && is_zero(gamma))
        throw contained_line_error("third_intersection: line lies in the surface");
    if (is_zero(gamma)) return q;  // line tangent to S at q
    if (is_zero(beta)) return p;   // line tangent to S at p
    std::array<F, 4> third{};
    for (std::size_t k = 0; k < 4; ++k) third[k] = gamma * p.x[k] - beta * q.x[k];
    return ProjPoint<F>(std::move(third));
}

template <class F>
std::array<F, 4> gradient(const CubicSurface<F>& s, const ProjPoint<F>& p) {
    return s.form.gradient_raw(p.x);
}

template <class F>
bool is_singular_point(const CubicSurface<F>& s, const ProjPoint<F>& p) {
    for (const F& v : gradient(s, p))
        if (!is_zero(v)) return false;
    return true;
}

template <class F>
PlaneP3<F> tangent_plane(const CubicSurface<F>& s, const ProjPoint<F>& p) {
    auto g = gradient(s, p);
    bool all_zero = true;
    for (const F& v : g)
        if (!is_zero(v)) all_zero = false;
    if (all_zero) throw singular_point_error("tangent_plane: singular point");
    return PlaneP3<F>(std::move(g));
}

// Result of the tangent-pencil scan for lines through a point inside the
// surface.  A line through p in S must lie in the tangent plane; the pencil
// of such directions is parametrised by u with q(u) = A + u*B, plus the
// extra direction B at u = infinity.  The coefficient conditions become
// G2 (degree <= 2) and G3 (degree <= 3); common roots over the closure are
// detected by the gcd, field-rational roots are returned as witnesses.
template <class F>
struct LinesThroughPoint {
    bool is_good = false;
    UniPoly<F> g2, g3;
    UniPoly<F> gcd;          // monic gcd of (g2, g3); constant iff no affine root
    bool line_at_infinity = false;
    int closure_line_count = 0;  // roots over the closure, with multiplicity in gcd
    std::vector<ProjPoint<F>> witness_directions;
    bool witnesses_complete = true;
    std::array<F, 4> chart_a{}, chart_b{};
};

template <class F>
LinesThroughPoint<F> lines_through_point(const CubicSurface<F>& s, const ProjPoint<F>& p) {
    if (!s.contains(p)) throw error("lines_through_point: point not on the surface");
    auto n = gradient(s, p);
    bool all_zero = true;
    for (const F& v : n)
        if (!is_zero(v)) all_zero = false;
    if (all_zero) throw singular_point_error("lines_through_point: singular point");

    // tangent directions: kernel of the gradient row, spanned by {p, A, B}
    Mat<F> row(1, 4);
    for (std::size_t k = 0; k < 4; ++k) row(0, k) = n[k];
    auto kern = row.kernel();  // 3 vectors containing p's direction
    LinesThroughPoint<F> out;
    bool chart_found = false;
    for (std::size_t i = 0; i < kern.size() && !chart_found; ++i)
        for (std::size_t j = i + 1; j < kern.size() && !chart_found; ++j) {
            Mat<F> chk(3, 4);
            for (std::size_t k = 0; k < 4; ++k) {
                chk(0, k) = p.x[k];
                chk(1, k) = kern[i][k];
                chk(2, k) = kern[j][k];
            }
            if (chk.rank() == 3) {
                for (std::size_t k = 0; k < 4; ++k) {
                    out.chart_a[k] = kern[i][k];
                    out.chart_b[k] = kern[j][k];
                }
                chart_found = true;
            }
        }
    if (!chart_found) throw error("lines_through_point: no tangent chart");

    auto dir_at = [&](const F& u) {
        std::array<F, 4> q;
        for (std::size_t k = 0; k < 4; ++k) q[k] = out.chart_a[k] + u * out.chart_b[k];
        return q;
    };
    // G2 by interpolation at 3 nodes, G3 at 4 nodes (exact, char 0)
    std::vector<std::pair<F, F>> s2, s3;
    for (long node = 0; node < 4; ++node) {
        F u = FieldOps<F>::from_int(node);
        auto rc = restrict_raw(s, p.x, dir_at(u));
        if (node < 3) s2.emplace_back(u, rc.c[2]);
        s3.emplace_back(u, rc.c[3]);
    }
    out.g2 = poly_interpolate(s2);
    out.g3 = poly_interpolate(s3);

    auto rc_inf = restrict_raw(s, p.x, out.chart_b);
    out.line_at_infinity = is_zero(rc_inf.c[2]) && is_zero(rc_inf.c[3]);

    if (out.g2.is_zero() && out.g3.is_zero())
        throw degenerate_surface_error(
            "lines_through_point: whole tangent pencil lies in the surface");

    out.gcd = poly_gcd(out.g2, out.g3);
    out.closure_line_count = std::max(out.gcd.degree(), 0) + (out.line_at_infinity ? 1 : 0);
    out.is_good = out.closure_line_count == 0;

    // field-rational witnesses
    if (out.line_at_infinity)
        out.witness_directions.push_back(ProjPoint<F>(out.chart_b));
    if (out.gcd.degree() >= 1) {
        for (const F& u : detail::low_degree_roots(out.gcd, &out.witnesses_complete))
            out.witness_directions.push_back(ProjPoint<F>(dir_at(u)));
    }
    return out;
}

// Good point: on no line contained in the surface.  Singular points and
// points whose whole tangent pencil degenerates are never good.
template <class F>
bool is_good(const CubicSurface<F>& s, const ProjPoint<F>& p) {
    if (is_singular_point(s, p)) return false;
    try {
        return lines_through_point(s, p).is_good;
    } catch (const degenerate_surface_error&) {
        return false;
    }
}

// Section of the surface by a plane as a ternary cubic in plane-internal
// coordinates; the substitution basis is recorded for round-tripping points.
template <class F>
PlaneCubic<F> plane_section(const CubicSurface<F>& s, const PlaneP3<F>& pi) {
    std::size_t pivot = 0;
    while (pivot < 4 && is_zero(pi.dual[pivot])) ++pivot;
    PlaneCubic<F> out;
    out.has_embedding = true;
    out.plane_dual = pi.dual;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        std::array<F, 4> b{FieldOps<F>::from_int(0), FieldOps<F>::from_int(0),
                           FieldOps<F>::from_int(0), FieldOps<F>::from_int(0)};
        b[j] = FieldOps<F>::from_int(1);
        b[pivot] = -pi.dual[j] / pi.dual[pivot];
        out.basis[idx++] = b;
    }

    detail::SparseForm<F, 3> total;
    const auto& exps = CubicForm<F>::exponents();
    for (std::size_t m = 0; m < 20; ++m) {
        if (is_zero(s.form.c[m])) continue;
        detail::SparseForm<F, 3> term;
        term.emplace(std::array<int, 3>{}, s.form.c[m]);
        for (std::size_t v = 0; v < 4; ++v) {
            std::array<F, 3> lin{out.basis[0][v], out.basis[1][v], out.basis[2][v]};
            term = detail::sparse_mul(term,
                                      detail::sparse_pow(detail::sparse_linear(lin), exps[m][v]));
        }
        for (const auto& [e, val] : term) detail::sparse_add(total, e, val);
    }
    const auto& texps = PlaneCubic<F>::exponents();
    for (std::size_t m = 0; m < 10; ++m) {
        auto it = total.find(texps[m]);
        out.c[m] = it == total.end() ? FieldOps<F>::from_int(0) : it->second;
    }
    if (out.is_zero_form())
        throw plane_in_surface_error("plane_section: the plane lies in the surface");
    return out;
}

// C_a = S intersect T_a(S) with the base point expressed in section coords.
template <class F>
struct TangentSection {
    PlaneCubic<F> curve;
    P2Point<F> center;
};

template <class F>
TangentSection<F> tangent_section(const CubicSurface<F>& s, const ProjPoint<F>& a) {
    auto pi = tangent_plane(s, a);
    auto curve = plane_section(s, pi);
    return {curve, curve.plane_coords(a)};
}

struct SmoothScanEntry {
    std::int64_t prime = 0;
    bool clean = false;
    std::array<std::int64_t, 4> witness{};  // a singular point mod p when !clean
};

struct SmoothScanReport {
    std::vector<SmoothScanEntry> entries;
    bool all_clean() const {
        for (const auto& e : entries)
            if (!e.clean) return false;
        return true;
    }
};

// Brute-force scan of P^3(F_p) for common zeros of f and grad f.  Evidence
// only: a clean scan over several primes is recorded as a sampled
// certificate, never as a proof.
inline SmoothScanReport check_smooth_mod_primes(const CubicSurface<Rat>& s,
                                                const std::vector<std::int64_t>& primes,
                                                std::int64_t max_prime = 101) {
    SmoothScanReport report;
    // clear denominators once
    Int l = 1;
    for (const Rat& v : s.form.c)
        if (v != 0) l = lcm(l, denominator(v));
    std::array<Int, 20> ic;
    for (std::size_t m = 0; m < 20; ++m) ic[m] = numerator(s.form.c[m]) * (l / denominator(s.form.c[m]));

    const auto& exps = CubicForm<Rat>::exponents();
    for (std::int64_t p : primes) {
        if (p < 2 || p > max_prime)
            throw scan_refused_error("prime " + std::to_string(p) + " outside the desk-scan bound");
        if (l % p == 0)
            throw scan_refused_error("prime " + std::to_string(p) +
                                     " divides a fixture denominator");
        std::array<std::int64_t, 20> cp;
        for (std::size_t m = 0; m < 20; ++m) {
            Int r = ic[m] % p;
            if (r < 0) r += p;
            cp[m] = static_cast<std::int64_t>(r);
        }
        SmoothScanEntry entry;
        entry.prime = p;
        entry.clean = true;
        auto eval_all = [&](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
            std::array<std::int64_t, 4> pt{x, y, z, w};
            auto powmod = [&](std::int64_t base, int e) {
                std::int64_t r = 1;
                for (int k = 0; k < e; ++k) r = r * base % p;
                return r;
            };
            std::int64_t f = 0;
            std::array<std::int64_t, 4> g{0, 0, 0, 0};
            for (std::size_t m = 0; m < 20; ++m) {
                if (cp[m] == 0) continue;
                std::int64_t mono = cp[m];
                for (std::size_t k = 0; k < 4; ++k) mono = mono * powmod(pt[k], exps[m][k]) % p;
                f = (f + mono) % p;
                for (std::size_t d = 0; d < 4; ++d) {
                    if (exps[m][d] == 0) continue;
                    std::int64_t part = cp[m] * exps[m][d] % p;
                    for (std::size_t k = 0; k < 4; ++k)
                        part = part * powmod(pt[k], exps[m][k] - (k == d ? 1 : 0)) % p;
                    g[d] = (g[d] + part) % p;
                }
            }
            return f == 0 && g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0;
        };
        // canonical representatives of P^3(F_p)
        auto scan = [&](auto&& fn) {
            for (std::int64_t y = 0; y < p && entry.clean; ++y)
                for (std::int64_t z = 0; z < p && entry.clean; ++z)
                    for (std::int64_t w = 0; w < p && entry.clean; ++w) fn(1, y, z, w);
            for (std::int64_t z = 0; z < p && entry.clean; ++z)
                for (std::int64_t w = 0; w < p && entry.clean; ++w) fn(0, 1, z, w);
            for (std::int64_t w = 0; w < p && entry.clean; ++w) fn(0, 0, 1, w);
            if (entry.clean) fn(0, 0, 0, 1);
        };
        scan([&](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
            if (eval_all(x, y, z, w)) {
                entry.clean = false;
                entry.witness = {x, y, z, w};
            }
        });
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace cubiq
