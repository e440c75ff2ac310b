#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "cubiq/errors.hpp"
#include "cubiq/scalar.hpp"

namespace cubiq {

namespace detail {

template <class F, std::size_t N>
std::string join_colon(const std::array<F, N>& v) {
    std::string s;
    for (std::size_t k = 0; k < N; ++k) {
        if (k) s += ':';
        s += FieldOps<F>::str(v[k]);
    }
    return s;
}

template <class F, std::size_t N>
std::array<F, N> parse_colon(const std::string& s) {
    std::array<F, N> out;
    std::stringstream ss(s);
    std::string tok;
    std::size_t k = 0;
    while (std::getline(ss, tok, ':')) {
        if (k >= N) throw parse_error("too many coordinates in '" + s + "'");
        out[k++] = FieldOps<F>::parse(tok);
    }
    if (k != N) throw parse_error("expected " + std::to_string(N) + " coordinates in '" + s + "'");
    return out;
}

}  // namespace detail

// A point of P^3 in canonical form: equal projective points compare equal
// coordinate-wise (bit-identical serialization).
template <class F>
struct ProjPoint {
    std::array<F, 4> x{};

    ProjPoint() = default;
    explicit ProjPoint(std::array<F, 4> coords) : x(std::move(coords)) {
        FieldOps<F>::canonicalize(std::span<F>(x));
        bool all_zero = true;
        for (const F& c : x)
            if (!is_zero(c)) all_zero = false;
        if (all_zero) throw degenerate_error("projective point needs a nonzero coordinate");
    }
    ProjPoint(F a, F b, F c, F d)
        : ProjPoint(std::array<F, 4>{std::move(a), std::move(b), std::move(c), std::move(d)}) {}

    static ProjPoint of_ints(long a, long b, long c, long d) {
        return ProjPoint(FieldOps<F>::from_int(a), FieldOps<F>::from_int(b),
                         FieldOps<F>::from_int(c), FieldOps<F>::from_int(d));
    }
    static ProjPoint parse(const std::string& s) {
        return ProjPoint(detail::parse_colon<F, 4>(s));
    }

    std::string str() const { return detail::join_colon(x); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.str() < b.str(); }
    friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
        return os << p.str();
    }
};

// Pluecker coordinates (p01,p02,p03,p12,p13,p23) in canonical form; the
// canonical key makes line identity independent of the generating pair.
template <class F>
struct LineP3 {
    std::array<F, 6> p{};

    LineP3() = default;
    explicit LineP3(std::array<F, 6> pl) : p(std::move(pl)) {
        FieldOps<F>::canonicalize(std::span<F>(p));
    }

    std::string key() const { return detail::join_colon(p); }

    // p01*p23 - p02*p13 + p03*p12
    F pluecker_relation() const { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

    friend bool operator==(const LineP3& a, const LineP3& b) { return a.p == b.p; }
    friend bool operator!=(const LineP3& a, const LineP3& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const LineP3& l) { return os << l.key(); }
};

// A plane as its canonical dual vector; p lies on the plane iff dual.x = 0.
template <class F>
struct PlaneP3 {
    std::array<F, 4> dual{};

    PlaneP3() = default;
    explicit PlaneP3(std::array<F, 4> d) : dual(std::move(d)) {
        FieldOps<F>::canonicalize(std::span<F>(dual));
        bool all_zero = true;
        for (const F& c : dual)
            if (!is_zero(c)) all_zero = false;
        if (all_zero) throw degenerate_error("plane needs a nonzero dual coordinate");
    }

    std::string key() const { return detail::join_colon(dual); }
    static PlaneP3 parse(const std::string& s) {
        return PlaneP3(detail::parse_colon<F, 4>(s));
    }

    friend bool operator==(const PlaneP3& a, const PlaneP3& b) { return a.dual == b.dual; }
    friend bool operator!=(const PlaneP3& a, const PlaneP3& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const PlaneP3& pl) {
        return os << pl.key();
    }
};

namespace detail {

// Raw (non-canonical) Pluecker join of two coordinate vectors.
template <class F>
std::array<F, 6> join_raw(const std::array<F, 4>& a, const std::array<F, 4>& b) {
    return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[0] * b[3] - a[3] * b[0],
            a[1] * b[2] - a[2] * b[1], a[1] * b[3] - a[3] * b[1], a[2] * b[3] - a[3] * b[2]};
}

// The four 3x3 minors of [a;b;r] expressed through the Pluecker coordinates
// of (a,b); all vanish iff the three rows have rank <= 2.
template <class F>
bool rank2_with(const std::array<F, 6>& p, const std::array<F, 4>& r) {
    return is_zero(p[3] * r[3] - p[4] * r[2] + p[5] * r[1]) &&
           is_zero(p[1] * r[3] - p[2] * r[2] + p[5] * r[0]) &&
           is_zero(p[0] * r[3] - p[2] * r[1] + p[4] * r[0]) &&
           is_zero(p[0] * r[2] - p[1] * r[1] + p[3] * r[0]);
}

}  // namespace detail

// true iff the 3x4 coordinate matrix has rank <= 2
template <class F>
bool collinear(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
    return detail::rank2_with(detail::join_raw(p.x, q.x), r.x);
}

template <class F>
LineP3<F> line_through(const ProjPoint<F>& p, const ProjPoint<F>& q) {
    auto raw = detail::join_raw(p.x, q.x);
    bool all_zero = true;
    for (const F& c : raw)
        if (!is_zero(c)) all_zero = false;
    if (all_zero) throw degenerate_error("line_through: coincident points");
    return LineP3<F>(std::move(raw));
}

template <class F>
bool point_on_line(const ProjPoint<F>& r, const LineP3<F>& l) {
    return detail::rank2_with(l.p, r.x);
}

// Canonical dual vector vanishing on all three points (the 3x3 cofactors of
// the coordinate matrix).
template <class F>
PlaneP3<F> plane_span(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
    const auto& a = p.x;
    const auto& b = q.x;
    const auto& c = r.x;
    auto det3 = [&](int i, int j, int k) {
        return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
               a[k] * (b[i] * c[j] - b[j] * c[i]);
    };
    std::array<F, 4> dual{det3(1, 2, 3), -det3(0, 2, 3), det3(0, 1, 3), -det3(0, 1, 2)};
    bool all_zero = true;
    for (const F& v : dual)
        if (!is_zero(v)) all_zero = false;
    if (all_zero) throw degenerate_error("plane_span: collinear points");
    return PlaneP3<F>(std::move(dual));
}

template <class F>
bool coplanar4(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r,
               const ProjPoint<F>& s) {
    const auto& a = p.x;
    const auto& b = q.x;
    const auto& c = r.x;
    const auto& d = s.x;
    F det = FieldOps<F>::from_int(0);
    // Laplace expansion along the first row.
    auto det3 = [&](int i, int j, int k) {
        return b[i] * (c[j] * d[k] - c[k] * d[j]) - b[j] * (c[i] * d[k] - c[k] * d[i]) +
               b[k] * (c[i] * d[j] - c[j] * d[i]);
    };
    det = a[0] * det3(1, 2, 3) - a[1] * det3(0, 2, 3) + a[2] * det3(0, 1, 3) - a[3] * det3(0, 1, 2);
    return is_zero(det);
}

template <class F>
bool on_plane(const ProjPoint<F>& p, const PlaneP3<F>& pl) {
    F acc = FieldOps<F>::from_int(0);
    for (int k = 0; k < 4; ++k) acc = acc + pl.dual[k] * p.x[k];
    return is_zero(acc);
}

// Meet of a line and a plane; the zero vector signals line inside plane.
template <class F>
std::array<F, 4> meet_raw(const LineP3<F>& l, const PlaneP3<F>& pl) {
    const auto& L = l.p;
    const auto& P = pl.dual;
    return {-P[1] * L[0] - P[2] * L[1] - P[3] * L[2], P[0] * L[0] - P[2] * L[3] - P[3] * L[4],
            P[0] * L[1] + P[1] * L[3] - P[3] * L[5], P[0] * L[2] + P[1] * L[4] + P[2] * L[5]};
}

template <class F>
bool line_in_plane(const LineP3<F>& l, const PlaneP3<F>& pl) {
    for (const F& v : meet_raw(l, pl))
        if (!is_zero(v)) return false;
    return true;
}

}  // namespace cubiq
