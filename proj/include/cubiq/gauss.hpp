#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cubiq/rational.hpp"

namespace cubiq {

// Gaussian rationals Q(i). Needed because the standard quadric sum(x_i^2)=0
// has no rational points; everything else stays generic over the field.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(int r) : re(r) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat conj() const { return {re, -im}; }

    // re^2 + im^2, a nonnegative rational, zero iff *this == 0.
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm();
        if (n == 0) throw error("division by zero in Q(i)");
        GaussRat c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
    friend bool operator==(const GaussRat& a, int b) { return a.re == b && a.im == 0; }
    friend bool operator!=(const GaussRat& a, int b) { return !(a == b); }
};

// "a+bi" with rational a, b: "0", "-1/2", "3i", "-i", "1/2-3/4i".
inline std::string gauss_to_string(const GaussRat& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string imag;
    if (z.im == 1)
        imag = "i";
    else if (z.im == -1)
        imag = "-i";
    else
        imag = rat_to_string(z.im) + "i";
    if (z.re == 0) return imag;
    if (z.im > 0) return rat_to_string(z.re) + "+" + imag;
    return rat_to_string(z.re) + imag;
}

inline GaussRat parse_gauss(const std::string& s) {
    if (s.empty()) throw parse_error("empty Q(i) literal");
    // Split at the last top-level '+'/'-' (index > 0, not following '/').
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            split = k;
            break;
        }
    }
    auto parse_imag = [](std::string t) -> Rat {
        // t ends with 'i'
        t.pop_back();
        if (t.empty() || t == "+") return Rat(1);
        if (t == "-") return Rat(-1);
        return parse_rat(t);
    };
    if (s.back() == 'i') {
        if (split == std::string::npos) return GaussRat(Rat(0), parse_imag(s));
        std::stringres = s.substr(0, split);
        std::string ims = s.substr(split);
        return GaussRat(parse_rat(res), parse_imag(ims));
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw parse_error("bad Q(i) literal: '" + s + "'");
    return GaussRat(parse_rat(s));
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << gauss_to_string(z);
}

// Exact square root in Q(i) when one exists.  (u+vi)^2 = a+bi needs
// u^2 = (a + sqrt(a^2+b^2))/2 with both square roots rational.
inline std::optional<GaussRat> gauss_sqrt_exact(const GaussRat& z) {
    if (z.im == 0) {
        if (auto r = rat_sqrt_exact(z.re)) return GaussRat(*r);
        if (auto r = rat_sqrt_exact(-z.re)) return GaussRat(Rat(0), *r);
        return std::nullopt;
    }
    auto n = rat_sqrt_exact(z.norm());
    if (!n) return std::nullopt;
    auto u2 = (z.re + *n) / 2;
    auto u = rat_sqrt_exact(u2);
    if (!u || *u == 0) return std::nullopt;
    Rat v = z.im / (2 * *u);
    GaussRat cand(*u, v);
    if (cand * cand == z) return cand;
    return std::nullopt;
}

}  // namespace cubiq
