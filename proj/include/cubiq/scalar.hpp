#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubiq/gauss.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

// The scalar family is closed: geometry is generic over exactly Q and Q(i).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static constexpr const char* name() { return "Q"; }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_int(long v) { return Rat(v); }
    static std::string str(const Rat& x) { return rat_to_string(x); }
    static Rat parse(const std::string& s) { return parse_rat(s); }
    static std::optional<Rat> sqrt_exact(const Rat& x) { return rat_sqrt_exact(x); }

    // Canonical projective form over Q: coprime integer coordinates with the
    // first nonzero entry positive.
    static void canonicalize(std::span<Rat> v) {
        Int l = 1;
        for (const Rat& x : v)
            if (x != 0) l = lcm(l, denominator(x));
        Int g = 0;
        std::vector<Int> ints(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            ints[k] = numerator(v[k]) * (l / denominator(v[k]));
            g = gcd(g, ints[k]);
        }
        if (g == 0) return;  // zero vector left untouched; callers reject it
        int sign = 0;
        for (const Int& x : ints) {
            if (x != 0) {
                sign = x > 0 ? 1 : -1;
                break;
            }
        }
        if (sign < 0) g = -g;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = Rat(ints[k] / g);
    }
};

template <>
struct FieldOps<GaussRat> {
    static constexpr const char* name() { return "Q(i)"; }
    static bool is_zero(const GaussRat& x) { return x.is_zero(); }
    static GaussRat from_int(long v) { return GaussRat(Rat(v)); }
    static std::string str(const GaussRat& x) { return gauss_to_string(x); }
    static GaussRat parse(const std::string& s) { return parse_gauss(s); }
    static std::optional<GaussRat> sqrt_exact(const GaussRat& x) { return gauss_sqrt_exact(x); }

    // Canonical projective form over Q(i): first nonzero coordinate is 1.
    static void canonicalize(std::span<GaussRat> v) {
        const GaussRat* pivot = nullptr;
        for (const GaussRat& x : v) {
            if (!x.is_zero()) {
                pivot = &x;
                break;
            }
        }
        if (!pivot) return;
        GaussRat p = *pivot;
        for (GaussRat& x : v) x /= p;
    }
};

template <class F>
bool is_zero(const F& x) {
    return FieldOps<F>::is_zero(x);
}

template <class F>
std::string scalar_str(const F& x) {
    return FieldOps<F>::str(x);
}

}  // namespace cubiq
