#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "cubiq/errors.hpp"

namespace cubiq {

// All arithmetic in this library is exact. Q is represented by
// boost::multiprecision::cpp_rational, which keeps gcd-reduced
// numerator/denominator with the denominator positive, so equal rationals
// have identical representations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// Floor square root comes from boost; this wrapper only reports exact ones.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto np = int_sqrt_exact(numerator(r));
    if (!np) return std::nullopt;
    auto dp = int_sqrt_exact(denominator(r));
    if (!dp) return std::nullopt;
    return Rat(*np, *dp);
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal: '" + s + "'");
    }
}

}  // namespace cubiq
