#pragma once

#include <array>
#include <map>
#include <vector>

#include "cubiq/scalar.hpp"

namespace cubiq::detail {

// Sparse homogeneous polynomials used for one-off substitutions (plane
// sections, multiplicity charts).  Not for hot paths.
template <class F, std::size_t N>
using SparseForm = std::map<std::array<int, N>, F>;

template <class F, std::size_t N>
void sparse_add(SparseForm<F, N>& dst, const std::array<int, N>& e, const F& v) {
    auto it = dst.find(e);
    if (it == dst.end()) {
        if (!is_zero(v)) dst.emplace(e, v);
        return;
    }
    it->second = it->second + v;
    if (is_zero(it->second)) dst.erase(it);
}

template <class F, std::size_t N>
SparseForm<F, N> sparse_mul(const SparseForm<F, N>& a, const SparseForm<F, N>& b) {
    SparseForm<F, N> r;
    for (const auto& [ea, va] : a)
        for (const auto& [eb, vb] : b) {
            std::array<int, N> e;
            for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
            sparse_add(r, e, va * vb);
        }
    return r;
}

// (sum_k coeffs[k] * x_k)^1 as a sparse form
template <class F, std::size_t N>
SparseForm<F, N> sparse_linear(const std::array<F, N>& coeffs) {
    SparseForm<F, N> r;
    for (std::size_t k = 0; k < N; ++k) {
        if (is_zero(coeffs[k])) continue;
        std::array<int, N> e{};
        e[k] = 1;
        r.emplace(e, coeffs[k]);
    }
    return r;
}

template <class F, std::size_t N>
SparseForm<F, N> sparse_pow(const SparseForm<F, N>& base, int e) {
    SparseForm<F, N> r;
    r.emplace(std::array<int, N>{}, FieldOps<F>::from_int(1));
    for (int k = 0; k < e; ++k) r = sparse_mul(r, base);
    return r;
}

// Exponent tuples of total degree 3 in N variables, ascending lex.
template <std::size_t N>
std::vector<std::array<int, N>> degree3_exponents() {
    std::vector<std::array<int, N>> out;
    std::array<int, N> e{};
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == N) {
            e[pos] = remaining;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, 3);
    return out;
}

}  // namespace cubiq::detail
