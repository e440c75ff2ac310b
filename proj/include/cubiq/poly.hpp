#pragma once

#include <utility>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/scalar.hpp"

namespace cubiq {

// Univariate polynomials over Q or Q(i).  Coefficients ascending, trimmed so
// the highest index is nonzero; the zero polynomial has no coefficients.
template <class F>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(F v) { return UniPoly(std::vector<F>{std::move(v)}); }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t k) const { return c_[k]; }
    const F& leading() const { return c_.back(); }

    F eval(const F& x) const {
        F acc = FieldOps<F>::from_int(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), FieldOps<F>::from_int(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), FieldOps<F>::from_int(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] - b.c_[k];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, FieldOps<F>::from_int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const F& s) const {
        std::vector<F> r = c_;
        for (F& x : r) x = x * s;
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(FieldOps<F>::from_int(1) / leading());
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw error("polynomial division by zero");
        std::vector<F> rem = c_;
        std::vector<F> quot;
        if (degree() >= d.degree())
            quot.assign(static_cast<std::size_t>(degree() - d.degree()) + 1,
                        FieldOps<F>::from_int(0));
        F inv_lead = FieldOps<F>::from_int(1) / d.leading();
        for (int k = degree(); k >= d.degree(); --k) {
            F q = rem[static_cast<std::size_t>(k)] * inv_lead;
            if (!is_zero(q)) {
                quot[static_cast<std::size_t>(k - d.degree())] = q;
                for (int j = 0; j <= d.degree(); ++j)
                    rem[static_cast<std::size_t>(k - d.degree() + j)] =
                        rem[static_cast<std::size_t>(k - d.degree() + j)] -
                        q * d.c_[static_cast<std::size_t>(j)];
            }
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

  private:
    void trim() {
        while (!c_.empty() && FieldOps<F>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

// Monic gcd via the Euclidean algorithm.  gcd(p, 0) = monic(p); gcd(0, 0) is
// an error.  A constant result means p and q share no root in the closure.
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> p, UniPoly<F> q) {
    if (p.is_zero() && q.is_zero()) throw undefined_gcd_error();
    while (!q.is_zero()) {
        auto [quot, rem] = p.divmod(q);
        (void)quot;
        p = std::move(q);
        q = std::move(rem);
    }
    return p.monic();
}

// Exact Lagrange interpolation through distinct nodes.
template <class F>
UniPoly<F> poly_interpolate(const std::vector<std::pair<F, F>>& samples) {
    UniPoly<F> acc;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        UniPoly<F> basis = UniPoly<F>::constant(FieldOps<F>::from_int(1));
        F denom = FieldOps<F>::from_int(1);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (i == j) continue;
            basis = basis * UniPoly<F>(std::vector<F>{-samples[j].first, FieldOps<F>::from_int(1)});
            denom = denom * (samples[i].first - samples[j].first);
        }
        acc = acc + basis.scaled(samples[i].second / denom);
    }
    return acc;
}

// Exact synthetic division by (t - r); requires p(r) = 0.
template <class F>
UniPoly<F> poly_divide_out_root(const UniPoly<F>& p, const F& r) {
    if (!is_zero(p.eval(r)))
        throw not_a_root_error("divide_out_root: value at the point is nonzero");
    if (p.is_zero()) throw not_a_root_error("divide_out_root: zero polynomial");
    const auto& c = p.coeffs();
    std::vector<F> q(c.size() - 1, FieldOps<F>::from_int(0));
    F carry = FieldOps<F>::from_int(0);
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
    }
    return UniPoly<F>(std::move(q));
}

}  // namespace cubiq
