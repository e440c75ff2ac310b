#pragma once

#include <optional>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/scalar.hpp"

namespace cubiq {

// Dense exact matrices, sized for the 4x4 work this library does.
template <class F>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), a_(rows * cols, FieldOps<F>::from_int(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = FieldOps<F>::from_int(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < y.c_; ++j)
                    z(i, j) = z(i, j) + x(i, k) * y(k, j);
            }
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat z(x.r_, x.c_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
        return z;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    Mat transposed() const {
        Mat t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> out(r_, FieldOps<F>::from_int(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    // Reduced row echelon form; returns the rank.
    std::size_t rref() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
            std::size_t pivot = rank;
            while (pivot < r_ && is_zero((*this)(pivot, col))) ++pivot;
            if (pivot == r_) continue;
            swap_rows(pivot, rank);
            F inv = FieldOps<F>::from_int(1) / (*this)(rank, col);
            for (std::size_t j = col; j < c_; ++j) (*this)(rank, j) = (*this)(rank, j) * inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == rank || is_zero((*this)(i, col))) continue;
                F f = (*this)(i, col);
                for (std::size_t j = col; j < c_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    // Basis of the right null space, one vector per free column, in the
    // canonical order induced by rref.
    std::vector<std::vector<F>> kernel() const {
        Mat m = *this;
        std::size_t rank = m.rref();
        std::vector<long> pivot_of_col(c_, -1);
        std::vector<std::size_t> pivot_cols;
        for (std::size_t i = 0, col = 0; i < rank; ++i) {
            while (col < c_ && is_zero(m(i, col))) ++col;
            if (col == c_) break;
            pivot_of_col[col] = static_cast<long>(i);
            pivot_cols.push_back(col);
            ++col;
        }
        std::vector<std::vector<F>> basis;
        for (std::size_t free = 0; free < c_; ++free) {
            if (pivot_of_col[free] >= 0) continue;
            std::vector<F> v(c_, FieldOps<F>::from_int(0));
            v[free] = FieldOps<F>::from_int(1);
            for (std::size_t k = 0; k < pivot_cols.size(); ++k)
                v[pivot_cols[k]] = -m(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t rank() const {
        Mat m = *this;
        return m.rref();
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<F> a_;
};

// Row spaces compared via canonical rref.
template <class F>
bool same_row_space(Mat<F> a, Mat<F> b) {
    std::size_t ra = a.rref();
    std::size_t rb = b.rref();
    if (ra != rb) return false;
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

// M and N equal up to a nonzero scalar.
template <class F>
bool proportional(const Mat<F>& m, const Mat<F>& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols()) return false;
    F lambda = FieldOps<F>::from_int(0);
    bool have = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            bool mz = is_zero(m(i, j));
            bool nz = is_zero(n(i, j));
            if (mz != nz) return false;
            if (mz) continue;
            if (!have) {
                lambda = m(i, j) / n(i, j);
                have = true;
            } else if (!(m(i, j) == lambda * n(i, j))) {
                return false;
            }
        }
    return true;
}

}  // namespace cubiq
