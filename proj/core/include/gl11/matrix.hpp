#pragma once

#include "gl11/cyclotomic.hpp"
#include "gl11/error.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace gl11 {

// Dense row-major matrix over a backend scalar. Column j of a morphism matrix
// holds the image of source basis vector j.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Mat scalar(const S& s, std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<S>& data() const { return a_; }

    Mat& operator+=(const Mat& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Mat& operator*=(const S& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator-(Mat a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Mat operator*(const S& s, Mat a) { return a *= s; }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& x = a(i, k);
                if (is_structural_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Largest entry magnitude.
    double max_abs() const {
        double m = 0;
        for (const auto& x : a_) m = std::max(m, magnitude(x));
        return m;
    }

    bool is_zero(double tol) const {
        for (const auto& x : a_)
            if (!negligible(x, tol)) return false;
        return true;
    }

private:
    static bool is_structural_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
    static bool is_structural_zero(const Cyclo& x) { return x.is_zero(); }
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const S& x = a(i, j);
            if (x == S(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return c;
}

template <class S>
double residual(const Mat<S>& a, const Mat<S>& b) {
    return (a - b).max_abs();
}

// Reduced row echelon form in place. Pivots are chosen by largest magnitude;
// numeric entries below tol * max(1, |A|) count as zero. Returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Mat<S>& m, double tol) {
    const double scale = std::max(1.0, m.max_abs());
    const double eps = tol * scale;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        double best_score = pivot_score(m(row, col));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            double s = pivot_score(m(i, col));
            if (s > best_score) {
                best = i;
                best_score = s;
            }
        }
        if (negligible(m(best, col), eps)) {
            for (std::size_t i = row; i < m.rows(); ++i) m(i, col) = S(0);
            continue;
        }
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        S inv = S(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            S f = m(i, col);
            if (f == S(0)) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
            m(i, col) = S(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the right kernel, one column per free variable, in free-column order.
template <class S>
Mat<S> nullspace(Mat<S> m, double tol) {
    auto pivots = rref(m, tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Mat<S> basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free[k]);
    }
    return basis;
}

template <class S>
std::size_t rank(Mat<S> m, double tol) {
    return rref(m, tol).size();
}

// Solves a x = b for a consistent system; returns nullopt if inconsistent.
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b, double tol) {
    if (a.rows() != b.rows()) throw ValidationError("solve: row mismatch");
    Mat<S> aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    auto pivots = rref(aug, tol);
    Mat<S> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
    }
    // Verify consistency against the original system.
    Mat<S> res = a * x - b;
    double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    if (!res.is_zero(tol * scale * 10)) return std::nullopt;
    return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a, double tol) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a, tol) != a.rows()) return std::nullopt;
    return solve(a, Mat<S>::identity(a.rows()), tol);
}

}  // namespace gl11
