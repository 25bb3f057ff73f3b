#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polyhom/field.hpp"

namespace polyhom {

/// Dense matrix over an exact field, row-major.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, Elem fill) : rows(r), cols(c), a(r * c, fill) {}

    static Matrix zero(const F& k, std::size_t r, std::size_t c) { return Matrix(r, c, k.zero()); }
    static Matrix identity(const F& k, std::size_t n) {
        Matrix m = zero(k, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
        return m;
    }

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
bool mat_eq(const F& k, const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!k.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class F>
bool mat_is_zero(const F& k, const Matrix<F>& x) {
    for (const auto& e : x.a)
        if (!k.is_zero(e)) return false;
    return true;
}

template <class F>
Matrix<F> mat_mul(const F& k, const Matrix<F>& x, const Matrix<F>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix<F> out = Matrix<F>::zero(k, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            if (k.is_zero(x.at(i, l))) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) = k.add(out.at(i, j), k.mul(x.at(i, l), y.at(l, j)));
        }
    return out;
}

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    /// Columns form a basis of the null space (cols × nullity).
    Matrix<F> kernel_basis;
};

/// Reduced row echelon form with null-space basis; pivots chosen as the
/// first nonzero entry per column, scanning columns left to right.
template <class F>
RrefResult<F> rref(const F& k, const Matrix<F>& m) {
    RrefResult<F> res;
    res.reduced = m;
    Matrix<F>& r = res.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols && row < r.rows; ++col) {
        std::size_t piv = row;
        while (piv < r.rows && k.is_zero(r.at(piv, col))) ++piv;
        if (piv == r.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        const auto s = k.inv(r.at(row, col));
        for (std::size_t j = col; j < r.cols; ++j) r.at(row, j) = k.mul(s, r.at(row, j));
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == row || k.is_zero(r.at(i, col))) continue;
            const auto f = r.at(i, col);
            for (std::size_t j = col; j < r.cols; ++j)
                r.at(i, j) = k.sub(r.at(i, j), k.mul(f, r.at(row, j)));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();

    std::vector<bool> is_pivot(r.cols, false);
    for (auto c : res.pivot_cols) is_pivot[c] = true;
    const std::size_t nullity = r.cols - res.rank;
    res.kernel_basis = Matrix<F>::zero(k, r.cols, nullity);
    std::size_t kb = 0;
    for (std::size_t free_col = 0; free_col < r.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        res.kernel_basis.at(free_col, kb) = k.one();
        for (std::size_t pi = 0; pi < res.rank; ++pi)
            res.kernel_basis.at(res.pivot_cols[pi], kb) = k.neg(r.at(pi, free_col));
        ++kb;
    }
    return res;
}

}  // namespace polyhom
