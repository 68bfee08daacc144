/*
   Copyright 2026 The expocalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Exact dense linear algebra over a field F (Rational or Cyclotomic).
// F must provide +, -, *, /, is_zero(F) and zero_like(F).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "expocalc/cyclotomic.hpp"

namespace expocalc::linalg {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

/// Row space of vectors of fixed length kept in reduced row echelon form.
/// Optionally tracks, for every stored row, its expression in terms of the
/// accepted (linearly independent) inserted vectors.
template <class F>
class RowSpace {
   public:
    RowSpace(std::size_t cols, F zero) : cols_(cols), zero_(std::move(zero)) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Inserts v; returns true when v was independent of the current rows.
    bool insert(Vec<F> v) {
        check(v);
        Vec<F> combo(rows_.size() + 1, zero_);
        combo.back() = one();
        reduce(v, &combo);
        std::size_t pivot = first_nonzero(v);
        if (pivot == cols_) return false;
        const F inv = one() / v[pivot];
        scale(v, inv);
        scale(combo, inv);
        rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
        return true;
    }

    Vec<F> residual(Vec<F> v) const {
        check(v);
        reduce(v, nullptr);
        return v;
    }

    bool contains(const Vec<F>& v) const {
        const Vec<F> r = residual(v);
        return first_nonzero(r) == cols_;
    }

    /// Coefficients c with v = sum c_j * (j-th accepted vector), or nullopt.
    std::optional<Vec<F>> coordinates(Vec<F> v) const {
        check(v);
        Vec<F> combo(rows_.size(), zero_);
        Vec<F> acc(rows_.size(), zero_);
        for (const auto& row : rows_) {
            if (is_zero(v[row.pivot])) continue;
            const F factor = v[row.pivot];
            for (std::size_t c = 0; c < cols_; ++c) {
                if (!is_zero(row.values[c])) sub_product(v[c], factor, row.values[c]);
            }
            for (std::size_t j = 0; j < row.combo.size(); ++j) {
                if (!is_zero(row.combo[j])) add_product(acc[j], factor, row.combo[j]);
            }
        }
        if (first_nonzero(v) != cols_) return std::nullopt;
        return acc;
    }

    /// Echelon rows: each is zero at the pivots of the rows before it.
    Mat<F> rows() const {
        Mat<F> out;
        for (const auto& row : rows_) out.push_back(row.values);
        return out;
    }

   private:
    struct Row {
        std::size_t pivot;
        Vec<F> values;
        Vec<F> combo;
    };

    F one() const { return one_like(zero_); }

    void check(const Vec<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RowSpace: vector length mismatch");
    }

    std::size_t first_nonzero(const Vec<F>& v) const {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (!is_zero(v[c])) return c;
        }
        return cols_;
    }

    static void scale(Vec<F>& v, const F& factor) {
        for (auto& x : v) {
            if (!is_zero(x)) x *= factor;
        }
    }

    // a -= factor * b
    static void axpy(Vec<F>& a, const F& factor, const Vec<F>& b) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!is_zero(b[i])) sub_product(a[i], factor, b[i]);
        }
    }

    void reduce(Vec<F>& v, Vec<F>* combo) const {
        for (const auto& row : rows_) {
            if (is_zero(v[row.pivot])) continue;
            const F factor = v[row.pivot];
            axpy(v, factor, row.values);
            if (combo) axpy(*combo, factor, row.combo);
        }
    }

    std::size_t cols_;
    F zero_;
    std::vector<Row> rows_;
};

template <class F>
std::size_t rank(const Mat<F>& rows, const F& zero) {
    if (rows.empty()) return 0;
    RowSpace<F> space(rows.front().size(), zero);
    for (const auto& r : rows) space.insert(r);
    return space.rank();
}

/// Reduced row echelon form in place, pivoting only in the first
/// `pivot_cols` columns; returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const F inv = one_like(m[row][col]) / m[row][col];
        for (auto& x : m[row]) {
            if (!is_zero(x)) x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            const F factor = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (!is_zero(m[row][c])) sub_product(m[r][c], factor, m[row][c]);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Some x with A x = b (free variables set to zero), or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b, std::size_t unknowns, const F& zero) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    Mat<F> aug;
    aug.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != unknowns) throw std::invalid_argument("solve: column count mismatch");
        Vec<F> row = a[r];
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug, unknowns);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
        if (!is_zero(aug[r][unknowns])) return std::nullopt;
    }
    Vec<F> x(unknowns, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][unknowns];
    return x;
}

/// Basis of {x : A x = 0} for an A with `cols` columns.
template <class F>
Mat<F> nullspace(Mat<F> a, std::size_t cols, const F& zero) {
    const auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat<F> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec<F> x(cols, zero);
        x[free_col] = one_like(zero);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace expocalc::linalg
