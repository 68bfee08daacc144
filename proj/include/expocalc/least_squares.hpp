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

#include <cstddef>
#include <vector>

namespace expocalc::lab {

/// Dense column-major matrix of doubles.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    double* column(std::size_t c) { return data_.data() + c * rows_; }
    const double* column(std::size_t c) const { return data_.data() + c * rows_; }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

constexpr double kIllConditioned = 1e12;

struct LeastSquaresResult {
    /// One solution per right-hand side (basic solution: dropped columns get 0).
    std::vector<std::vector<double>> solutions;
    /// ||A x - b|| per right-hand side.
    std::vector<double> residuals;
    std::size_t rank = 0;
    /// |R_00| / |R_kk| over the retained pivots.
    double condition = 1.0;
    bool ill_conditioned = false;
};

/// min ||A x - b|| for every b in rhs, by Householder QR with column pivoting.
/// Columns whose remaining norm falls below rank_tol * |R_00| are dropped.
LeastSquaresResult least_squares(Matrix a, std::vector<std::vector<double>> rhs, double rank_tol = 1e-12);

}  // namespace expocalc::lab
