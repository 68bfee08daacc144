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

#include "expocalc/least_squares.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "expocalc/kernels.hpp"

namespace expocalc::lab {

LeastSquaresResult least_squares(Matrix a, std::vector<std::vector<double>> rhs, double rank_tol) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    for (const auto& b : rhs) {
        if (b.size() != m) throw std::invalid_argument("least_squares: right-hand side length mismatch");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> diag;
    std::vector<double> v(m);

    const std::size_t steps = std::min(m, n);
    double r00 = 0.0;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        const std::size_t len = m - k;
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t j = k; j < n; ++j) {
            const double nj = kernels::nrm2(a.column(j) + k, len);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (k == 0) r00 = best_norm;
        if (best_norm == 0.0 || best_norm <= rank_tol * r00) break;
        if (best != k) {
            std::swap_ranges(a.column(k), a.column(k) + m, a.column(best));
            std::swap(perm[k], perm[best]);
        }
        double* col = a.column(k) + k;
        const double alpha = col[0] > 0 ? -best_norm : best_norm;
        std::copy(col, col + len, v.begin());
        v[0] -= alpha;
        const double vv = kernels::dot(v.data(), v.data(), len);
        if (vv > 0.0) {
            for (std::size_t j = k + 1; j < n; ++j) {
                double* target = a.column(j) + k;
                const double s = 2.0 * kernels::dot(v.data(), target, len) / vv;
                kernels::axpy(-s, v.data(), target, len);
            }
            for (auto& b : rhs) {
                const double s = 2.0 * kernels::dot(v.data(), b.data() + k, len) / vv;
                kernels::axpy(-s, v.data(), b.data() + k, len);
            }
        }
        col[0] = alpha;
        std::fill(col + 1, col + len, 0.0);
        diag.push_back(std::fabs(alpha));
        rank = k + 1;
    }

    LeastSquaresResult out;
    out.rank = rank;
    out.condition = rank == 0 ? 1.0 : diag.front() / diag.back();
    out.ill_conditioned = out.condition > kIllConditioned;
    for (auto& b : rhs) {
        std::vector<double> y(rank, 0.0);
        for (std::size_t i = rank; i-- > 0;) {
            double acc = b[i];
            for (std::size_t j = i + 1; j < rank; ++j) acc -= a(i, j) * y[j];
            y[i] = acc / a(i, i);
        }
        std::vector<double> x(n, 0.0);
        for (std::size_t i = 0; i < rank; ++i) x[perm[i]] = y[i];
        out.solutions.push_back(std::move(x));
        out.residuals.push_back(kernels::nrm2(b.data() + rank, m - rank));
    }
    return out;
}

}  // namespace expocalc::lab
