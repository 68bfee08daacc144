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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace expocalc::lab {

constexpr int kMaxDepth = 8;

/// Enumeration of Z used by the construction: g_1 = 0, g_2 = 1, g_3 = -1, g_4 = 2, ...
/// so that g_{2n} = n.
std::int64_t enumerate(std::int64_t n);
/// The n with g_n = x.
std::int64_t position(std::int64_t x);

/// f : Z -> R^depth with f(g_n) = n! u_n for n <= depth and 0 elsewhere.
class CounterexampleInstance {
   public:
    CounterexampleInstance(int depth, int window);

    int depth() const noexcept { return depth_; }
    int window() const noexcept { return window_; }
    /// g_n for 1 <= n <= window.
    std::int64_t point(int n) const;
    std::vector<double> value(std::int64_t x) const;

   private:
    int depth_;
    int window_;
};

/// Throws OverflowGuard for depth > 8 and PreconditionError for depth < 2 or window < depth.
CounterexampleInstance build_counterexample(int depth, int window);

/// u_index (1-based) in R^depth.
std::vector<double> unit_vector(int depth, int index);

struct ResidualResult {
    double residual = 0.0;
    double condition = 1.0;
    bool ill_conditioned = false;
    std::size_t rank = 0;
};

/// Least-squares distance from x -> lambda^x e to span{T_{g_i} f : i <= num_translates},
/// both sampled at g_1..g_{num_points}.
ResidualResult residual(const CounterexampleInstance& inst, std::complex<double> lambda, const std::vector<double>& e,
                        int num_translates, int num_points);

/// Same with the target replaced by the translate T_{g_target} f.
ResidualResult translate_residual(const CounterexampleInstance& inst, int target, int num_translates, int num_points);

struct ResidualReport {
    std::complex<double> lambda;
    std::vector<double> e;
    std::vector<int> windows;
    std::vector<double> residuals;
    std::vector<double> conditioning;
    std::vector<bool> ill_conditioned;

    bool all_positive() const;
};

/// Residuals for num_translates = 1..max_translates, sampled on the whole window.
ResidualReport residual_sweep(const CounterexampleInstance& inst, std::complex<double> lambda,
                              const std::vector<double>& e, int max_translates);

/// CSV with columns lambda_re,lambda_im,e,window,residual,conditioning.
std::string sweep_csv(const std::vector<ResidualReport>& reports);

/// Fits sum_n c_n f(g_n) = e at the origin and returns max/min of |c_n lambda^{g_n}|
/// over the directions where e is nonzero.
double coefficient_spread(const CounterexampleInstance& inst, std::complex<double> lambda,
                          const std::vector<double>& e);

}  // namespace expocalc::lab
