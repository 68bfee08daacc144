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

#include "expocalc/lab.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "expocalc/errors.hpp"
#include "expocalc/least_squares.hpp"

namespace expocalc::lab {

namespace {

double factorial(int n) {
    double out = 1.0;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

void check_counts(const CounterexampleInstance& inst, int num_translates, int num_points) {
    if (num_translates < 1 || num_translates > inst.window() || num_points < 1 || num_points > inst.window()) {
        throw PreconditionError("translate and point counts must lie in [1, " + std::to_string(inst.window()) + "]");
    }
}

void check_target(const CounterexampleInstance& inst, const std::vector<double>& e) {
    if (static_cast<int>(e.size()) != inst.depth()) throw StructuralError("target vector must have length depth");
    double norm = 0.0;
    for (double v : e) norm += v * v;
    if (std::fabs(std::sqrt(norm) - 1.0) > 1e-9) throw PreconditionError("target vector must have unit length");
}

Matrix translate_matrix(const CounterexampleInstance& inst, int num_translates, int num_points) {
    const int d = inst.depth();
    Matrix a(static_cast<std::size_t>(num_points) * d, num_translates);
    for (int i = 0; i < num_translates; ++i) {
        const std::int64_t shift = inst.point(i + 1);
        for (int j = 0; j < num_points; ++j) {
            const auto v = inst.value(inst.point(j + 1) + shift);
            for (int c = 0; c < d; ++c) a(static_cast<std::size_t>(j) * d + c, i) = v[c];
        }
    }
    return a;
}

ResidualResult summarize(const LeastSquaresResult& ls) {
    double total = 0.0;
    for (double r : ls.residuals) total += r * r;
    return ResidualResult{std::sqrt(total), ls.condition, ls.ill_conditioned, ls.rank};
}

}  // namespace

std::int64_t enumerate(std::int64_t n) {
    if (n < 1) throw PreconditionError("enumeration index must be positive");
    return n % 2 == 0 ? n / 2 : -(n - 1) / 2;
}

std::int64_t position(std::int64_t x) { return x > 0 ? 2 * x : 1 - 2 * x; }

CounterexampleInstance::CounterexampleInstance(int depth, int window) : depth_(depth), window_(window) {
    if (depth > kMaxDepth) {
        throw OverflowGuard("depth " + std::to_string(depth) + " exceeds the limit " + std::to_string(kMaxDepth));
    }
    if (depth < 2) throw PreconditionError("depth must be at least 2");
    if (window < depth) throw PreconditionError("window must be at least depth");
}

std::int64_t CounterexampleInstance::point(int n) const {
    if (n < 1 || n > window_) throw PreconditionError("point index outside the window");
    return enumerate(n);
}

std::vector<double> CounterexampleInstance::value(std::int64_t x) const {
    std::vector<double> out(depth_, 0.0);
    const std::int64_t n = position(x);
    if (n <= depth_) out[n - 1] = factorial(static_cast<int>(n));
    return out;
}

CounterexampleInstance build_counterexample(int depth, int window) { return CounterexampleInstance(depth, window); }

std::vector<double> unit_vector(int depth, int index) {
    if (index < 1 || index > depth) throw PreconditionError("unit vector index outside [1, depth]");
    std::vector<double> e(depth, 0.0);
    e[index - 1] = 1.0;
    return e;
}

ResidualResult residual(const CounterexampleInstance& inst, std::complex<double> lambda, const std::vector<double>& e,
                        int num_translates, int num_points) {
    check_counts(inst, num_translates, num_points);
    check_target(inst, e);
    if (lambda == 0.0) throw PreconditionError("exponential base must be nonzero");
    const int d = inst.depth();
    std::vector<double> re(static_cast<std::size_t>(num_points) * d), im(re.size());
    for (int j = 0; j < num_points; ++j) {
        const std::complex<double> m = std::pow(lambda, static_cast<double>(inst.point(j + 1)));
        for (int c = 0; c < d; ++c) {
            re[static_cast<std::size_t>(j) * d + c] = m.real() * e[c];
            im[static_cast<std::size_t>(j) * d + c] = m.imag() * e[c];
        }
    }
    return summarize(least_squares(translate_matrix(inst, num_translates, num_points), {re, im}));
}

ResidualResult translate_residual(const CounterexampleInstance& inst, int target, int num_translates, int num_points) {
    check_counts(inst, num_translates, num_points);
    const std::int64_t shift = inst.point(target);
    const int d = inst.depth();
    std::vector<double> b(static_cast<std::size_t>(num_points) * d);
    for (int j = 0; j < num_points; ++j) {
        const auto v = inst.value(inst.point(j + 1) + shift);
        std::copy(v.begin(), v.end(), b.begin() + static_cast<std::ptrdiff_t>(j) * d);
    }
    return summarize(least_squares(translate_matrix(inst, num_translates, num_points), {b}));
}

bool ResidualReport::all_positive() const {
    return std::all_of(residuals.begin(), residuals.end(), [](double r) { return r > 0.0; });
}

ResidualReport residual_sweep(const CounterexampleInstance& inst, std::complex<double> lambda,
                              const std::vector<double>& e, int max_translates) {
    ResidualReport report{lambda, e, {}, {}, {}, {}};
    for (int t = 1; t <= max_translates; ++t) {
        const auto r = residual(inst, lambda, e, t, inst.window());
        report.windows.push_back(t);
        report.residuals.push_back(r.residual);
        report.conditioning.push_back(r.condition);
        report.ill_conditioned.push_back(r.ill_conditioned);
    }
    return report;
}

std::string sweep_csv(const std::vector<ResidualReport>& reports) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "lambda_re,lambda_im,e,window,residual,conditioning\n";
    for (const auto& r : reports) {
        std::string e;
        for (std::size_t i = 0; i < r.e.size(); ++i) {
            std::ostringstream v;
            v << r.e[i];
            e += (i ? " " : "") + v.str();
        }
        for (std::size_t i = 0; i < r.windows.size(); ++i) {
            out << r.lambda.real() << ',' << r.lambda.imag() << ",\"" << e << "\"," << r.windows[i] << ','
                << r.residuals[i] << ',' << r.conditioning[i] << '\n';
        }
    }
    return out.str();
}

double coefficient_spread(const CounterexampleInstance& inst, std::complex<double> lambda,
                          const std::vector<double>& e) {
    check_target(inst, e);
    if (lambda == 0.0) throw PreconditionError("exponential base must be nonzero");
    const int d = inst.depth();
    Matrix a(d, d);
    for (int n = 1; n <= d; ++n) {
        const auto v = inst.value(inst.point(n));
        for (int c = 0; c < d; ++c) a(c, n - 1) = v[c];
    }
    const auto ls = least_squares(std::move(a), {e});
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int n = 1; n <= d; ++n) {
        if (e[n - 1] == 0.0) continue;
        const double v = std::abs(ls.solutions[0][n - 1] * std::pow(lambda, static_cast<double>(inst.point(n))));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == 0.0) throw PreconditionError("target vector has no nonzero entry");
    return hi / lo;
}

}  // namespace expocalc::lab
