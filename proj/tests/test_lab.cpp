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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "expocalc/errors.hpp"
#include "expocalc/kernels.hpp"
#include "expocalc/lab.hpp"
#include "expocalc/least_squares.hpp"

using namespace expocalc;
using namespace expocalc::lab;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

struct BackendGuard {
    kernels::Backend saved = kernels::active_backend();
    ~BackendGuard() { kernels::set_backend(saved); }
};

/// Normal-equations solve by Gaussian elimination with partial pivoting, for small full-rank systems.
std::vector<double> normal_equations(const Matrix& a, const std::vector<double>& b) {
    const std::size_t n = a.cols();
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < a.rows(); ++r) m[i][j] += a(r, i) * a(r, j);
        }
        for (std::size_t r = 0; r < a.rows(); ++r) m[i][n] += a(r, i) * b[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
        }
        std::swap(m[c], m[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("scalar and avx2 agree") {
        if (!kernels::avx2_supported()) {
            MESSAGE("AVX2 not available; comparing the scalar fallback with itself");
        }
        std::mt19937_64 rng(71);
        for (std::size_t n = 0; n <= 67; ++n) {
            const auto x = random_vector(rng, n, 100.0);
            const auto y = random_vector(rng, n, 100.0);
            const double d_s = kernels::scalar::dot(x.data(), y.data(), n);
            const double d_v = kernels::avx2::dot(x.data(), y.data(), n);
            double mag = 0.0;
            for (std::size_t i = 0; i < n; ++i) mag += std::fabs(x[i] * y[i]);
            CHECK(std::fabs(d_s - d_v) <= 1e-12 * std::max(mag, 1.0));

            CHECK(kernels::scalar::nrm2(x.data(), n) == doctest::Approx(kernels::avx2::nrm2(x.data(), n)).epsilon(1e-13));

            auto ys = y, yv = y;
            kernels::scalar::axpy(0.37, x.data(), ys.data(), n);
            kernels::avx2::axpy(0.37, x.data(), yv.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(ys[i] - yv[i]) <= 1e-12 * (1.0 + std::fabs(ys[i])));
        }
    }

    TEST_CASE("nrm2 avoids overflow and underflow") {
        const std::vector<double> big{3e200, 4e200};
        const std::vector<double> tiny{3e-200, 4e-200};
        for (auto f : {kernels::scalar::nrm2, kernels::avx2::nrm2}) {
            CHECK(f(big.data(), 2) == doctest::Approx(5e200));
            CHECK(f(tiny.data(), 2) == doctest::Approx(5e-200));
            CHECK(f(big.data(), 0) == 0.0);
        }
    }

    TEST_CASE("dispatch") {
        BackendGuard guard;
        kernels::set_backend(kernels::Backend::Scalar);
        CHECK(kernels::active_backend() == kernels::Backend::Scalar);
        kernels::set_backend(kernels::Backend::Avx2);
        CHECK(kernels::active_backend() ==
              (kernels::avx2_supported() ? kernels::Backend::Avx2 : kernels::Backend::Scalar));
        CHECK(std::string(kernels::backend_name(kernels::Backend::Avx2)) == "avx2");
    }
}

TEST_SUITE("least squares") {
    TEST_CASE("consistent square system") {
        Matrix a(3, 3);
        const double vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) a(r, c) = vals[r][c];
        }
        const auto res = least_squares(a, {{3, 5, 5}});
        CHECK(res.rank == 3);
        CHECK(res.residuals[0] < 1e-12);
        for (double x : res.solutions[0]) CHECK(x == doctest::Approx(1.0));
        CHECK_FALSE(res.ill_conditioned);
    }

    TEST_CASE("overdetermined systems match the normal equations") {
        std::mt19937_64 rng(72);
        BackendGuard guard;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t m = 8 + trial % 7, n = 2 + trial % 4;
            Matrix a(m, n);
            for (std::size_t c = 0; c < n; ++c) {
                const auto col = random_vector(rng, m);
                std::copy(col.begin(), col.end(), a.column(c));
            }
            const auto b = random_vector(rng, m);
            const auto oracle = normal_equations(a, b);
            std::vector<double> fit(m, 0.0);
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t r = 0; r < m; ++r) fit[r] += a(r, c) * oracle[c];
            }
            for (std::size_t r = 0; r < m; ++r) fit[r] -= b[r];
            for (auto backend : {kernels::Backend::Scalar, kernels::Backend::Avx2}) {
                kernels::set_backend(backend);
                const auto res = least_squares(a, {b});
                CHECK(res.rank == n);
                for (std::size_t c = 0; c < n; ++c) CHECK(res.solutions[0][c] == doctest::Approx(oracle[c]).epsilon(1e-9));
                CHECK(res.residuals[0] == doctest::Approx(norm(fit)).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("rank deficiency and zero matrices") {
        Matrix a(4, 3);
        for (int r = 0; r < 4; ++r) {
            a(r, 0) = r + 1;
            a(r, 1) = 2 * (r + 1);
            a(r, 2) = r % 2;
        }
        const auto res = least_squares(a, {{1, 2, 3, 4}});
        CHECK(res.rank == 2);
        CHECK(res.residuals[0] < 1e-12);

        const auto zero = least_squares(Matrix(3, 2), {{3, 0, 4}});
        CHECK(zero.rank == 0);
        CHECK(zero.residuals[0] == doctest::Approx(5.0));
        CHECK_THROWS(least_squares(Matrix(3, 2), {{1, 2}}));
    }
}

TEST_SUITE("counterexample") {
    TEST_CASE("factorial norms") {
        const auto inst = build_counterexample(3, 5);
        CHECK(norm(inst.value(inst.point(1))) == 1.0);
        CHECK(norm(inst.value(inst.point(2))) == 2.0);
        CHECK(norm(inst.value(inst.point(3))) == 6.0);
        CHECK(norm(inst.value(inst.point(4))) == 0.0);
    }

    TEST_CASE("enumeration") {
        CHECK(enumerate(1) == 0);
        CHECK(enumerate(2) == 1);
        CHECK(enumerate(3) == -1);
        CHECK(enumerate(4) == 2);
        for (std::int64_t n = 1; n <= 40; ++n) {
            CHECK(enumerate(2 * n) == n);
            CHECK(position(enumerate(n)) == n);
        }
        std::set<std::int64_t> seen;
        for (std::int64_t n = 1; n <= 21; ++n) seen.insert(enumerate(n));
        CHECK(seen.size() == 21);
        CHECK(*seen.begin() == -10);
        CHECK(*seen.rbegin() == 10);
    }

    TEST_CASE("values are pairwise orthogonal") {
        const auto inst = build_counterexample(8, 8);
        for (int a = 1; a <= 8; ++a) {
            for (int b = a + 1; b <= 8; ++b) {
                const auto u = inst.value(inst.point(a));
                const auto v = inst.value(inst.point(b));
                double d = 0.0;
                for (int c = 0; c < 8; ++c) d += u[c] * v[c];
                CHECK(d == 0.0);
            }
        }
    }

    TEST_CASE("guards") {
        CHECK_THROWS_AS(build_counterexample(9, 10), OverflowGuard);
        CHECK_THROWS_AS(build_counterexample(1, 10), PreconditionError);
        CHECK_THROWS_AS(build_counterexample(5, 4), PreconditionError);
        const auto inst = build_counterexample(5, 10);
        CHECK_THROWS_AS(residual(inst, 1.0, unit_vector(5, 1), 11, 10), PreconditionError);
        CHECK_THROWS_AS(residual(inst, 0.0, unit_vector(5, 1), 3, 10), PreconditionError);
        CHECK_THROWS_AS(residual(inst, 1.0, {1.0, 1.0, 0, 0, 0}, 3, 10), PreconditionError);
    }
}

TEST_SUITE("residuals") {
    TEST_CASE("never-sampled direction gives no reduction") {
        const auto inst = build_counterexample(5, 10);
        // with the single translate g_1 = 0 and points 0, 1, -1, direction u_5 (at -2) never appears
        for (std::complex<double> lambda : {std::complex<double>(1, 0), std::complex<double>(2, 0),
                                            std::complex<double>(0, 1)}) {
            const auto r = residual(inst, lambda, unit_vector(5, 5), 1, 3);
            double expected = 0.0;
            for (int j = 1; j <= 3; ++j) expected += std::norm(std::pow(lambda, static_cast<double>(inst.point(j))));
            CHECK(r.residual == doctest::Approx(std::sqrt(expected)).epsilon(1e-12));
        }
    }

    TEST_CASE("translates of f are reproduced") {
        const auto inst = build_counterexample(5, 10);
        for (int t = 1; t <= 6; ++t) CHECK(translate_residual(inst, t, 6, 10).residual < 1e-9);
        CHECK(translate_residual(inst, 1, 1, 10).residual < 1e-12);
    }

    TEST_CASE("baseline") {
        const auto inst = build_counterexample(5, 10);
        const auto r = residual(inst, 1.0, unit_vector(5, 1), 6, 10);
        CHECK(r.residual > 0.1);
        CHECK(r.residual == doctest::Approx(3.161968737744545).epsilon(1e-9));
        CHECK_FALSE(r.ill_conditioned);
    }

    TEST_CASE("baseline sweep stays positive") {
        const auto inst = build_counterexample(5, 10);
        for (std::complex<double> lambda : {1.0, 2.0, -1.0}) {
            for (int idx : {1, 3}) {
                const auto report = residual_sweep(inst, lambda, unit_vector(5, idx), 6);
                CHECK(report.windows.size() == 6);
                CHECK(report.all_positive());
                for (double r : report.residuals) CHECK(r > 1e-6);
                for (double c : report.conditioning) CHECK(c >= 1.0);
            }
        }
    }

    TEST_CASE("more points never decrease the residual") {
        const auto inst = build_counterexample(6, 16);
        for (std::complex<double> lambda : {std::complex<double>(1, 0), std::complex<double>(-1, 0),
                                            std::complex<double>(0.5, 0), std::complex<double>(0, 1)}) {
            for (int t = 1; t <= 6; ++t) {
                const double small = residual(inst, lambda, unit_vector(6, 2), t, 8).residual;
                const double large = residual(inst, lambda, unit_vector(6, 2), t, 16).residual;
                CHECK(large >= small - 1e-12);
            }
        }
    }

    TEST_CASE("backends agree on residuals") {
        BackendGuard guard;
        const auto inst = build_counterexample(7, 14);
        std::vector<double> e(7, 1.0 / std::sqrt(7.0));
        kernels::set_backend(kernels::Backend::Scalar);
        const auto a = residual_sweep(inst, {0.5, 0.5}, e, 8);
        kernels::set_backend(kernels::Backend::Avx2);
        const auto b = residual_sweep(inst, {0.5, 0.5}, e, 8);
        for (std::size_t i = 0; i < a.residuals.size(); ++i) {
            CHECK(a.residuals[i] == doctest::Approx(b.residuals[i]).epsilon(1e-10));
        }
    }

    TEST_CASE("coefficient spread") {
        for (int depth = 4; depth <= 8; ++depth) {
            const auto inst = build_counterexample(depth, depth);
            std::vector<double> e(depth, 1.0 / std::sqrt(static_cast<double>(depth)));
            for (std::complex<double> lambda : {1.0, 2.0, -1.0}) CHECK(coefficient_spread(inst, lambda, e) > 10.0);
        }
    }

    TEST_CASE("csv") {
        const auto inst = build_counterexample(3, 4);
        const auto report = residual_sweep(inst, {2.0, 0.0}, unit_vector(3, 1), 3);
        const std::string csv = sweep_csv({report});
        CHECK(csv.rfind("lambda_re,lambda_im,e,window,residual,conditioning\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
        CHECK(csv.find("\"1 0 0\"") != std::string::npos);
    }
}
