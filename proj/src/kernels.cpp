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

#include "expocalc/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define EXPOCALC_X86 1
#endif

namespace expocalc::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double nrm2(const double* x, std::size_t n) {
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::fmax(scale, std::fabs(x[i]));
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i] / scale;
        acc += v * v;
    }
    return scale * std::sqrt(acc);
}

}  // namespace scalar

namespace avx2 {

#ifdef EXPOCALC_X86

namespace {

__attribute__((target("avx2,fma"))) double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

__attribute__((target("avx2,fma"))) double dot_impl(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

__attribute__((target("avx2,fma"))) void axpy_impl(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

__attribute__((target("avx2,fma"))) double nrm2_impl(const double* x, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vmax = _mm256_max_pd(vmax, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double scale = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (std::size_t j = i; j < n; ++j) scale = std::fmax(scale, std::fabs(x[j]));
    if (scale == 0.0) return 0.0;
    const __m256d inv = _mm256_set1_pd(1.0 / scale);
    __m256d acc = _mm256_setzero_pd();
    for (i = 0; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_mul_pd(_mm256_loadu_pd(x + i), inv);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double sum = horizontal_sum(acc);
    for (; i < n; ++i) {
        const double v = x[i] / scale;
        sum += v * v;
    }
    return scale * std::sqrt(sum);
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) { return dot_impl(x, y, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { axpy_impl(alpha, x, y, n); }
double nrm2(const double* x, std::size_t n) { return nrm2_impl(x, n); }

#else

double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { scalar::axpy(alpha, x, y, n); }
double nrm2(const double* x, std::size_t n) { return scalar::nrm2(x, n); }

#endif

}  // namespace avx2

namespace {

Backend detect() noexcept {
    const char* forced = std::getenv("EXPOCALC_BACKEND");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Backend::Scalar;
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

bool avx2_supported() noexcept {
#ifdef EXPOCALC_X86
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) noexcept {
    if (backend == Backend::Avx2 && !avx2_supported()) backend = Backend::Scalar;
    current().store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) noexcept { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

double dot(const double* x, const double* y, std::size_t n) {
    return active_backend() == Backend::Avx2 ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    if (active_backend() == Backend::Avx2) {
        avx2::axpy(alpha, x, y, n);
    } else {
        scalar::axpy(alpha, x, y, n);
    }
}

double nrm2(const double* x, std::size_t n) {
    return active_backend() == Backend::Avx2 ? avx2::nrm2(x, n) : scalar::nrm2(x, n);
}

}  // namespace expocalc::kernels
