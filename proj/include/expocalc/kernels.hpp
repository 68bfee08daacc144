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

namespace expocalc::kernels {

enum class Backend { Scalar, Avx2 };

/// True when the CPU supports AVX2 and FMA.
bool avx2_supported() noexcept;
/// Backend used by the dispatching entry points. Defaults to AVX2 when supported
/// unless EXPOCALC_BACKEND=scalar is set.
Backend active_backend() noexcept;
/// Overrides the dispatch choice (Avx2 falls back to Scalar when unsupported).
void set_backend(Backend backend) noexcept;
const char* backend_name(Backend backend) noexcept;

double dot(const double* x, const double* y, std::size_t n);
/// y += alpha * x.
void axpy(double alpha, const double* x, double* y, std::size_t n);
double nrm2(const double* x, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double nrm2(const double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double nrm2(const double* x, std::size_t n);
}  // namespace avx2

}  // namespace expocalc::kernels
