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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/oracle.hpp"

namespace expocalc {

/// Degree of a generalized polynomial: the least n with every (n+1)-fold
/// difference vanishing; -1 for the zero function.
/// Throws NotGeneralizedPolynomial when a nontrivial exponential is present.
int degree(const ExpoPoly& f);

bool is_generalized_polynomial(const ExpoPoly& f) noexcept;

/// Randomized test of Delta_{h_1} ... Delta_{h_{n+1}} f(x) = 0 on `trials`
/// seeded draws of (x, h_1..h_{n+1}) from [-box, box]^r x torsion.
/// A true result may be a false positive; false is always conclusive.
bool check_genpoly_blackbox(const FunctionOracle& f, int n, int trials, std::int64_t box, std::uint64_t seed = 0);

/// Homogeneous components (f_0(x), ..., f_n(x)) of a generalized polynomial
/// of degree <= n, recovered from f(kx) = sum_i k^i f_i(x), k = 1..n+1, by
/// an exact Vandermonde solve.
std::vector<std::vector<Cyclotomic>> homogeneous_parts(const FunctionOracle& f, int n, const GroupElement& x);

/// A_i(x_1, ..., x_i) = (1/i!) Delta_{x_1} ... Delta_{x_i} f_i (0) for a form
/// f_i homogeneous of degree i. The symmetric i-additive map whose diagonal is f_i.
std::vector<Cyclotomic> polarize(const FunctionOracle& f_i, int i, const std::vector<GroupElement>& points);

struct ClassificationReport {
    bool is_generalized = false;
    bool is_polynomial = false;
    bool is_w_polynomial = false;
    bool is_local_polynomial = false;
    std::optional<int> degree;
    std::size_t dim_translate_span = 0;
};

/// On a finitely generated group with finite-dimensional values the four
/// notions coincide, so all flags equal is_generalized.
ClassificationReport classify(const ExpoPoly& f);

/// Functional u with degree(u o f) == degree(f): the standard basis
/// functional at the first nonzero entry of a top-degree coefficient.
std::vector<Cyclotomic> degree_certificate(const ExpoPoly& f);

struct NBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// lower = max dim L_{u o f} over the standard basis functionals and 20
/// seeded random functionals; upper = dim L_f.
NBounds n_of_f_bounds(const ExpoPoly& f, std::uint64_t seed = 0);

/// F(t, x) = sum_j t_j f_j(x) + g(x) on Z^k x G.
ExpoPoly lift(const ExpoPoly& fs, const ExpoPoly& g);

struct Unlifted {
    ExpoPoly fs;
    ExpoPoly g;
};

/// Inverse of lift for F on Z^k x G: f_j = Delta_{e_j} F, g = F - sum t_j f_j.
/// Throws NotLiftedForm when F is not affine in t or involves t in an exponential.
Unlifted unlift(const ExpoPoly& lifted, int k);

}  // namespace expocalc
