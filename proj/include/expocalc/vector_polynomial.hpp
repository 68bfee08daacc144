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
#include <map>
#include <span>
#include <vector>

#include "expocalc/cyclotomic.hpp"

namespace expocalc {

/// Multi-exponent over the free coordinates x_1..x_r.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
/// All exponents in num_vars variables of total degree <= max_degree, graded then lexicographic.
std::vector<Exponent> monomials_up_to(int num_vars, int max_degree);

/// Polynomial in the free coordinates with coefficients in C^k.
///
/// Generalized polynomials on Z^r x (torsion) do not depend on the torsion
/// coordinates: an additive map into C sends every element of finite order
/// to zero, so every monomial factor vanishes there. Only free coordinates
/// appear here.
///
/// No stored coefficient vector is identically zero; the empty map is the
/// zero polynomial, of degree -1.
class VectorPolynomial {
   public:
    using Coefficient = std::vector<Cyclotomic>;
    using Terms = std::map<Exponent, Coefficient>;

    VectorPolynomial(int num_vars, int vector_dim, int order);

    static VectorPolynomial constant(int num_vars, const Coefficient& value, int order);
    static VectorPolynomial monomial(int num_vars, const Exponent& exponent, const Coefficient& coeff, int order);

    int num_vars() const noexcept { return num_vars_; }
    int vector_dim() const noexcept { return vector_dim_; }
    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept;

    /// Coefficient of x^exponent (zero vector when absent).
    Coefficient coefficient(const Exponent& exponent) const;

    /// Adds coeff * x^exponent, dropping the entry if it cancels.
    void add_term(const Exponent& exponent, const Coefficient& coeff);
    void add_scaled(const VectorPolynomial& other, const Cyclotomic& factor);

    Coefficient evaluate(std::span<const std::int64_t> point) const;
    /// x -> p(x + shift).
    VectorPolynomial shifted(std::span<const std::int64_t> shift) const;
    VectorPolynomial scaled(const Cyclotomic& factor) const;
    VectorPolynomial promoted(int order) const;
    /// Part of total degree exactly d.
    VectorPolynomial homogeneous_part(int d) const;
    /// Scalar polynomial x -> sum_j u_j p_j(x).
    VectorPolynomial compose(std::span<const Cyclotomic> functional) const;
    /// Product with a polynomial where at least one factor is scalar-valued.
    VectorPolynomial times(const VectorPolynomial& other) const;
    /// Same polynomial in `count` extra leading variables (which it does not involve).
    VectorPolynomial with_leading_vars(int count) const;

    friend VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b);
    friend VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b);
    friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.vector_dim_ == b.vector_dim_ && a.terms_ == b.terms_;
    }

   private:
    int num_vars_;
    int vector_dim_;
    int order_;
    Terms terms_;
};

bool is_zero_vector(std::span<const Cyclotomic> v);

}  // namespace expocalc
