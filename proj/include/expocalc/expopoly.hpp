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

#include <span>
#include <vector>

#include "expocalc/exponential.hpp"
#include "expocalc/group.hpp"
#include "expocalc/vector_polynomial.hpp"

namespace expocalc {

struct ExpoTerm {
    Exponential exponential;
    VectorPolynomial polynomial;

    friend bool operator==(const ExpoTerm&, const ExpoTerm&) = default;
};

/// Exponential polynomial f = sum_i m_i * p_i on a finitely generated abelian
/// group, with values in C^k.
///
/// Always held in canonical form: exponentials pairwise distinct, every
/// polynomial nonzero, terms sorted by exponential. Since characters times
/// monomials are linearly independent, two canonical forms are pointwise
/// equal exactly when they are structurally equal. The zero function is
/// the empty term list.
class ExpoPoly {
   public:
    using Value = std::vector<Cyclotomic>;

    ExpoPoly(GroupSpec group, int vector_dim, int order);
    ExpoPoly(GroupSpec group, int vector_dim, int order, std::vector<ExpoTerm> terms);

    static ExpoPoly constant(const GroupSpec& group, const Value& value, int order);
    static ExpoPoly single(const GroupSpec& group, const Exponential& m, const VectorPolynomial& p);

    const GroupSpec& group() const noexcept { return group_; }
    int vector_dim() const noexcept { return vector_dim_; }
    int order() const noexcept { return order_; }
    const std::vector<ExpoTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Polynomial attached to m, or nullptr when m does not occur.
    const VectorPolynomial* polynomial_of(const Exponential& m) const;
    /// The m-part m * p_m (zero when m does not occur).
    ExpoPoly component(const Exponential& m) const;
    /// Largest total degree over all polynomials, -1 for zero.
    int max_degree() const noexcept;

    Value evaluate(const GroupElement& x) const;
    /// x -> f(x + g).
    ExpoPoly translate(const GroupElement& g) const;
    ExpoPoly scaled(const Cyclotomic& factor) const;
    ExpoPoly promoted(int order) const;
    /// Scalar function x -> sum_j u_j f_j(x).
    ExpoPoly compose_functional(std::span<const Cyclotomic> functional) const;
    /// Pointwise product; at least one factor must be scalar-valued.
    ExpoPoly times(const ExpoPoly& other) const;

    friend ExpoPoly operator+(const ExpoPoly& a, const ExpoPoly& b);
    friend ExpoPoly operator-(const ExpoPoly& a, const ExpoPoly& b);
    friend bool operator==(const ExpoPoly& a, const ExpoPoly& b);

   private:
    void canonicalize(std::vector<ExpoTerm> terms);

    GroupSpec group_;
    int vector_dim_;
    int order_;
    std::vector<ExpoTerm> terms_;
};

/// alpha * f + beta * g in canonical form.
ExpoPoly add_scale(const ExpoPoly& f, const ExpoPoly& g, const Cyclotomic& alpha, const Cyclotomic& beta);

}  // namespace expocalc
