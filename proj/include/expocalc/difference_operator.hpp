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

#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/group.hpp"

namespace expocalc {

struct OperatorTerm {
    Cyclotomic coeff;
    GroupElement shift;

    friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// Finite linear combination sum_t c_t T_{g_t} of translation operators.
/// Canonical: shifts distinct and sorted, no zero coefficients; the zero
/// operator is the empty list.
class DifferenceOperator {
   public:
    DifferenceOperator(GroupSpec group, int order);
    DifferenceOperator(GroupSpec group, int order, std::vector<OperatorTerm> terms);

    static DifferenceOperator zero(const GroupSpec& group, int order) { return DifferenceOperator(group, order); }
    /// T_0.
    static DifferenceOperator identity(const GroupSpec& group, int order);
    /// T_g.
    static DifferenceOperator translation(const GroupSpec& group, const GroupElement& g, int order);
    /// Delta_g = T_g - T_0.
    static DifferenceOperator difference(const GroupSpec& group, const GroupElement& g, int order);

    const GroupSpec& group() const noexcept { return group_; }
    int order() const noexcept { return order_; }
    const std::vector<OperatorTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    ExpoPoly apply(const ExpoPoly& f) const;
    /// (this o other): apply other first.
    DifferenceOperator compose(const DifferenceOperator& other) const;
    DifferenceOperator scaled(const Cyclotomic& factor) const;

    friend DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b);
    friend DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b);
    friend bool operator==(const DifferenceOperator& a, const DifferenceOperator& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const DifferenceOperator& a, const DifferenceOperator& b);

   private:
    GroupSpec group_;
    int order_;
    std::vector<OperatorTerm> terms_;
};

ExpoPoly apply_diff_op(const DifferenceOperator& op, const ExpoPoly& f);
DifferenceOperator compose_ops(const DifferenceOperator& outer, const DifferenceOperator& inner);

}  // namespace expocalc
