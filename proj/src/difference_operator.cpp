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

#include "expocalc/difference_operator.hpp"

#include <algorithm>
#include <map>

#include "expocalc/errors.hpp"

namespace expocalc {

DifferenceOperator::DifferenceOperator(GroupSpec group, int order) : group_(std::move(group)), order_(order) {}

DifferenceOperator::DifferenceOperator(GroupSpec group, int order, std::vector<OperatorTerm> terms)
    : DifferenceOperator(std::move(group), order) {
    std::map<GroupElement, Cyclotomic> merged;
    for (auto& t : terms) {
        group_.require(t.shift);
        if (t.coeff.is_zero()) continue;
        auto [it, inserted] = merged.try_emplace(t.shift, t.coeff.promoted(order_));
        if (!inserted) it->second += t.coeff.promoted(order_);
    }
    for (auto& [shift, coeff] : merged) {
        if (!coeff.is_zero()) terms_.push_back(OperatorTerm{std::move(coeff), shift});
    }
}

DifferenceOperator DifferenceOperator::identity(const GroupSpec& group, int order) {
    return translation(group, group.zero(), order);
}

DifferenceOperator DifferenceOperator::translation(const GroupSpec& group, const GroupElement& g, int order) {
    return DifferenceOperator(group, order, {OperatorTerm{Cyclotomic(order, 1), g}});
}

DifferenceOperator DifferenceOperator::difference(const GroupSpec& group, const GroupElement& g, int order) {
    return DifferenceOperator(group, order,
                              {OperatorTerm{Cyclotomic(order, 1), g}, OperatorTerm{Cyclotomic(order, -1), group.zero()}});
}

ExpoPoly DifferenceOperator::apply(const ExpoPoly& f) const {
    if (!(f.group() == group_)) {
        throw StructuralError("operator on " + group_.to_string() + " applied to a function on " +
                              f.group().to_string());
    }
    const int order = static_cast<int>(lcm_order(order_, f.order()));
    const ExpoPoly base = f.promoted(order);
    std::vector<ExpoTerm> terms;
    for (const auto& t : terms_) {
        const ExpoPoly shifted = base.translate(t.shift);
        const Cyclotomic c = t.coeff.promoted(order);
        for (const auto& term : shifted.terms()) terms.push_back(ExpoTerm{term.exponential, term.polynomial.scaled(c)});
    }
    return ExpoPoly(group_, f.vector_dim(), order, std::move(terms));
}

DifferenceOperator DifferenceOperator::compose(const DifferenceOperator& other) const {
    if (!(other.group_ == group_)) throw StructuralError("composing operators on different groups");
    const int order = static_cast<int>(lcm_order(order_, other.order_));
    std::vector<OperatorTerm> terms;
    terms.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            terms.push_back(OperatorTerm{a.coeff.promoted(order) * b.coeff.promoted(order), group_.add(a.shift, b.shift)});
        }
    }
    return DifferenceOperator(group_, order, std::move(terms));
}

DifferenceOperator DifferenceOperator::scaled(const Cyclotomic& factor) const {
    const int order = static_cast<int>(lcm_order(order_, factor.order()));
    std::vector<OperatorTerm> terms;
    for (const auto& t : terms_) terms.push_back(OperatorTerm{t.coeff.promoted(order) * factor.promoted(order), t.shift});
    return DifferenceOperator(group_, order, std::move(terms));
}

DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b) {
    if (!(a.group_ == b.group_)) throw StructuralError("adding operators on different groups");
    std::vector<OperatorTerm> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return DifferenceOperator(a.group_, static_cast<int>(lcm_order(a.order_, b.order_)), std::move(terms));
}

DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b) {
    return a + b.scaled(Cyclotomic(b.order_, -1));
}

bool operator<(const DifferenceOperator& a, const DifferenceOperator& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const OperatorTerm& x, const OperatorTerm& y) {
                                            if (x.shift != y.shift) return x.shift < y.shift;
                                            return x.coeff < y.coeff;
                                        });
}

ExpoPoly apply_diff_op(const DifferenceOperator& op, const ExpoPoly& f) { return op.apply(f); }

DifferenceOperator compose_ops(const DifferenceOperator& outer, const DifferenceOperator& inner) {
    return outer.compose(inner);
}

}  // namespace expocalc
