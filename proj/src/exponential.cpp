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

#include "expocalc/exponential.hpp"

#include "expocalc/errors.hpp"

namespace expocalc {

Exponential::Exponential(const GroupSpec& group, int order, std::vector<Cyclotomic> free_values,
                         std::vector<Cyclotomic> torsion_values)
    : free_values_(std::move(free_values)), torsion_values_(std::move(torsion_values)), order_(order) {
    if (static_cast<int>(free_values_.size()) != group.free_rank() ||
        static_cast<int>(torsion_values_.size()) != group.torsion_count()) {
        throw StructuralError("exponential generator values do not match group " + group.to_string());
    }
    for (auto& v : free_values_) {
        v = v.promoted(order_);
        if (v.is_zero()) throw PreconditionError("exponential value on a free generator must be nonzero");
    }
    for (std::size_t j = 0; j < torsion_values_.size(); ++j) {
        auto& v = torsion_values_[j];
        v = v.promoted(order_);
        if (!v.pow(group.torsion_orders()[j]).is_one()) {
            throw PreconditionError("exponential value on torsion generator " + std::to_string(j + 1) +
                                    " is not a root of unity of order dividing " +
                                    std::to_string(group.torsion_orders()[j]));
        }
    }
}

Exponential Exponential::trivial(const GroupSpec& group, int order) {
    return Exponential(order, std::vector<Cyclotomic>(group.free_rank(), Cyclotomic(order, 1)),
                       std::vector<Cyclotomic>(group.torsion_count(), Cyclotomic(order, 1)));
}

bool Exponential::is_trivial() const noexcept {
    for (const auto& v : free_values_) {
        if (!v.is_one()) return false;
    }
    for (const auto& v : torsion_values_) {
        if (!v.is_one()) return false;
    }
    return true;
}

Cyclotomic Exponential::evaluate(const GroupElement& x) const {
    if (x.free.size() != free_values_.size() || x.torsion.size() != torsion_values_.size()) {
        throw StructuralError("exponential evaluated at an element of a different group");
    }
    Cyclotomic out(order_, 1);
    for (std::size_t i = 0; i < free_values_.size(); ++i) {
        if (x.free[i] != 0 && !free_values_[i].is_one()) out *= free_values_[i].pow(x.free[i]);
    }
    for (std::size_t j = 0; j < torsion_values_.size(); ++j) {
        if (x.torsion[j] != 0 && !torsion_values_[j].is_one()) out *= torsion_values_[j].pow(x.torsion[j]);
    }
    return out;
}

Exponential Exponential::promoted(int order) const {
    if (order == order_) return *this;
    Exponential out = *this;
    out.order_ = order;
    for (auto& v : out.free_values_) v = v.promoted(order);
    for (auto& v : out.torsion_values_) v = v.promoted(order);
    return out;
}

Exponential Exponential::times(const Exponential& other) const {
    if (other.free_values_.size() != free_values_.size() || other.torsion_values_.size() != torsion_values_.size()) {
        throw StructuralError("product of exponentials on different groups");
    }
    const int order = static_cast<int>(lcm_order(order_, other.order_));
    Exponential a = promoted(order);
    const Exponential b = other.promoted(order);
    for (std::size_t i = 0; i < a.free_values_.size(); ++i) a.free_values_[i] *= b.free_values_[i];
    for (std::size_t j = 0; j < a.torsion_values_.size(); ++j) a.torsion_values_[j] *= b.torsion_values_[j];
    return a;
}

Exponential Exponential::inverse() const {
    Exponential out = *this;
    for (auto& v : out.free_values_) v = v.inverse();
    for (auto& v : out.torsion_values_) v = v.inverse();
    return out;
}

}  // namespace expocalc
