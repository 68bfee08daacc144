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

#include "expocalc/group.hpp"

#include <numeric>

#include "expocalc/errors.hpp"

namespace expocalc {

namespace {

std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

}  // namespace

GroupSpec::GroupSpec(int free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
    if (free_rank_ < 0) throw PreconditionError("free rank must be nonnegative");
    for (auto n : torsion_) {
        if (n < 2) throw PreconditionError("torsion orders must be at least 2");
    }
}

std::int64_t GroupSpec::order() const {
    if (!is_finite()) throw NotFiniteGroup("group " + to_string() + " is infinite");
    std::int64_t n = 1;
    for (auto t : torsion_) n *= t;
    return n;
}

std::int64_t GroupSpec::minimal_cyclotomic_order() const {
    std::int64_t n = 4;
    for (auto t : torsion_) n = std::lcm(n, t);
    return n;
}

GroupElement GroupSpec::element(std::vector<std::int64_t> free, std::vector<std::int64_t> torsion) const {
    if (static_cast<int>(free.size()) != free_rank_ || torsion.size() != torsion_.size()) {
        throw StructuralError("element shape does not match group " + to_string());
    }
    for (std::size_t j = 0; j < torsion.size(); ++j) torsion[j] = reduce(torsion[j], torsion_[j]);
    return GroupElement{std::move(free), std::move(torsion)};
}

GroupElement GroupSpec::zero() const {
    return GroupElement{std::vector<std::int64_t>(free_rank_, 0), std::vector<std::int64_t>(torsion_.size(), 0)};
}

std::vector<GroupElement> GroupSpec::generators() const {
    std::vector<GroupElement> out;
    for (int i = 0; i < free_rank_; ++i) {
        GroupElement g = zero();
        g.free[i] = 1;
        out.push_back(std::move(g));
    }
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        GroupElement g = zero();
        g.torsion[j] = 1;
        out.push_back(std::move(g));
    }
    return out;
}

bool GroupSpec::contains(const GroupElement& a) const noexcept {
    if (static_cast<int>(a.free.size()) != free_rank_ || a.torsion.size() != torsion_.size()) return false;
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        if (a.torsion[j] < 0 || a.torsion[j] >= torsion_[j]) return false;
    }
    return true;
}

void GroupSpec::require(const GroupElement& a) const {
    if (!contains(a)) throw StructuralError("element does not belong to group " + to_string());
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    GroupElement out = a;
    for (int i = 0; i < free_rank_; ++i) out.free[i] += b.free[i];
    for (std::size_t j = 0; j < torsion_.size(); ++j) out.torsion[j] = reduce(a.torsion[j] + b.torsion[j], torsion_[j]);
    return out;
}

GroupElement GroupSpec::negate(const GroupElement& a) const { return multiple(a, -1); }

GroupElement GroupSpec::subtract(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }

GroupElement GroupSpec::multiple(const GroupElement& a, std::int64_t k) const {
    require(a);
    GroupElement out = a;
    for (auto& x : out.free) x *= k;
    for (std::size_t j = 0; j < torsion_.size(); ++j) out.torsion[j] = reduce(a.torsion[j] * reduce(k, torsion_[j]), torsion_[j]);
    return out;
}

std::vector<GroupElement> GroupSpec::elements() const {
    const std::int64_t count = order();
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(count));
    GroupElement current = zero();
    for (std::int64_t idx = 0; idx < count; ++idx) {
        out.push_back(current);
        for (std::size_t j = torsion_.size(); j-- > 0;) {
            if (++current.torsion[j] < torsion_[j]) break;
            current.torsion[j] = 0;
        }
    }
    return out;
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
    if (!is_finite()) throw NotFiniteGroup("group " + to_string() + " is infinite");
    require(a);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < torsion_.size(); ++j) idx = idx * torsion_[j] + static_cast<std::size_t>(a.torsion[j]);
    return idx;
}

std::string GroupSpec::to_string() const {
    std::string out;
    if (free_rank_ == 1) out = "Z";
    if (free_rank_ > 1) out = "Z^" + std::to_string(free_rank_);
    for (auto n : torsion_) {
        if (!out.empty()) out += "x";
        out += "Z" + std::to_string(n);
    }
    return out.empty() ? "Z^0" : out;
}

GroupSpec group_product(const GroupSpec& left, const GroupSpec& right) {
    std::vector<std::int64_t> torsion = left.torsion_orders();
    torsion.insert(torsion.end(), right.torsion_orders().begin(), right.torsion_orders().end());
    return GroupSpec(left.free_rank() + right.free_rank(), std::move(torsion));
}

GroupElement embed_pair(const GroupSpec& left, const GroupSpec& right, const GroupElement& a,
                        const GroupElement& b) {
    left.require(a);
    right.require(b);
    GroupElement out = a;
    out.free.insert(out.free.end(), b.free.begin(), b.free.end());
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    return out;
}

GroupElement project_left(const GroupSpec& left, const GroupSpec& right, const GroupElement& x) {
    group_product(left, right).require(x);
    return GroupElement{{x.free.begin(), x.free.begin() + left.free_rank()},
                        {x.torsion.begin(), x.torsion.begin() + left.torsion_count()}};
}

GroupElement project_right(const GroupSpec& left, const GroupSpec& right, const GroupElement& x) {
    group_product(left, right).require(x);
    return GroupElement{{x.free.begin() + left.free_rank(), x.free.end()},
                        {x.torsion.begin() + left.torsion_count(), x.torsion.end()}};
}

}  // namespace expocalc
