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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace expocalc {

/// Point of Z^r x Z_{n_1} x ... x Z_{n_t}. Torsion residues are kept in [0, n_j).
struct GroupElement {
    std::vector<std::int64_t> free;
    std::vector<std::int64_t> torsion;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^r x Z_{n_1} x ... x Z_{n_t}.
/// The listing order of the torsion factors is part of the identity.
class GroupSpec {
   public:
    GroupSpec() = default;
    GroupSpec(int free_rank, std::vector<std::int64_t> torsion_orders);

    static GroupSpec free(int rank) { return GroupSpec(rank, {}); }
    static GroupSpec cyclic(std::int64_t n) { return GroupSpec(0, {n}); }
    static GroupSpec trivial() { return GroupSpec(); }

    int free_rank() const noexcept { return free_rank_; }
    int torsion_free_rank() const noexcept { return free_rank_; }
    const std::vector<std::int64_t>& torsion_orders() const noexcept { return torsion_; }
    int torsion_count() const noexcept { return static_cast<int>(torsion_.size()); }

    bool is_finite() const noexcept { return free_rank_ == 0; }
    /// |G|; throws NotFiniteGroup when free_rank > 0.
    std::int64_t order() const;
    /// lcm(4, n_1, ..., n_t): the smallest cyclotomic order carrying i and all torsion characters.
    std::int64_t minimal_cyclotomic_order() const;

    /// Builds an element, reducing torsion residues; throws StructuralError on shape mismatch.
    GroupElement element(std::vector<std::int64_t> free, std::vector<std::int64_t> torsion = {}) const;
    GroupElement zero() const;
    /// Free generators e_1..e_r followed by the torsion generators.
    std::vector<GroupElement> generators() const;

    bool contains(const GroupElement& a) const noexcept;
    /// Throws StructuralError unless contains(a).
    void require(const GroupElement& a) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
    GroupElement multiple(const GroupElement& a, std::int64_t k) const;

    /// All elements of a finite group in mixed-radix order (last factor fastest).
    std::vector<GroupElement> elements() const;
    /// Position of a in elements(); finite groups only.
    std::size_t index_of(const GroupElement& a) const;

    std::string to_string() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

   private:
    int free_rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// G1 x G2: free parts concatenated, then torsion parts concatenated.
GroupSpec group_product(const GroupSpec& left, const GroupSpec& right);
GroupElement embed_pair(const GroupSpec& left, const GroupSpec& right, const GroupElement& a,
                        const GroupElement& b);
GroupElement project_left(const GroupSpec& left, const GroupSpec& right, const GroupElement& x);
GroupElement project_right(const GroupSpec& left, const GroupSpec& right, const GroupElement& x);

}  // namespace expocalc
