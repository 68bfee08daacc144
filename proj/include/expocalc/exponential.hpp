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
#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/group.hpp"

namespace expocalc {

/// Homomorphism m: G -> C^*, given by its values on the generators.
///
/// Free generator values are arbitrary nonzero scalars; the value on the
/// j-th torsion generator must be an n_j-th root of unity. Both conditions
/// are checked exactly at construction. All values live in Q(zeta_order).
class Exponential {
   public:
    Exponential() = default;
    Exponential(const GroupSpec& group, int order, std::vector<Cyclotomic> free_values,
                std::vector<Cyclotomic> torsion_values);

    /// The constant function 1.
    static Exponential trivial(const GroupSpec& group, int order);

    const std::vector<Cyclotomic>& free_values() const noexcept { return free_values_; }
    const std::vector<Cyclotomic>& torsion_values() const noexcept { return torsion_values_; }
    int order() const noexcept { return order_; }

    bool is_trivial() const noexcept;
    /// m(x) = prod free_values[i]^x_i * prod torsion_values[j]^y_j.
    Cyclotomic evaluate(const GroupElement& x) const;

    Exponential promoted(int order) const;
    /// Pointwise product m1 * m2 (again an exponential).
    Exponential times(const Exponential& other) const;
    /// Pointwise inverse 1/m.
    Exponential inverse() const;

    friend bool operator==(const Exponential&, const Exponential&) = default;
    /// Lexicographic on the concatenated generator values.
    friend auto operator<=>(const Exponential&, const Exponential&) = default;

   private:
    Exponential(int order, std::vector<Cyclotomic> free_values, std::vector<Cyclotomic> torsion_values)
        : free_values_(std::move(free_values)), torsion_values_(std::move(torsion_values)), order_(order) {}

    std::vector<Cyclotomic> free_values_;
    std::vector<Cyclotomic> torsion_values_;
    int order_ = 4;
};

}  // namespace expocalc
