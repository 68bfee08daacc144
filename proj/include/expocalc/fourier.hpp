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
#include <functional>
#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/exponential.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/group.hpp"

namespace expocalc {

/// Total map from a finite group to C^k, stored in GroupSpec::elements() order.
class Table {
   public:
    using Value = std::vector<Cyclotomic>;

    /// Zero table. The order is raised to cover the group's torsion.
    Table(GroupSpec group, int vector_dim, int order);

    static Table of(const ExpoPoly& f);
    static Table from_function(const GroupSpec& group, int vector_dim, int order,
                               const std::function<Value(const GroupElement&)>& fn);

    const GroupSpec& group() const noexcept { return group_; }
    int vector_dim() const noexcept { return vector_dim_; }
    int order() const noexcept { return order_; }
    const std::vector<Value>& values() const noexcept { return values_; }

    const Value& at(const GroupElement& x) const { return values_[group_.index_of(x)]; }
    void set(const GroupElement& x, Value v);

    Table promoted(int order) const;

    friend bool operator==(const Table& a, const Table& b);

   private:
    GroupSpec group_;
    int vector_dim_;
    int order_;
    std::vector<Value> values_;
};

/// Complex measure on a finite group, as a density against counting measure.
class Measure {
   public:
    Measure(GroupSpec group, int order);
    /// Unit mass at g.
    static Measure dirac(const GroupSpec& group, const GroupElement& g, int order);

    const GroupSpec& group() const noexcept { return group_; }
    int order() const noexcept { return order_; }
    const Cyclotomic& weight(const GroupElement& t) const { return weights_[group_.index_of(t)]; }
    void set(const GroupElement& t, const Cyclotomic& w);

   private:
    GroupSpec group_;
    int order_;
    std::vector<Cyclotomic> weights_;
};

/// gamma_y(x) = prod zeta_{n_j}^{y_j x_j}.
struct Character {
    std::vector<std::int64_t> dual_index;
    Exponential exponential;

    Cyclotomic operator()(const GroupElement& x) const { return exponential.evaluate(x); }
};

Character character(const GroupSpec& group, std::vector<std::int64_t> dual_index, int order);
/// All |G| characters, in the enumeration order of the dual index.
std::vector<Character> characters(const GroupSpec& group, int order = 4);

/// e_gamma = (1/|G|) sum_t gamma(-t) f(t).
Table::Value fourier_coefficient(const Table& f, const Character& gamma);
Table::Value fourier_coefficient(const ExpoPoly& f, const Character& gamma);

/// (f * g)(x) = (1/|G|) sum_t f(x - t) g(t), g scalar-valued.
Table convolve(const Table& f, const Table& g);
/// (mu * f)(x) = sum_t f(x - t) mu({t}).
Table measure_convolve(const Measure& mu, const Table& f);

/// sum_gamma e_gamma gamma as an exponential polynomial.
ExpoPoly synthesize(const Table& f);

/// (mu * f) * g == mu * (f * g).
bool convolution_associativity_check(const Measure& mu, const Table& f, const Table& g);

}  // namespace expocalc
