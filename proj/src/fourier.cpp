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

#include "expocalc/fourier.hpp"

#include <numeric>

#include "expocalc/errors.hpp"

namespace expocalc {

namespace {

int field_order(const GroupSpec& group, int order) {
    if (!group.is_finite()) throw NotFiniteGroup("group " + group.to_string() + " is infinite");
    return static_cast<int>(std::lcm<std::int64_t>(group.minimal_cyclotomic_order(), order));
}

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
    if (!(a == b)) throw StructuralError("tables live on different groups: " + a.to_string() + " vs " + b.to_string());
}

Table::Value promote_all(Table::Value v, int order) {
    for (auto& c : v) c = c.promoted(order);
    return v;
}

}  // namespace

Table::Table(GroupSpec group, int vector_dim, int order)
    : group_(std::move(group)), vector_dim_(vector_dim), order_(field_order(group_, order)) {
    if (vector_dim_ < 1) throw PreconditionError("vector_dim must be at least 1");
    values_.assign(static_cast<std::size_t>(group_.order()), Value(vector_dim_, Cyclotomic(order_)));
}

Table Table::of(const ExpoPoly& f) {
    return from_function(f.group(), f.vector_dim(), f.order(), [&f](const GroupElement& x) { return f.evaluate(x); });
}

Table Table::from_function(const GroupSpec& group, int vector_dim, int order,
                           const std::function<Value(const GroupElement&)>& fn) {
    Table t(group, vector_dim, order);
    for (const auto& x : group.elements()) t.set(x, fn(x));
    return t;
}

void Table::set(const GroupElement& x, Value v) {
    if (static_cast<int>(v.size()) != vector_dim_) throw StructuralError("table value has the wrong dimension");
    int order = order_;
    for (const auto& c : v) order = static_cast<int>(std::lcm<std::int64_t>(order, c.order()));
    if (order != order_) *this = promoted(order);
    values_[group_.index_of(x)] = promote_all(std::move(v), order_);
}

Table Table::promoted(int order) const {
    Table out(group_, vector_dim_, order);
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = promote_all(values_[i], out.order_);
    return out;
}

bool operator==(const Table& a, const Table& b) {
    return a.group_ == b.group_ && a.vector_dim_ == b.vector_dim_ && a.values_ == b.values_;
}

Measure::Measure(GroupSpec group, int order) : group_(std::move(group)), order_(field_order(group_, order)) {
    weights_.assign(static_cast<std::size_t>(group_.order()), Cyclotomic(order_));
}

Measure Measure::dirac(const GroupSpec& group, const GroupElement& g, int order) {
    Measure mu(group, order);
    mu.set(g, Cyclotomic(mu.order(), 1));
    return mu;
}

void Measure::set(const GroupElement& t, const Cyclotomic& w) {
    if (w.order() % order_ != 0 && order_ % w.order() != 0) {
        throw UnsupportedEmbedding("weight order " + std::to_string(w.order()) + " does not embed");
    }
    if (order_ % w.order() != 0) {
        order_ = static_cast<int>(std::lcm<std::int64_t>(order_, w.order()));
        for (auto& x : weights_) x = x.promoted(order_);
    }
    weights_[group_.index_of(t)] = w.promoted(order_);
}

Character character(const GroupSpec& group, std::vector<std::int64_t> dual_index, int order) {
    const int n = field_order(group, order);
    const auto& orders = group.torsion_orders();
    if (dual_index.size() != orders.size()) throw StructuralError("dual index has the wrong length");
    std::vector<Cyclotomic> torsion;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        dual_index[j] = ((dual_index[j] % orders[j]) + orders[j]) % orders[j];
        torsion.push_back(Cyclotomic::root_of_unity(orders[j], dual_index[j], n));
    }
    return Character{dual_index, Exponential(group, n, {}, std::move(torsion))};
}

std::vector<Character> characters(const GroupSpec& group, int order) {
    std::vector<Character> out;
    for (const auto& y : group.elements()) out.push_back(character(group, y.torsion, order));
    return out;
}

Table::Value fourier_coefficient(const Table& f, const Character& gamma) {
    const GroupSpec& g = f.group();
    const int order = static_cast<int>(std::lcm<std::int64_t>(f.order(), gamma.exponential.order()));
    Table::Value acc(f.vector_dim(), Cyclotomic(order));
    for (const auto& t : g.elements()) {
        const Cyclotomic w = gamma(g.negate(t));
        const auto& v = f.at(t);
        for (int j = 0; j < f.vector_dim(); ++j) {
            if (!v[j].is_zero()) acc[j] += w * v[j];
        }
    }
    const Rational inv(1, g.order());
    for (auto& c : acc) c = c.scaled(inv);
    return acc;
}

Table::Value fourier_coefficient(const ExpoPoly& f, const Character& gamma) {
    return fourier_coefficient(Table::of(f), gamma);
}

Table convolve(const Table& f, const Table& g) {
    require_same_group(f.group(), g.group());
    if (g.vector_dim() != 1) throw StructuralError("convolve: second argument must be scalar-valued");
    const GroupSpec& grp = f.group();
    const int order = static_cast<int>(std::lcm<std::int64_t>(f.order(), g.order()));
    Table out(grp, f.vector_dim(), order);
    const Rational inv(1, grp.order());
    const auto elems = grp.elements();
    for (const auto& x : elems) {
        Table::Value acc(f.vector_dim(), Cyclotomic(order));
        for (const auto& t : elems) {
            const Cyclotomic& w = g.at(t)[0];
            if (w.is_zero()) continue;
            const auto& v = f.at(grp.subtract(x, t));
            for (int j = 0; j < f.vector_dim(); ++j) acc[j] += v[j] * w;
        }
        for (auto& c : acc) c = c.scaled(inv);
        out.set(x, std::move(acc));
    }
    return out;
}

Table measure_convolve(const Measure& mu, const Table& f) {
    require_same_group(mu.group(), f.group());
    const GroupSpec& grp = f.group();
    const int order = static_cast<int>(std::lcm<std::int64_t>(f.order(), mu.order()));
    Table out(grp, f.vector_dim(), order);
    const auto elems = grp.elements();
    for (const auto& x : elems) {
        Table::Value acc(f.vector_dim(), Cyclotomic(order));
        for (const auto& t : elems) {
            const Cyclotomic& w = mu.weight(t);
            if (w.is_zero()) continue;
            const auto& v = f.at(grp.subtract(x, t));
            for (int j = 0; j < f.vector_dim(); ++j) acc[j] += v[j] * w;
        }
        out.set(x, std::move(acc));
    }
    return out;
}

ExpoPoly synthesize(const Table& f) {
    const GroupSpec& g = f.group();
    std::vector<ExpoTerm> terms;
    for (const auto& gamma : characters(g, f.order())) {
        const auto e = fourier_coefficient(f, gamma);
        if (is_zero_vector(e)) continue;
        terms.push_back(ExpoTerm{gamma.exponential, VectorPolynomial::constant(0, e, f.order())});
    }
    return ExpoPoly(g, f.vector_dim(), f.order(), std::move(terms));
}

bool convolution_associativity_check(const Measure& mu, const Table& f, const Table& g) {
    return convolve(measure_convolve(mu, f), g) == measure_convolve(mu, convolve(f, g));
}

}  // namespace expocalc
