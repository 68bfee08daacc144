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

#include "expocalc/expopoly.hpp"

#include <map>

#include "expocalc/errors.hpp"

namespace expocalc {

ExpoPoly::ExpoPoly(GroupSpec group, int vector_dim, int order)
    : group_(std::move(group)), vector_dim_(vector_dim), order_(order) {
    if (vector_dim_ < 1) throw PreconditionError("vector dimension must be at least 1");
    if (order_ % 4 != 0) throw PreconditionError("cyclotomic order must be divisible by 4");
    for (auto n : group_.torsion_orders()) {
        if (order_ % n != 0) {
            throw UnsupportedEmbedding("cyclotomic order " + std::to_string(order_) +
                                       " is not divisible by torsion order " + std::to_string(n));
        }
    }
}

ExpoPoly::ExpoPoly(GroupSpec group, int vector_dim, int order, std::vector<ExpoTerm> terms)
    : ExpoPoly(std::move(group), vector_dim, order) {
    canonicalize(std::move(terms));
}

void ExpoPoly::canonicalize(std::vector<ExpoTerm> terms) {
    std::map<Exponential, VectorPolynomial> merged;
    for (auto& term : terms) {
        if (term.polynomial.num_vars() != group_.free_rank()) {
            throw StructuralError("polynomial variables do not match the free rank of " + group_.to_string());
        }
        if (term.polynomial.vector_dim() != vector_dim_) {
            throw StructuralError("term has vector dimension " + std::to_string(term.polynomial.vector_dim()) +
                                  ", expected " + std::to_string(vector_dim_));
        }
        if (static_cast<int>(term.exponential.free_values().size()) != group_.free_rank() ||
            static_cast<int>(term.exponential.torsion_values().size()) != group_.torsion_count()) {
            throw StructuralError("exponential does not match group " + group_.to_string());
        }
        if (term.polynomial.is_zero()) continue;
        Exponential m = term.exponential.promoted(order_);
        auto it = merged.find(m);
        if (it == merged.end()) {
            merged.emplace(std::move(m), term.polynomial.promoted(order_));
        } else {
            it->second.add_scaled(term.polynomial, Cyclotomic(order_, 1));
        }
    }
    terms_.clear();
    for (auto& [m, p] : merged) {
        if (!p.is_zero()) terms_.push_back(ExpoTerm{m, std::move(p)});
    }
}

ExpoPoly ExpoPoly::constant(const GroupSpec& group, const Value& value, int order) {
    const Exponential one = Exponential::trivial(group, order);
    return ExpoPoly(group, static_cast<int>(value.size()), order,
                    {ExpoTerm{one, VectorPolynomial::constant(group.free_rank(), value, order)}});
}

ExpoPoly ExpoPoly::single(const GroupSpec& group, const Exponential& m, const VectorPolynomial& p) {
    return ExpoPoly(group, p.vector_dim(), p.order(), {ExpoTerm{m, p}});
}

const VectorPolynomial* ExpoPoly::polynomial_of(const Exponential& m) const {
    const Exponential key = m.promoted(order_);
    for (const auto& t : terms_) {
        if (t.exponential == key) return &t.polynomial;
    }
    return nullptr;
}

ExpoPoly ExpoPoly::component(const Exponential& m) const {
    ExpoPoly out(group_, vector_dim_, order_);
    if (const auto* p = polynomial_of(m)) out.terms_.push_back(ExpoTerm{m.promoted(order_), *p});
    return out;
}

int ExpoPoly::max_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.polynomial.degree());
    return d;
}

ExpoPoly::Value ExpoPoly::evaluate(const GroupElement& x) const {
    group_.require(x);
    Value out(vector_dim_, Cyclotomic(order_));
    for (const auto& t : terms_) {
        const Value p = t.polynomial.evaluate(x.free);
        if (is_zero_vector(p)) continue;
        const Cyclotomic m = t.exponential.evaluate(x);
        for (int j = 0; j < vector_dim_; ++j) {
            if (!p[j].is_zero()) out[j] += m * p[j];
        }
    }
    return out;
}

ExpoPoly ExpoPoly::translate(const GroupElement& g) const {
    group_.require(g);
    ExpoPoly out(group_, vector_dim_, order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        // T_g(m p) = m(g) * m * T_g p; the exponential is unchanged.
        const Cyclotomic factor = t.exponential.evaluate(g);
        out.terms_.push_back(ExpoTerm{t.exponential, t.polynomial.shifted(g.free).scaled(factor)});
    }
    return out;
}

ExpoPoly ExpoPoly::scaled(const Cyclotomic& factor) const {
    const int order = static_cast<int>(lcm_order(order_, factor.order()));
    if (order != order_) return promoted(order).scaled(factor);
    if (factor.is_zero()) return ExpoPoly(group_, vector_dim_, order_);
    ExpoPoly out(group_, vector_dim_, order_);
    for (const auto& t : terms_) out.terms_.push_back(ExpoTerm{t.exponential, t.polynomial.scaled(factor)});
    return out;
}

ExpoPoly ExpoPoly::promoted(int order) const {
    if (order == order_) return *this;
    std::vector<ExpoTerm> terms = terms_;
    return ExpoPoly(group_, vector_dim_, order, std::move(terms));
}

ExpoPoly ExpoPoly::compose_functional(std::span<const Cyclotomic> functional) const {
    if (static_cast<int>(functional.size()) != vector_dim_) {
        throw StructuralError("functional has length " + std::to_string(functional.size()) +
                              " but the function has vector dimension " + std::to_string(vector_dim_));
    }
    std::vector<ExpoTerm> terms;
    for (const auto& t : terms_) terms.push_back(ExpoTerm{t.exponential, t.polynomial.compose(functional)});
    return ExpoPoly(group_, 1, order_, std::move(terms));
}

ExpoPoly ExpoPoly::times(const ExpoPoly& other) const {
    if (!(other.group_ == group_)) throw StructuralError("product of functions on different groups");
    if (vector_dim_ != 1 && other.vector_dim_ != 1) {
        throw StructuralError("product of two vector-valued functions is undefined");
    }
    const int order = static_cast<int>(lcm_order(order_, other.order_));
    std::vector<ExpoTerm> terms;
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            terms.push_back(ExpoTerm{a.exponential.times(b.exponential), a.polynomial.times(b.polynomial)});
        }
    }
    return ExpoPoly(group_, std::max(vector_dim_, other.vector_dim_), order, std::move(terms));
}

namespace {

void require_compatible(const ExpoPoly& a, const ExpoPoly& b) {
    if (!(a.group() == b.group())) {
        throw StructuralError("functions on different groups: " + a.group().to_string() + " vs " +
                              b.group().to_string());
    }
    if (a.vector_dim() != b.vector_dim()) {
        throw StructuralError("functions with different vector dimensions: " + std::to_string(a.vector_dim()) +
                              " vs " + std::to_string(b.vector_dim()));
    }
}

}  // namespace

ExpoPoly add_scale(const ExpoPoly& f, const ExpoPoly& g, const Cyclotomic& alpha, const Cyclotomic& beta) {
    require_compatible(f, g);
    const int order = static_cast<int>(lcm_order(lcm_order(f.order(), g.order()), lcm_order(alpha.order(), beta.order())));
    const ExpoPoly fp = f.promoted(order);
    const ExpoPoly gp = g.promoted(order);
    std::vector<ExpoTerm> terms;
    terms.reserve(f.terms().size() + g.terms().size());
    if (!alpha.is_zero()) {
        for (const auto& t : fp.terms()) terms.push_back(ExpoTerm{t.exponential, t.polynomial.scaled(alpha)});
    }
    if (!beta.is_zero()) {
        for (const auto& t : gp.terms()) terms.push_back(ExpoTerm{t.exponential, t.polynomial.scaled(beta)});
    }
    return ExpoPoly(f.group(), f.vector_dim(), order, std::move(terms));
}

ExpoPoly operator+(const ExpoPoly& a, const ExpoPoly& b) {
    return add_scale(a, b, Cyclotomic(a.order(), 1), Cyclotomic(b.order(), 1));
}

ExpoPoly operator-(const ExpoPoly& a, const ExpoPoly& b) {
    return add_scale(a, b, Cyclotomic(a.order(), 1), Cyclotomic(b.order(), -1));
}

bool operator==(const ExpoPoly& a, const ExpoPoly& b) {
    return a.group_ == b.group_ && a.vector_dim_ == b.vector_dim_ && a.terms_ == b.terms_;
}

}  // namespace expocalc
