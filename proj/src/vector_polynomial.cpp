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

#include "expocalc/vector_polynomial.hpp"

#include <numeric>

#include "expocalc/errors.hpp"

namespace expocalc {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<Exponent> monomials_up_to(int num_vars, int max_degree) {
    std::vector<Exponent> out;
    if (max_degree < 0) return out;
    for (int d = 0; d <= max_degree; ++d) {
        // compositions of d into num_vars parts
        Exponent e(num_vars, 0);
        if (num_vars == 0) {
            if (d == 0) out.push_back(e);
            continue;
        }
        e[0] = d;
        while (true) {
            out.push_back(e);
            // next composition in reverse-lexicographic order
            int i = num_vars - 2;
            while (i >= 0 && e[i] == 0) --i;
            if (i < 0) break;
            --e[i];
            const int rest = e[num_vars - 1] + 1;
            e[num_vars - 1] = 0;
            e[i + 1] = rest;
        }
    }
    return out;
}

bool is_zero_vector(std::span<const Cyclotomic> v) {
    for (const auto& c : v) {
        if (!c.is_zero()) return false;
    }
    return true;
}

VectorPolynomial::VectorPolynomial(int num_vars, int vector_dim, int order)
    : num_vars_(num_vars), vector_dim_(vector_dim), order_(order) {
    if (vector_dim < 1) throw PreconditionError("vector dimension must be at least 1");
}

VectorPolynomial VectorPolynomial::constant(int num_vars, const Coefficient& value, int order) {
    return monomial(num_vars, Exponent(num_vars, 0), value, order);
}

VectorPolynomial VectorPolynomial::monomial(int num_vars, const Exponent& exponent, const Coefficient& coeff,
                                            int order) {
    VectorPolynomial p(num_vars, static_cast<int>(coeff.size()), order);
    p.add_term(exponent, coeff);
    return p;
}

int VectorPolynomial::degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

VectorPolynomial::Coefficient VectorPolynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) return Coefficient(vector_dim_, Cyclotomic(order_));
    return it->second;
}

void VectorPolynomial::add_term(const Exponent& exponent, const Coefficient& coeff) {
    if (static_cast<int>(exponent.size()) != num_vars_) throw StructuralError("monomial has wrong number of variables");
    if (static_cast<int>(coeff.size()) != vector_dim_) throw StructuralError("coefficient has wrong vector dimension");
    for (int e : exponent) {
        if (e < 0) throw PreconditionError("negative exponent in polynomial");
    }
    if (is_zero_vector(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, Coefficient{});
    if (inserted) {
        it->second.reserve(coeff.size());
        for (const auto& c : coeff) it->second.push_back(c.promoted(order_));
        return;
    }
    for (int j = 0; j < vector_dim_; ++j) {
        if (!coeff[j].is_zero()) it->second[j] += coeff[j].promoted(order_);
    }
    if (is_zero_vector(it->second)) terms_.erase(it);
}

void VectorPolynomial::add_scaled(const VectorPolynomial& other, const Cyclotomic& factor) {
    if (other.num_vars_ != num_vars_ || other.vector_dim_ != vector_dim_) {
        throw StructuralError("adding polynomials of different shapes");
    }
    if (factor.is_zero()) return;
    const bool unit = factor.is_one();
    for (const auto& [e, c] : other.terms_) {
        if (unit) {
            add_term(e, c);
            continue;
        }
        Coefficient scaled = c;
        for (auto& x : scaled) {
            if (!x.is_zero()) x *= factor;
        }
        add_term(e, scaled);
    }
}

VectorPolynomial::Coefficient VectorPolynomial::evaluate(std::span<const std::int64_t> point) const {
    if (static_cast<int>(point.size()) != num_vars_) throw StructuralError("evaluation point has wrong dimension");
    Coefficient out(vector_dim_, Cyclotomic(order_));
    for (const auto& [e, c] : terms_) {
        mpz_class value = 1;
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            mpz_class power;
            mpz_class base(static_cast<long>(point[i]));
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[i]));
            value *= power;
        }
        if (value == 0) continue;
        const Rational factor(value);
        for (int j = 0; j < vector_dim_; ++j) {
            if (!c[j].is_zero()) out[j] += c[j].scaled(factor);
        }
    }
    return out;
}

VectorPolynomial VectorPolynomial::shifted(std::span<const std::int64_t> shift) const {
    if (static_cast<int>(shift.size()) != num_vars_) throw StructuralError("shift has wrong dimension");
    bool identity = true;
    for (auto h : shift) identity = identity && h == 0;
    if (identity) return *this;

    VectorPolynomial out(num_vars_, vector_dim_, order_);
    for (const auto& [e, c] : terms_) {
        // prod_i (x_i + h_i)^{e_i} = prod_i sum_b C(e_i, b) h_i^{e_i - b} x_i^b
        std::vector<std::vector<mpz_class>> factors(num_vars_);
        for (int i = 0; i < num_vars_; ++i) {
            factors[i].resize(e[i] + 1);
            mpz_class h(static_cast<long>(shift[i]));
            for (int b = 0; b <= e[i]; ++b) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), e[i], b);
                mpz_class power;
                mpz_pow_ui(power.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(e[i] - b));
                factors[i][b] = binom * power;
            }
        }
        Exponent b(num_vars_, 0);
        while (true) {
            mpz_class weight = 1;
            for (int i = 0; i < num_vars_ && weight != 0; ++i) weight *= factors[i][b[i]];
            if (weight != 0) {
                Coefficient term = c;
                const Rational factor(weight);
                for (auto& x : term) {
                    if (!x.is_zero()) x = x.scaled(factor);
                }
                out.add_term(b, term);
            }
            int i = 0;
            for (; i < num_vars_; ++i) {
                if (++b[i] <= e[i]) break;
                b[i] = 0;
            }
            if (i == num_vars_) break;
        }
    }
    return out;
}

VectorPolynomial VectorPolynomial::scaled(const Cyclotomic& factor) const {
    VectorPolynomial out(num_vars_, vector_dim_, order_);
    out.add_scaled(*this, factor);
    return out;
}

VectorPolynomial VectorPolynomial::promoted(int order) const {
    VectorPolynomial out(num_vars_, vector_dim_, order);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

VectorPolynomial VectorPolynomial::homogeneous_part(int d) const {
    VectorPolynomial out(num_vars_, vector_dim_, order_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    }
    return out;
}

VectorPolynomial VectorPolynomial::compose(std::span<const Cyclotomic> functional) const {
    if (static_cast<int>(functional.size()) != vector_dim_) {
        throw StructuralError("functional length " + std::to_string(functional.size()) +
                              " does not match vector dimension " + std::to_string(vector_dim_));
    }
    VectorPolynomial out(num_vars_, 1, order_);
    for (const auto& [e, c] : terms_) {
        Cyclotomic acc(order_);
        for (int j = 0; j < vector_dim_; ++j) {
            if (!c[j].is_zero() && !functional[j].is_zero()) acc += functional[j] * c[j];
        }
        out.add_term(e, {acc});
    }
    return out;
}

VectorPolynomial VectorPolynomial::times(const VectorPolynomial& other) const {
    if (other.num_vars_ != num_vars_) throw StructuralError("product of polynomials in different variables");
    if (vector_dim_ != 1 && other.vector_dim_ != 1) {
        throw StructuralError("product of two vector-valued polynomials is undefined");
    }
    const int dim = std::max(vector_dim_, other.vector_dim_);
    const int order = static_cast<int>(lcm_order(order_, other.order_));
    VectorPolynomial out(num_vars_, dim, order);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponent e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            Coefficient c(dim, Cyclotomic(order));
            for (int j = 0; j < dim; ++j) {
                const Cyclotomic& x = vector_dim_ == 1 ? ca[0] : ca[j];
                const Cyclotomic& y = other.vector_dim_ == 1 ? cb[0] : cb[j];
                c[j] = x * y;
            }
            out.add_term(e, c);
        }
    }
    return out;
}

VectorPolynomial VectorPolynomial::with_leading_vars(int count) const {
    VectorPolynomial out(num_vars_ + count, vector_dim_, order_);
    for (const auto& [e, c] : terms_) {
        Exponent ext(count, 0);
        ext.insert(ext.end(), e.begin(), e.end());
        out.terms_.emplace(std::move(ext), c);
    }
    return out;
}

VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b) {
    VectorPolynomial out = a;
    out.add_scaled(b, Cyclotomic(b.order(), 1));
    return out;
}

VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b) {
    VectorPolynomial out = a;
    out.add_scaled(b, Cyclotomic(b.order(), -1));
    return out;
}

}  // namespace expocalc
