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

#include "expocalc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "expocalc/errors.hpp"

namespace expocalc {

std::string rational_to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str(10);
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

namespace detail {

struct CyclotomicField {
    int order = 0;
    int phi = 0;
    // Monic Phi_N, low degree first; size phi + 1.
    std::vector<Rational> modulus;
    // zeta^j reduced, j in [0, order).
    std::vector<std::vector<Rational>> powers;
};

namespace {

using IntPoly = std::vector<mpz_class>;

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact quotient by x^d - 1.
IntPoly divide_binomial(const IntPoly& a, int d) {
    const std::size_t deg = a.size() - 1;
    IntPoly quotient(deg - d + 1, 0);
    IntPoly rem = a;
    for (std::size_t i = deg + 1; i-- > static_cast<std::size_t>(d);) {
        const mpz_class c = rem[i];
        if (c == 0) continue;
        quotient[i - d] = c;
        rem[i] = 0;
        rem[i - d] += c;
    }
    for (const auto& r : rem) {
        if (r != 0) throw std::logic_error("cyclotomic construction: inexact division");
    }
    return quotient;
}

// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}.
IntPoly cyclotomic_polynomial(int n) {
    IntPoly numerator{1};
    std::vector<int> denominators;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = moebius(n / d);
        if (mu == 0) continue;
        IntPoly binomial(d + 1, 0);
        binomial[0] = -1;
        binomial[d] = 1;
        if (mu == 1) {
            numerator = multiply(numerator, binomial);
        } else {
            denominators.push_back(d);
        }
    }
    for (int d : denominators) numerator = divide_binomial(numerator, d);
    return numerator;
}

std::unique_ptr<CyclotomicField> build_field(int order) {
    auto field = std::make_unique<CyclotomicField>();
    field->order = order;
    field->phi = static_cast<int>(euler_phi(order));
    const IntPoly phi_poly = cyclotomic_polynomial(order);
    field->modulus.reserve(phi_poly.size());
    for (const auto& c : phi_poly) field->modulus.emplace_back(c);

    const int phi = field->phi;
    field->powers.assign(order, std::vector<Rational>(phi, 0));
    std::vector<Rational> current(phi, 0);
    current[0] = 1;
    for (int j = 0; j < order; ++j) {
        field->powers[j] = current;
        // current *= x, then reduce x^phi = -sum modulus[i] x^i.
        Rational carry = current[phi - 1];
        for (int i = phi - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = 0;
        if (carry != 0) {
            for (int i = 0; i < phi; ++i) current[i] -= carry * field->modulus[i];
        }
    }
    return field;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int order) {
    if (order < 1) throw PreconditionError("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = build_field(order);
    return *slot;
}

}  // namespace detail

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    for (std::size_t i = a.size() - 1;; --i) {
        if (sgn(a[i]) != 0) {
            const Rational c = a[i] / lead;
            const std::size_t shift = i - (b.size() - 1);
            q[shift] = c;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        }
        if (i == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(4) {}

Cyclotomic::Cyclotomic(int order) : field_(&detail::cyclotomic_field(order)) {
    coeffs_.assign(field_->phi, 0);
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs) {
    const auto& field = detail::cyclotomic_field(order);
    if (coeffs.size() != static_cast<std::size_t>(field.phi)) {
        throw StructuralError("cyclotomic of order " + std::to_string(order) + " needs " +
                              std::to_string(field.phi) + " coefficients, got " +
                              std::to_string(coeffs.size()));
    }
    for (auto& c : coeffs) c.canonicalize();
    return Cyclotomic(&field, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_power_sum(int order, std::span<const Rational> coeffs) {
    const auto& field = detail::cyclotomic_field(order);
    std::vector<Rational> acc(field.phi, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        const auto& row = field.powers[j % field.order];
        for (int i = 0; i < field.phi; ++i) {
            if (sgn(row[i]) != 0) acc[i] += coeffs[j] * row[i];
        }
    }
    return Cyclotomic(&field, std::move(acc));
}

Cyclotomic Cyclotomic::zeta(int order, std::int64_t k) {
    const auto& field = detail::cyclotomic_field(order);
    std::int64_t r = k % order;
    if (r < 0) r += order;
    return Cyclotomic(&field, field.powers[r]);
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k, int order) {
    if (n < 1 || order % n != 0) {
        throw UnsupportedEmbedding("zeta_" + std::to_string(n) + " does not embed in Q(zeta_" +
                                   std::to_string(order) + ")");
    }
    return zeta(order, k * (order / n));
}

Cyclotomic Cyclotomic::imaginary_unit(int order) { return root_of_unity(4, 1, order); }

int Cyclotomic::order() const noexcept { return field_->order; }

bool Cyclotomic::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_rational() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw ArithmeticError("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int new_order) const {
    if (new_order == order()) return *this;
    if (new_order % order() != 0) {
        throw UnsupportedEmbedding("Q(zeta_" + std::to_string(order()) + ") does not embed in Q(zeta_" +
                                   std::to_string(new_order) + ")");
    }
    const int step = new_order / order();
    std::vector<Rational> powers(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) powers[j * step] = coeffs_[j];
    return from_power_sum(new_order, powers);
}

namespace {

void unify(Cyclotomic& a, Cyclotomic& b) {
    if (a.order() == b.order()) return;
    const int common = static_cast<int>(lcm_order(a.order(), b.order()));
    a = a.promoted(common);
    b = b.promoted(common);
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    if (other.order() != order()) {
        Cyclotomic rhs = other;
        unify(*this, rhs);
        return *this += rhs;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
    if (other.order() != order()) {
        Cyclotomic rhs = other;
        unify(*this, rhs);
        return *this -= rhs;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

namespace {

// Product of two coefficient lists of the same field, reduced, left in the
// first phi entries of a thread-local scratch buffer.
std::vector<Rational>& reduced_product(const detail::CyclotomicField& field, const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
    thread_local std::vector<Rational> scratch;
    thread_local Rational term;
    const std::size_t phi = a.size();
    if (scratch.size() < 2 * phi - 1) scratch.resize(2 * phi - 1);
    for (std::size_t i = 0; i < 2 * phi - 1; ++i) mpq_set_ui(scratch[i].get_mpq_t(), 0, 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            mpq_add(scratch[i + j].get_mpq_t(), scratch[i + j].get_mpq_t(), term.get_mpq_t());
        }
    }
    for (std::size_t j = 2 * phi - 1; j-- > phi;) {
        mpq_ptr c = scratch[j].get_mpq_t();
        if (mpq_sgn(c) == 0) continue;
        const std::size_t base = j - phi;
        for (std::size_t i = 0; i < phi; ++i) {
            mpq_srcptr m = field.modulus[i].get_mpq_t();
            if (mpq_sgn(m) == 0) continue;
            mpq_ptr dst = scratch[base + i].get_mpq_t();
            if (mpq_cmp_si(m, 1, 1) == 0) {
                mpq_sub(dst, dst, c);
            } else if (mpq_cmp_si(m, -1, 1) == 0) {
                mpq_add(dst, dst, c);
            } else {
                mpq_mul(term.get_mpq_t(), c, m);
                mpq_sub(dst, dst, term.get_mpq_t());
            }
        }
        mpq_set_ui(c, 0, 1);
    }
    return scratch;
}

}  // namespace

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
    if (other.order() != order()) {
        Cyclotomic rhs = other;
        unify(*this, rhs);
        return *this *= rhs;
    }
    if (is_rational() && other.is_rational()) {
        coeffs_[0] *= other.coeffs_[0];
        return *this;
    }
    auto& product = reduced_product(*field_, coeffs_, other.coeffs_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) mpq_swap(coeffs_[i].get_mpq_t(), product[i].get_mpq_t());
    return *this;
}

Cyclotomic& Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != order() || b.order() != order()) return *this += a * b;
    if (a.is_rational() && b.is_rational()) {
        thread_local Rational term;
        mpq_mul(term.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
        mpq_add(coeffs_[0].get_mpq_t(), coeffs_[0].get_mpq_t(), term.get_mpq_t());
        return *this;
    }
    const auto& product = reduced_product(*field_, a.coeffs_, b.coeffs_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(product[i]) != 0) mpq_add(coeffs_[i].get_mpq_t(), coeffs_[i].get_mpq_t(), product[i].get_mpq_t());
    }
    return *this;
}

Cyclotomic& Cyclotomic::sub_product(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != order() || b.order() != order()) return *this -= a * b;
    if (a.is_rational() && b.is_rational()) {
        thread_local Rational term;
        mpq_mul(term.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
        mpq_sub(coeffs_[0].get_mpq_t(), coeffs_[0].get_mpq_t(), term.get_mpq_t());
        return *this;
    }
    const auto& product = reduced_product(*field_, a.coeffs_, b.coeffs_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(product[i]) != 0) mpq_sub(coeffs_[i].get_mpq_t(), coeffs_[i].get_mpq_t(), product[i].get_mpq_t());
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(order()) + ")");
    if (is_rational()) return Cyclotomic(order(), 1 / coeffs_[0]);
    // Extended Euclid: track s with s * a == r (mod Phi_N).
    QPoly r0 = field_->modulus;
    QPoly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    QPoly s0{};
    QPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: modulus not irreducible");
    }
    const Rational scale = 1 / r1[0];
    for (auto& c : s1) c *= scale;
    return from_power_sum(order(), s1);
}

Cyclotomic Cyclotomic::pow(std::int64_t exponent) const {
    Cyclotomic base = exponent < 0 ? inverse() : *this;
    std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                   : static_cast<std::uint64_t>(exponent);
    Cyclotomic result(order(), 1);
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::scaled(const Rational& factor) const {
    Cyclotomic out = *this;
    if (sgn(factor) == 0) {
        for (auto& c : out.coeffs_) c = 0;
        return out;
    }
    for (auto& c : out.coeffs_) {
        if (sgn(c) != 0) c *= factor;
    }
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    const int n = order();
    std::vector<Rational> powers(n, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) powers[(n - static_cast<int>(j)) % n] += coeffs_[j];
    return from_power_sum(n, powers);
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / order();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        acc += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    Cyclotomic x = a;
    Cyclotomic y = b;
    unify(x, y);
    return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        Cyclotomic x = a;
        Cyclotomic y = b;
        unify(x, y);
        return x <=> y;
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace expocalc
