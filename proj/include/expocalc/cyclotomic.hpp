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

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace expocalc {

using Rational = mpq_class;

/// Canonical lowest-terms text of a rational ("3", "-1/2").
std::string rational_to_string(const Rational& q);
/// Inverse of rational_to_string; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

std::int64_t euler_phi(std::int64_t n);
std::int64_t lcm_order(std::int64_t a, std::int64_t b);

namespace detail {
struct CyclotomicField;
const CyclotomicField& cyclotomic_field(int order);
}  // namespace detail

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored as phi(N) rational coefficients over the power basis
/// 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
/// polynomial. The representation is unique, so equality is coefficient
/// equality. Binary operations on values of different orders first embed
/// both operands into Q(zeta_lcm).
class Cyclotomic {
   public:
    /// Zero of Q(zeta_4).
    Cyclotomic();
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const Rational& value);
    Cyclotomic(int order, long value) : Cyclotomic(order, Rational(value)) {}

    /// Exact coefficient list of length phi(order).
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);
    /// Sum of coeffs[j] * zeta_N^j for an arbitrary-length list; reduced.
    static Cyclotomic from_power_sum(int order, std::span<const Rational> coeffs);
    /// zeta_N^k.
    static Cyclotomic zeta(int order, std::int64_t k = 1);
    /// zeta_n^k embedded in Q(zeta_N); throws UnsupportedEmbedding when n does not divide N.
    static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k, int order);
    /// The imaginary unit zeta_4 in Q(zeta_N); N must be divisible by 4.
    static Cyclotomic imaginary_unit(int order);

    int order() const noexcept;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Throws ArithmeticError when the value is not rational.
    Rational as_rational() const;

    /// Embeds the value in Q(zeta_M); M must be a multiple of order().
    Cyclotomic promoted(int new_order) const;

    Cyclotomic inverse() const;
    Cyclotomic pow(std::int64_t exponent) const;
    Cyclotomic scaled(const Rational& factor) const;
    Cyclotomic conj() const;

    std::complex<double> to_complex() const;

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator/=(const Cyclotomic& other);
    /// this += a * b without temporaries.
    Cyclotomic& add_product(const Cyclotomic& a, const Cyclotomic& b);
    /// this -= a * b without temporaries.
    Cyclotomic& sub_product(const Cyclotomic& a, const Cyclotomic& b);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    /// Lexicographic on coefficient lists after embedding in a common field.
    friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

   private:
    Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    const detail::CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

/// Zero of the same field as the argument.
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.order()); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic(c.order(), 1); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline void sub_product(Cyclotomic& acc, const Cyclotomic& a, const Cyclotomic& b) { acc.sub_product(a, b); }
inline void sub_product(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }
inline void add_product(Cyclotomic& acc, const Cyclotomic& a, const Cyclotomic& b) { acc.add_product(a, b); }
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }

}  // namespace expocalc
