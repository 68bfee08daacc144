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

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "expocalc/cyclotomic.hpp"
#include "expocalc/errors.hpp"
#include "support/generators.hpp"

using namespace expocalc;

namespace {

std::complex<double> unit_root(int order, int k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * k / order);
}

}  // namespace

TEST_SUITE("cyclotomic") {
    TEST_CASE("gaussian integers") {
        const Cyclotomic one(4, 1);
        const Cyclotomic i = Cyclotomic::zeta(4);
        CHECK((one + i) * (one - i) == Cyclotomic(4, 2));
        CHECK(i * i == Cyclotomic(4, -1));
        CHECK(i.pow(4).is_one());
        CHECK(i.pow(-1) == -i);
    }

    TEST_CASE("reduction modulo Phi_12") {
        // Phi_12 = x^4 - x^2 + 1, so x^4 = x^2 - 1 after one long-division step.
        const Cyclotomic z4 = Cyclotomic::zeta(12, 4);
        const Cyclotomic expected = Cyclotomic::zeta(12, 2) - Cyclotomic(12, 1);
        CHECK(z4 == expected);
        REQUIRE(z4.coeffs().size() == 4);
        CHECK(z4.coeffs()[0] == -1);
        CHECK(z4.coeffs()[1] == 0);
        CHECK(z4.coeffs()[2] == 1);
        CHECK(z4.coeffs()[3] == 0);
        const auto direct = unit_root(12, 4);
        const auto via_remainder = unit_root(12, 2) - 1.0;
        CHECK(std::abs(direct - via_remainder) < 1e-12);
        CHECK(std::abs(z4.to_complex() - direct) < 1e-12);
    }

    TEST_CASE("roots of unity") {
        CHECK(Cyclotomic::root_of_unity(2, 1, 4) == Cyclotomic(4, -1));
        CHECK(Cyclotomic::root_of_unity(6, 3, 12) == Cyclotomic(12, -1));
        const Cyclotomic w = Cyclotomic::root_of_unity(5, 2, 20);
        CHECK(w.pow(5).is_one());
        CHECK_FALSE(w.is_one());
        CHECK_THROWS_AS(Cyclotomic::root_of_unity(3, 1, 4), UnsupportedEmbedding);
        CHECK_THROWS_AS(Cyclotomic::root_of_unity(5, 1, 12), UnsupportedEmbedding);
    }

    TEST_CASE("float bridge") {
        const auto two = Cyclotomic(4, 2).to_complex();
        CHECK(two.real() == 2.0);
        CHECK(two.imag() == 0.0);
        const auto i = Cyclotomic::zeta(4).to_complex();
        CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-12);
        const auto v = (Cyclotomic(12, 1) + Cyclotomic::root_of_unity(3, 1, 12)).to_complex();
        const std::complex<double> expected = 1.0 + unit_root(3, 1);
        CHECK(std::abs(v - expected) < 1e-9);
        CHECK(std::abs(v - std::complex<double>(0.5, 0.8660254037844386)) < 1e-9);
    }

    TEST_CASE("division by zero") {
        CHECK_THROWS_AS(Cyclotomic(12, 1) / Cyclotomic(12), ArithmeticError);
        CHECK_THROWS_AS(Cyclotomic(4).inverse(), ArithmeticError);
    }

    TEST_CASE("field axioms on random triples") {
        for (int order : {4, 12, 20}) {
            testing::Generator gen(1000 + order);
            for (int trial = 0; trial < 200; ++trial) {
                const Cyclotomic a = gen.cyclotomic(order);
                const Cyclotomic b = gen.cyclotomic(order);
                const Cyclotomic c = gen.cyclotomic(order);
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a * b == b * a);
                CHECK(a - a == Cyclotomic(order));
                if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            }
        }
    }

    TEST_CASE("float bridge is a ring homomorphism") {
        testing::Generator gen(7);
        for (int trial = 0; trial < 200; ++trial) {
            const int order = trial % 2 == 0 ? 12 : 20;
            const Cyclotomic a = gen.cyclotomic(order, 3);
            const Cyclotomic b = gen.cyclotomic(order, 3);
            CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9);
            CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
        }
    }

    TEST_CASE("primitivity of zeta_N") {
        for (int order : {4, 12, 20, 24}) {
            CHECK(Cyclotomic::zeta(order).pow(order).is_one());
            for (int k = 1; k < order; ++k) CHECK_FALSE(Cyclotomic::zeta(order, k).is_one());
        }
    }

    TEST_CASE("embedding between fields") {
        const Cyclotomic i4 = Cyclotomic::zeta(4);
        const Cyclotomic i12 = i4.promoted(12);
        CHECK(i12 == Cyclotomic::zeta(12, 3));
        CHECK(i4 == i12);
        // mixed-order arithmetic happens in the common field
        const Cyclotomic w = Cyclotomic::root_of_unity(3, 1, 12);
        CHECK((i4 * w).order() == 12);
        CHECK((i4 * w).pow(12).is_one());
        CHECK_THROWS_AS(i12.promoted(20), UnsupportedEmbedding);
    }

    TEST_CASE("conjugation") {
        testing::Generator gen(3);
        for (int trial = 0; trial < 50; ++trial) {
            const Cyclotomic a = gen.cyclotomic(12);
            CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-9);
            CHECK((a * a.conj()).conj() == a * a.conj());
        }
    }

    TEST_CASE("rational strings") {
        CHECK(rational_to_string(Rational(6, 4)) == "3/2");
        CHECK(rational_to_string(Rational(-2)) == "-2");
        CHECK(rational_from_string("-10/4") == Rational(-5, 2));
        CHECK_THROWS(rational_from_string("1/0"));
        CHECK_THROWS(rational_from_string("abc"));
    }
}
