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

#include "doctest.h"
#include "expocalc/errors.hpp"
#include "expocalc/fourier.hpp"
#include "expocalc/translate_span.hpp"
#include "support/generators.hpp"

using namespace expocalc;

namespace {

const GroupSpec kZ2 = GroupSpec::cyclic(2);
const GroupSpec kZ4 = GroupSpec::cyclic(4);
const GroupSpec kZ6 = GroupSpec::cyclic(6);
const GroupSpec kZ6xZ4(0, {6, 4});

Table random_table(testing::Generator& gen, const GroupSpec& g, int k, int order = 12) {
    return Table::from_function(g, k, order, [&](const GroupElement&) {
        std::vector<Cyclotomic> v;
        for (int j = 0; j < k; ++j) v.push_back(gen.cyclotomic(order, 4));
        return v;
    });
}

Measure random_measure(testing::Generator& gen, const GroupSpec& g, int order = 12) {
    Measure mu(g, order);
    for (const auto& t : g.elements()) mu.set(t, gen.cyclotomic(order, 3));
    return mu;
}

Table character_table(const GroupSpec& g, const Character& gamma, int order) {
    return Table::from_function(g, 1, order,
                                [&](const GroupElement& x) { return std::vector<Cyclotomic>{gamma(x)}; });
}

Table delta_table(const GroupSpec& g, const Cyclotomic& mass) {
    Table t(g, 1, mass.order());
    t.set(g.zero(), {mass});
    return t;
}

Table scaled_table(const Table& f, const Cyclotomic& c) {
    return Table::from_function(f.group(), f.vector_dim(), f.order(), [&](const GroupElement& x) {
        auto v = f.at(x);
        for (auto& e : v) e = e * c;
        return v;
    });
}

}  // namespace

TEST_SUITE("characters") {
    TEST_CASE("Z_2") {
        const auto chars = characters(kZ2);
        REQUIRE(chars.size() == 2);
        CHECK(chars[0].exponential.is_trivial());
        CHECK(chars[1](kZ2.element({}, {1})) == Cyclotomic(4, -1));
        CHECK(chars[1](kZ2.element({}, {0})) == Cyclotomic(4, 1));
    }

    TEST_CASE("count and distinctness") {
        const auto chars = characters(kZ6xZ4);
        CHECK(chars.size() == 24);
        for (std::size_t a = 0; a < chars.size(); ++a) {
            for (std::size_t b = a + 1; b < chars.size(); ++b) CHECK_FALSE(chars[a].exponential == chars[b].exponential);
        }
        CHECK_THROWS_AS(characters(GroupSpec(1, {2})), NotFiniteGroup);
    }

    TEST_CASE("orthogonality on Z_4") {
        const auto chars = characters(kZ4);
        for (const auto& a : chars) {
            for (const auto& b : chars) {
                Cyclotomic sum(4);
                for (const auto& x : kZ4.elements()) sum += a(x) * b(x).conj();
                sum = sum.scaled(Rational(1, 4));
                CHECK(sum == Cyclotomic(4, a.dual_index == b.dual_index ? 1 : 0));
            }
        }
    }

    TEST_CASE("multiplicative with unit modulus") {
        testing::Generator gen(61);
        for (const auto& gamma : characters(kZ6xZ4, 12)) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto a = gen.element(kZ6xZ4);
                const auto b = gen.element(kZ6xZ4);
                CHECK(gamma(kZ6xZ4.add(a, b)) == gamma(a) * gamma(b));
                CHECK((gamma(a) * gamma(a).conj()).is_one());
            }
        }
    }
}

TEST_SUITE("fourier coefficients") {
    TEST_CASE("delta on Z_2") {
        const Table f = delta_table(kZ2, Cyclotomic(4, 1));
        for (const auto& gamma : characters(kZ2)) {
            CHECK(fourier_coefficient(f, gamma) == std::vector<Cyclotomic>{Cyclotomic(4, Rational(1, 2))});
        }
    }

    TEST_CASE("characters and constants") {
        const auto chars = characters(kZ6xZ4, 12);
        const Table g = character_table(kZ6xZ4, chars[7], 12);
        for (const auto& gamma : chars) {
            CHECK(fourier_coefficient(g, gamma) ==
                  std::vector<Cyclotomic>{Cyclotomic(12, gamma.dual_index == chars[7].dual_index ? 1 : 0)});
        }
        const ExpoPoly c = ExpoPoly::constant(kZ6xZ4, {Cyclotomic(12, 5), Cyclotomic(12, -2)}, 12);
        for (const auto& gamma : chars) {
            const auto e = fourier_coefficient(c, gamma);
            if (gamma.exponential.is_trivial()) {
                CHECK(e == std::vector<Cyclotomic>{Cyclotomic(12, 5), Cyclotomic(12, -2)});
            } else {
                CHECK(is_zero_vector(e));
            }
        }
    }
}

TEST_SUITE("convolution") {
    TEST_CASE("f * gamma = e_gamma gamma") {
        testing::Generator gen(62);
        for (int trial = 0; trial < 5; ++trial) {
            const Table f = random_table(gen, kZ4, 1 + trial % 2, 4);
            for (const auto& gamma : characters(kZ4)) {
                const auto e = fourier_coefficient(f, gamma);
                const Table expected = Table::from_function(kZ4, f.vector_dim(), 4, [&](const GroupElement& x) {
                    auto v = e;
                    for (auto& c : v) c = c * gamma(x);
                    return v;
                });
                CHECK(convolve(f, character_table(kZ4, gamma, 4)) == expected);
            }
        }
    }

    TEST_CASE("scaled delta is the identity") {
        testing::Generator gen(63);
        const Table f = random_table(gen, kZ6, 2);
        CHECK(convolve(f, delta_table(kZ6, Cyclotomic(12, 6))) == f);
        CHECK(measure_convolve(Measure::dirac(kZ6, kZ6.zero(), 12), f) == f);
        CHECK_THROWS_AS(convolve(f, delta_table(kZ4, Cyclotomic(4, 4))), StructuralError);
        CHECK_THROWS_AS(convolve(f, f), StructuralError);
    }

    TEST_CASE("dirac at g translates") {
        testing::Generator gen(64);
        const Table f = random_table(gen, kZ6, 1);
        const auto g = kZ6.element({}, {2});
        const Table moved = measure_convolve(Measure::dirac(kZ6, g, 12), f);
        for (const auto& x : kZ6.elements()) CHECK(moved.at(x) == f.at(kZ6.subtract(x, g)));
    }

    TEST_CASE("measure convolution stays in the translate span") {
        testing::Generator gen(65);
        for (int trial = 0; trial < 20; ++trial) {
            const Table f = random_table(gen, kZ6, 1 + trial % 2);
            const Table out = measure_convolve(random_measure(gen, kZ6), f);
            CHECK(translate_span(synthesize(f)).contains(synthesize(out)));
        }
    }

    TEST_CASE("associativity") {
        testing::Generator gen(66);
        for (int trial = 0; trial < 100; ++trial) {
            const Measure mu = random_measure(gen, kZ6);
            const Table f = random_table(gen, kZ6, 1 + trial % 2);
            const Table g = random_table(gen, kZ6, 1);
            CHECK(convolution_associativity_check(mu, f, g));
        }
        const Table f = random_table(gen, kZ6, 2);
        const Table g = random_table(gen, kZ6, 1);
        const Measure mu = random_measure(gen, kZ6);
        CHECK(measure_convolve(Measure::dirac(kZ6, kZ6.zero(), 12), convolve(f, g)) == convolve(f, g));
        const Table unit = delta_table(kZ6, Cyclotomic(12, 6));
        CHECK(convolve(measure_convolve(mu, f), unit) == measure_convolve(mu, f));
        CHECK(measure_convolve(mu, convolve(f, unit)) == measure_convolve(mu, f));
    }

    TEST_CASE("density measure matches function convolution") {
        testing::Generator gen(67);
        const Table f = random_table(gen, kZ6, 2);
        const Table g = random_table(gen, kZ6, 1);
        Measure mu(kZ6, 12);
        for (const auto& t : kZ6.elements()) mu.set(t, g.at(t)[0].scaled(Rational(1, 6)));
        CHECK(measure_convolve(mu, f) == convolve(f, g));
    }
}

TEST_SUITE("synthesis") {
    TEST_CASE("delta on Z_2") {
        const ExpoPoly s = synthesize(delta_table(kZ2, Cyclotomic(4, 1)));
        REQUIRE(s.terms().size() == 2);
        for (const auto& t : s.terms()) {
            CHECK(t.polynomial.coefficient({}) == std::vector<Cyclotomic>{Cyclotomic(4, Rational(1, 2))});
        }
    }

    TEST_CASE("a character synthesizes to itself") {
        const auto chars = characters(kZ6xZ4, 12);
        const ExpoPoly s = synthesize(character_table(kZ6xZ4, chars[9], 12));
        REQUIRE(s.terms().size() == 1);
        CHECK(s.terms()[0].exponential == chars[9].exponential);
        CHECK(s.terms()[0].polynomial.coefficient({}) == std::vector<Cyclotomic>{Cyclotomic(12, 1)});
    }

    TEST_CASE("exact inversion and span equality") {
        testing::Generator gen(68);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 1 + trial % 2;
            const Table f = random_table(gen, kZ6xZ4, k);
            const ExpoPoly s = synthesize(f);
            for (const auto& x : kZ6xZ4.elements()) CHECK(s.evaluate(x) == f.at(x));
            if (trial % 10 == 0) {
                std::vector<ExpoPoly> pieces;
                for (const auto& t : s.terms()) pieces.push_back(ExpoPoly::single(kZ6xZ4, t.exponential, t.polynomial));
                const auto spectral = FunctionSpan::of(pieces);
                const auto span = translate_span(s);
                CHECK(spectral.dim() == span.dim());
                for (const auto& b : span.basis()) CHECK(spectral.contains(b));
                for (const auto& p : pieces) CHECK(span.contains(p));
            }
        }
    }

    TEST_CASE("scaling commutes with synthesis") {
        testing::Generator gen(69);
        const Table f = random_table(gen, kZ6, 2);
        const Cyclotomic c = Cyclotomic::zeta(12);
        CHECK(synthesize(scaled_table(f, c)) == synthesize(f).scaled(c));
    }
}
