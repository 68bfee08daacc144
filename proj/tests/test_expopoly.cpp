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

#include <algorithm>

#include "doctest.h"
#include "expocalc/difference_operator.hpp"
#include "expocalc/errors.hpp"
#include "expocalc/expopoly.hpp"
#include "support/generators.hpp"

using namespace expocalc;

namespace {

constexpr int kOrder = 4;
const GroupSpec kZ = GroupSpec::free(1);

Cyclotomic c(long v) { return Cyclotomic(kOrder, v); }

GroupElement at(std::int64_t x) { return kZ.element({x}); }

Exponential base(long b) { return Exponential(kZ, kOrder, {c(b)}, {}); }

/// Scalar polynomial sum coeffs[i] x^i on Z.
VectorPolynomial poly(std::vector<long> coeffs) {
    VectorPolynomial p(1, 1, kOrder);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) p.add_term({static_cast<int>(i)}, {c(coeffs[i])});
    }
    return p;
}

ExpoPoly term(long b, std::vector<long> coeffs) { return ExpoPoly::single(kZ, base(b), poly(std::move(coeffs))); }

void check_pointwise(const ExpoPoly& f, const ExpoPoly& g, std::int64_t radius) {
    for (const auto& x : testing::box_points(f.group(), radius)) CHECK(f.evaluate(x) == g.evaluate(x));
}

}  // namespace

TEST_SUITE("expopoly") {
    TEST_CASE("evaluation") {
        CHECK(term(1, {0, 0, 1}).evaluate(at(3)) == ExpoPoly::Value{c(9)});
        CHECK(term(2, {0, 1}).evaluate(at(3)) == ExpoPoly::Value{c(24)});
        VectorPolynomial p(1, 2, kOrder);
        p.add_term({1}, {c(1), c(0)});
        p.add_term({2}, {c(0), c(1)});
        const ExpoPoly f = ExpoPoly::single(kZ, base(1), p);
        CHECK(f.evaluate(at(-2)) == ExpoPoly::Value{c(-2), c(4)});
        CHECK(term(2, {1}).evaluate(at(-2)) == ExpoPoly::Value{Cyclotomic(kOrder, Rational(1, 4))});
        CHECK_THROWS_AS(f.evaluate(GroupSpec::free(2).zero()), StructuralError);
    }

    TEST_CASE("translation") {
        const ExpoPoly f = term(2, {0, 1});
        CHECK(f.translate(at(1)) == term(2, {2, 2}));
        const ExpoPoly k = ExpoPoly::constant(kZ, {c(7)}, kOrder);
        CHECK(k.translate(at(5)) == k);
        CHECK_THROWS_AS(f.translate(GroupSpec::cyclic(4).zero()), StructuralError);
    }

    TEST_CASE("translation composes additively") {
        testing::Generator gen(21);
        const std::vector<GroupSpec> groups{kZ, GroupSpec(1, {4}), GroupSpec(2, {})};
        for (int trial = 0; trial < 100; ++trial) {
            const GroupSpec& g = groups[trial % groups.size()];
            const ExpoPoly f = gen.expopoly(g, 1, 2, 2, kOrder);
            const auto a = gen.element(g, 3);
            const auto b = gen.element(g, 3);
            const ExpoPoly lhs = f.translate(g.add(a, b));
            const ExpoPoly rhs = f.translate(b).translate(a);
            CHECK(lhs == rhs);
            check_pointwise(lhs, rhs, 1);
        }
    }

    TEST_CASE("translate agrees with shifted evaluation") {
        testing::Generator gen(22);
        const std::vector<GroupSpec> groups{kZ, GroupSpec(1, {4}), GroupSpec(2, {2})};
        for (int trial = 0; trial < 200; ++trial) {
            const GroupSpec& g = groups[trial % groups.size()];
            const ExpoPoly f = gen.expopoly(g, 2, 2, 2, kOrder);
            const auto shift = gen.element(g, 4);
            const auto x = gen.element(g, 4);
            CHECK(f.translate(shift).evaluate(x) == f.evaluate(g.add(x, shift)));
        }
    }

    TEST_CASE("difference operators") {
        const auto d1 = DifferenceOperator::difference(kZ, at(1), kOrder);
        CHECK(apply_diff_op(d1, term(1, {0, 0, 1})) == term(1, {1, 2}));
        CHECK(apply_diff_op(d1, term(2, {1})) == term(2, {1}));
        const auto annihilator =
            DifferenceOperator::translation(kZ, at(1), kOrder) - DifferenceOperator::identity(kZ, kOrder).scaled(c(2));
        CHECK(apply_diff_op(annihilator, term(2, {1})).is_zero());
        CHECK_THROWS_AS(apply_diff_op(d1, ExpoPoly(GroupSpec::free(2), 1, kOrder)), StructuralError);
    }

    TEST_CASE("difference equals T_g minus T_0") {
        testing::Generator gen(23);
        const GroupSpec g(1, {4});
        for (int trial = 0; trial < 50; ++trial) {
            const ExpoPoly f = gen.expopoly(g, 1, 3, 3, kOrder);
            const auto shift = gen.element(g, 3);
            const auto direct = DifferenceOperator::difference(g, shift, kOrder).apply(f);
            CHECK(direct == f.translate(shift) - f);
        }
    }

    TEST_CASE("add_scale") {
        testing::Generator gen(24);
        const ExpoPoly f = gen.expopoly(kZ, 1, 3, 3, kOrder);
        CHECK(add_scale(f, f, c(1), c(-1)).is_zero());
        const ExpoPoly merged = add_scale(term(2, {0, 1}), term(2, {1}), c(1), c(1));
        REQUIRE(merged.terms().size() == 1);
        CHECK(merged == term(2, {1, 1}));
        CHECK((term(2, {1}) + term(3, {1})).terms().size() == 2);
        CHECK_THROWS_AS(add_scale(f, ExpoPoly(kZ, 2, kOrder), c(1), c(1)), StructuralError);
        CHECK_THROWS_AS(add_scale(f, ExpoPoly(GroupSpec::free(2), 1, kOrder), c(1), c(1)), StructuralError);
    }

    TEST_CASE("compose functional") {
        VectorPolynomial p(1, 2, kOrder);
        p.add_term({1}, {c(1), c(0)});
        p.add_term({2}, {c(0), c(1)});
        const ExpoPoly f = ExpoPoly::single(kZ, base(1), p);
        const std::vector<Cyclotomic> ones{c(1), c(1)};
        CHECK(f.compose_functional(ones) == term(1, {0, 1, 1}));

        VectorPolynomial q(1, 2, kOrder);
        q.add_term({1}, {c(1), c(1)});
        const std::vector<Cyclotomic> diff{c(1), c(-1)};
        CHECK(ExpoPoly::single(kZ, base(1), q).compose_functional(diff).is_zero());

        const ExpoPoly two_three(kZ, 2, kOrder,
                                 {ExpoTerm{base(2), VectorPolynomial::constant(1, {c(1), c(0)}, kOrder)},
                                  ExpoTerm{base(3), VectorPolynomial::constant(1, {c(0), c(1)}, kOrder)}});
        const std::vector<Cyclotomic> proj{c(5), c(0)};
        CHECK(two_three.compose_functional(proj) == term(2, {5}));
        const std::vector<Cyclotomic> too_short{c(1)};
        CHECK_THROWS_AS(two_three.compose_functional(too_short), StructuralError);
    }

    TEST_CASE("operator composition") {
        const auto d1 = DifferenceOperator::difference(kZ, at(1), kOrder);
        const auto expected = DifferenceOperator::translation(kZ, at(2), kOrder) -
                              DifferenceOperator::translation(kZ, at(1), kOrder).scaled(c(2)) +
                              DifferenceOperator::identity(kZ, kOrder);
        CHECK(compose_ops(d1, d1) == expected);
        CHECK(compose_ops(d1, DifferenceOperator::identity(kZ, kOrder)) == d1);
        CHECK_THROWS_AS(compose_ops(d1, DifferenceOperator::identity(GroupSpec::free(2), kOrder)), StructuralError);
    }

    TEST_CASE("composition is associative and matches sequential application") {
        testing::Generator gen(25);
        const GroupSpec g(1, {2});
        auto random_op = [&] {
            std::vector<OperatorTerm> terms;
            for (int t = 0; t < 3; ++t) terms.push_back({Cyclotomic(kOrder, gen.rational()), gen.element(g, 2)});
            return DifferenceOperator(g, kOrder, terms);
        };
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_op();
            const auto b = random_op();
            const auto d = random_op();
            const ExpoPoly f = gen.expopoly(g, 1, 2, 2, kOrder);
            CHECK(compose_ops(compose_ops(a, b), d) == compose_ops(a, compose_ops(b, d)));
            CHECK(compose_ops(compose_ops(a, b), d).apply(f) == a.apply(b.apply(d.apply(f))));
            CHECK(a.apply(f.translate(g.element({1}, {1}))) == a.apply(f).translate(g.element({1}, {1})));
        }
    }

    TEST_CASE("canonical form is unique") {
        testing::Generator gen(26);
        const GroupSpec g(1, {2});
        for (int trial = 0; trial < 200; ++trial) {
            const ExpoPoly f = gen.expopoly(g, 1, 2, 3, kOrder);
            // split every polynomial into two halves under the same exponential and shuffle
            std::vector<ExpoTerm> pieces;
            for (const auto& t : f.terms()) {
                VectorPolynomial half = t.polynomial.scaled(Cyclotomic(kOrder, Rational(1, 3)));
                VectorPolynomial rest = t.polynomial - half;
                pieces.push_back({t.exponential, half});
                pieces.push_back({t.exponential, rest});
            }
            std::shuffle(pieces.begin(), pieces.end(), gen.rng());
            const ExpoPoly rebuilt(g, 1, kOrder, pieces);
            CHECK(rebuilt == f);
            CHECK(rebuilt.terms() == f.terms());
            CHECK(ExpoPoly(g, 1, kOrder, f.terms()).terms() == f.terms());
            for (const auto& x : testing::box_points(g, 2)) CHECK(rebuilt.evaluate(x) == f.evaluate(x));
        }
    }

    TEST_CASE("structural equality matches pointwise equality") {
        testing::Generator gen(27);
        const GroupSpec g(1, {4});
        int equal_pairs = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const ExpoPoly f = gen.expopoly(g, 1, 1, 2, kOrder);
            ExpoPoly h = gen.expopoly(g, 1, 1, 2, kOrder);
            if (trial % 3 == 0) h = f.translate(g.zero());
            const int d = std::max(f.max_degree(), h.max_degree());
            bool pointwise = true;
            for (const auto& x : testing::box_points(g, d + 1)) pointwise = pointwise && f.evaluate(x) == h.evaluate(x);
            CHECK(pointwise == (f == h));
            equal_pairs += pointwise ? 1 : 0;
        }
        CHECK(equal_pairs >= 30);
    }

    TEST_CASE("exponentials are multiplicative") {
        testing::Generator gen(28);
        const GroupSpec g(2, {4, 6});
        for (int trial = 0; trial < 100; ++trial) {
            const Exponential m = gen.exponential(g, 12);
            const auto a = gen.element(g, 5);
            const auto b = gen.element(g, 5);
            CHECK(m.evaluate(g.add(a, b)) == m.evaluate(a) * m.evaluate(b));
        }
    }

    TEST_CASE("exponential validation") {
        CHECK_THROWS_AS(Exponential(kZ, kOrder, {c(0)}, {}), PreconditionError);
        const GroupSpec z4 = GroupSpec::cyclic(4);
        CHECK_THROWS_AS(Exponential(z4, kOrder, {}, {c(2)}), PreconditionError);
        CHECK_NOTHROW(Exponential(z4, kOrder, {}, {Cyclotomic::imaginary_unit(kOrder)}));
    }

    TEST_CASE("zero function") {
        const ExpoPoly zero(kZ, 1, kOrder);
        CHECK(zero.is_zero());
        CHECK(zero.max_degree() == -1);
        CHECK(ExpoPoly::single(kZ, base(2), VectorPolynomial(1, 1, kOrder)).is_zero());
    }
}
