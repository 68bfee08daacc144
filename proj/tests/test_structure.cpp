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
#include "expocalc/errors.hpp"
#include "expocalc/structure.hpp"
#include "expocalc/translate_span.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace expocalc;
using testing::expo;
using testing::genpoly;

namespace {

constexpr int kOrder = 4;
const GroupSpec kZ = GroupSpec::free(1);
const GroupSpec kZ2 = GroupSpec::free(2);

Cyclotomic c(const Rational& v) { return Cyclotomic(kOrder, v); }

std::vector<Cyclotomic> add(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    std::vector<Cyclotomic> out;
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] + b[j]);
    return out;
}

ExpoPoly homogeneous(const ExpoPoly& f, int d) {
    if (f.is_zero()) return f;
    return ExpoPoly::single(f.group(), f.terms().front().exponential, f.terms().front().polynomial.homogeneous_part(d));
}

}  // namespace

TEST_SUITE("degree") {
    TEST_CASE("examples") {
        CHECK(degree(genpoly(kZ2, 1, {{{2, 1}, {1}}, {{1, 0}, {1}}})) == 3);
        CHECK(degree(ExpoPoly(kZ, 1, kOrder)) == -1);
        CHECK_THROWS_AS(degree(ExpoPoly::single(kZ, expo(kZ, {2}), testing::vpoly(1, 1, {{{0}, {1}}}))),
                        NotGeneralizedPolynomial);
    }

    TEST_CASE("degree is the least order of vanishing differences") {
        testing::Generator gen(31);
        for (int trial = 0; trial < 30; ++trial) {
            const ExpoPoly f = gen.genpoly(kZ2, 1, 3, kOrder);
            const int d = degree(f);
            const auto oracle = FunctionOracle::of(f);
            CHECK(check_genpoly_blackbox(oracle, std::max(d, 0), 20, 4, trial));
            if (d >= 1) CHECK_FALSE(check_genpoly_blackbox(oracle, d - 1, 40, 4, trial));
        }
    }

    TEST_CASE("black-box check") {
        const auto cubic = FunctionOracle::of(genpoly(kZ, 1, {{{3}, {1}}}));
        CHECK(check_genpoly_blackbox(cubic, 3, 50, 5));
        CHECK_FALSE(check_genpoly_blackbox(cubic, 2, 50, 5));
        const auto two = FunctionOracle::of(ExpoPoly::single(kZ, expo(kZ, {2}), testing::vpoly(1, 1, {{{0}, {1}}})));
        for (int n = 0; n <= 6; ++n) CHECK_FALSE(check_genpoly_blackbox(two, n, 20, 4));
        CHECK_THROWS_AS(check_genpoly_blackbox(cubic, -1, 5, 2), PreconditionError);
        CHECK_THROWS_AS(check_genpoly_blackbox(cubic, 2, 0, 2), PreconditionError);
    }
}

TEST_SUITE("homogeneous parts") {
    TEST_CASE("examples") {
        const auto f = FunctionOracle::of(genpoly(kZ, 1, {{{0}, {5}}, {{1}, {2}}, {{2}, {1}}}));
        const auto parts = homogeneous_parts(f, 2, kZ.element({4}));
        REQUIRE(parts.size() == 3);
        CHECK(parts[0] == std::vector<Cyclotomic>{c(5)});
        CHECK(parts[1] == std::vector<Cyclotomic>{c(8)});
        CHECK(parts[2] == std::vector<Cyclotomic>{c(16)});

        const auto k = FunctionOracle::of(genpoly(kZ, 1, {{{0}, {7}}}));
        const auto kparts = homogeneous_parts(k, 2, kZ.element({3}));
        CHECK(kparts[0] == std::vector<Cyclotomic>{c(7)});
        CHECK(kparts[1] == std::vector<Cyclotomic>{c(0)});
        CHECK(kparts[2] == std::vector<Cyclotomic>{c(0)});
    }

    TEST_CASE("match symbolic grading on Z^3") {
        testing::Generator gen(32);
        const GroupSpec g = GroupSpec::free(3);
        for (int trial = 0; trial < 40; ++trial) {
            const ExpoPoly f = gen.genpoly(g, 1, 4, kOrder, 6);
            const auto x = gen.element(g, 4);
            const auto parts = homogeneous_parts(FunctionOracle::of(f), 4, x);
            for (int d = 0; d <= 4; ++d) CHECK(parts[d] == homogeneous(f, d).evaluate(x));
        }
    }

    TEST_CASE("reassembly and homogeneity") {
        testing::Generator gen(33);
        const GroupSpec g(2, {2});
        for (int trial = 0; trial < 40; ++trial) {
            const ExpoPoly f = gen.genpoly(g, 2, 5, kOrder, 5);
            const auto oracle = FunctionOracle::of(f);
            const auto x = gen.element(g, 3);
            const auto parts = homogeneous_parts(oracle, 5, x);
            std::vector<Cyclotomic> sum(2, c(0));
            for (const auto& p : parts) sum = add(sum, p);
            CHECK(sum == f.evaluate(x));
            for (std::int64_t k : {2, 3}) {
                const auto scaled = homogeneous_parts(oracle, 5, g.multiple(x, k));
                for (int i = 0; i <= 5; ++i) {
                    Rational factor = 1;
                    for (int e = 0; e < i; ++e) factor *= k;
                    for (int j = 0; j < 2; ++j) CHECK(scaled[i][j] == parts[i][j].scaled(factor));
                }
            }
        }
    }
}

TEST_SUITE("polarization") {
    TEST_CASE("x1 x2 on Z^2") {
        const auto f = FunctionOracle::of(genpoly(kZ2, 1, {{{1, 1}, {1}}}));
        testing::Generator gen(34);
        for (int trial = 0; trial < 30; ++trial) {
            const auto u = gen.element(kZ2);
            const auto v = gen.element(kZ2);
            const Rational expected = Rational(u.free[0] * v.free[1] + u.free[1] * v.free[0], 2);
            CHECK(polarize(f, 2, {u, v}) == std::vector<Cyclotomic>{c(expected)});
        }
    }

    TEST_CASE("square on Z") {
        const auto f = FunctionOracle::of(genpoly(kZ, 1, {{{2}, {1}}}));
        for (std::int64_t u = -3; u <= 3; ++u) {
            for (std::int64_t v = -3; v <= 3; ++v) {
                CHECK(polarize(f, 2, {kZ.element({u}), kZ.element({v})}) ==
                      std::vector<Cyclotomic>{c(Rational(u * v))});
            }
        }
    }

    TEST_CASE("constant case") {
        const auto f = FunctionOracle::of(genpoly(kZ, 1, {{{0}, {4}}}));
        CHECK(polarize(f, 0, {}) == std::vector<Cyclotomic>{c(4)});
    }

    TEST_CASE("symmetric, additive, diagonal") {
        testing::Generator gen(35);
        for (int trial = 0; trial < 100; ++trial) {
            const int i = 1 + trial % 3;
            ExpoPoly f = homogeneous(gen.genpoly(kZ2, 1, 3, kOrder, 6), i);
            if (f.is_zero()) f = genpoly(kZ2, 1, {{{i, 0}, {1}}});
            const auto oracle = FunctionOracle::of(f);
            std::vector<GroupElement> pts;
            for (int j = 0; j < i; ++j) pts.push_back(gen.element(kZ2, 4));
            const auto base = polarize(oracle, i, pts);
            auto perm = pts;
            std::reverse(perm.begin(), perm.end());
            CHECK(polarize(oracle, i, perm) == base);
            if (i >= 2) {
                std::swap(perm[0], perm[1]);
                CHECK(polarize(oracle, i, perm) == base);
            }
            const auto b = gen.element(kZ2, 4);
            auto with_sum = pts;
            auto with_b = pts;
            with_sum[0] = kZ2.add(pts[0], b);
            with_b[0] = b;
            CHECK(polarize(oracle, i, with_sum) == add(base, polarize(oracle, i, with_b)));
            const std::vector<GroupElement> diag(i, pts[0]);
            CHECK(polarize(oracle, i, diag) == f.evaluate(pts[0]));
        }
    }
}

TEST_SUITE("classification") {
    TEST_CASE("examples") {
        const auto sq = classify(genpoly(kZ, 1, {{{2}, {1}}}));
        CHECK(sq.is_generalized);
        CHECK(sq.is_polynomial);
        CHECK(sq.is_w_polynomial);
        CHECK(sq.is_local_polynomial);
        CHECK(sq.degree == 2);
        CHECK(sq.dim_translate_span == 3);

        const auto ex = classify(ExpoPoly::single(kZ, expo(kZ, {2}), testing::vpoly(1, 1, {{{0}, {1}}})));
        CHECK_FALSE(ex.is_generalized);
        CHECK_FALSE(ex.is_polynomial);
        CHECK_FALSE(ex.is_w_polynomial);
        CHECK_FALSE(ex.is_local_polynomial);
        CHECK_FALSE(ex.degree.has_value());

        const auto vec = classify(genpoly(kZ, 2, {{{1}, {1, 0}}, {{3}, {0, 1}}}));
        CHECK(vec.is_generalized);
        CHECK(vec.is_local_polynomial);
        CHECK(vec.degree == 3);
    }

    TEST_CASE("implication chain on random inputs") {
        testing::Generator gen(36);
        const GroupSpec g(1, {2});
        for (int trial = 0; trial < 60; ++trial) {
            const ExpoPoly f = trial % 2 == 0 ? gen.genpoly(g, 2, 3, kOrder) : gen.expopoly(g, 2, 2, 2, kOrder);
            const auto r = classify(f);
            CHECK((!r.is_polynomial || r.is_w_polynomial));
            CHECK((!r.is_w_polynomial || r.is_generalized));
            CHECK((!r.is_generalized || r.is_local_polynomial));
            CHECK(r.is_generalized == is_generalized_polynomial(f));
            CHECK(r.dim_translate_span == translate_span(f).dim());
        }
    }

    TEST_CASE("degree is below the translate-span dimension") {
        testing::Generator gen(37);
        const std::vector<GroupSpec> groups{kZ, kZ2, GroupSpec(1, {4})};
        for (int trial = 0; trial < 60; ++trial) {
            const ExpoPoly f = gen.nonzero_genpoly(groups[trial % 3], 1 + trial % 2, 4, kOrder);
            CHECK(degree(f) < static_cast<int>(translate_span(f).dim()));
        }
    }
}

TEST_SUITE("degree certificate") {
    TEST_CASE("examples") {
        const ExpoPoly f = genpoly(kZ, 2, {{{2}, {1, 0}}});
        const auto u = degree_certificate(f);
        CHECK(u == std::vector<Cyclotomic>{c(1), c(0)});
        CHECK(degree(f.compose_functional(u)) == 2);

        const ExpoPoly h = genpoly(kZ, 2, {{{2}, {1, -1}}});
        CHECK(degree(h.compose_functional(degree_certificate(h))) == 2);
        const std::vector<Cyclotomic> ones{c(1), c(1)};
        CHECK(degree(h.compose_functional(ones)) == -1);

        CHECK_THROWS_AS(degree_certificate(ExpoPoly(kZ, 2, kOrder)), NoCertificate);
    }

    TEST_CASE("random instances") {
        testing::Generator gen(38);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 1 + trial % 3;
            const ExpoPoly f = gen.nonzero_genpoly(kZ2, k, 4, kOrder);
            const int d = degree(f);
            CHECK(degree(f.compose_functional(degree_certificate(f))) == d);
            for (int j = 0; j < 20; ++j) {
                const auto u = gen.vector(k, kOrder, 3);
                CHECK(degree(f.compose_functional(u)) <= d);
            }
        }
    }
}

TEST_SUITE("N(f) bounds") {
    TEST_CASE("square") {
        const auto b = n_of_f_bounds(genpoly(kZ, 1, {{{2}, {1}}}));
        CHECK(b.lower == 3);
        CHECK(b.upper == 3);
    }

    TEST_CASE("sum of squares") {
        for (int r = 1; r <= 4; ++r) {
            const GroupSpec g = GroupSpec::free(r);
            std::vector<testing::MonomialSpec> monos;
            for (int i = 0; i < r; ++i) {
                Exponent e(r, 0);
                e[i] = 2;
                monos.push_back({e, {1}});
            }
            const auto b = n_of_f_bounds(genpoly(g, 1, monos));
            CHECK(b.lower == static_cast<std::size_t>(r + 2));
            CHECK(b.upper == static_cast<std::size_t>(r + 2));
        }
    }

    TEST_CASE("vector valued") {
        const ExpoPoly f = genpoly(kZ, 2, {{{1}, {1, 0}}, {{2}, {0, 1}}});
        const auto b = n_of_f_bounds(f);
        CHECK(b.lower == 3);
        CHECK(b.upper == translate_span(f).dim());
        CHECK(b.lower <= b.upper);
    }

    TEST_CASE("random instances") {
        testing::Generator gen(39);
        for (int trial = 0; trial < 20; ++trial) {
            const ExpoPoly f = gen.nonzero_genpoly(kZ2, 2, 3, kOrder);
            const auto b = n_of_f_bounds(f, trial);
            CHECK(b.lower <= b.upper);
            CHECK(degree(f) < static_cast<int>(b.lower));
        }
    }
}

TEST_SUITE("lift") {
    TEST_CASE("examples") {
        const ExpoPoly f = genpoly(kZ, 1, {{{2}, {1}}});
        const ExpoPoly lifted = lift(f, ExpoPoly(kZ, 1, kOrder));
        CHECK(lifted == genpoly(kZ2, 1, {{{1, 2}, {1}}}));

        const ExpoPoly fs(kZ, 2, kOrder,
                          {ExpoTerm{Exponential::trivial(kZ, kOrder), testing::vpoly(1, 2, {{{1}, {1, 0}}})},
                           ExpoTerm{expo(kZ, {2}), testing::vpoly(1, 2, {{{0}, {0, 1}}})}});
        const ExpoPoly g = genpoly(kZ, 1, {{{0}, {7}}});
        const ExpoPoly big = lift(fs, g);
        const GroupSpec z3 = GroupSpec::free(3);
        for (const auto& p : testing::box_points(z3, 2)) {
            const Rational t1(p.free[0]), t2(p.free[1]);
            const std::int64_t x = p.free[2];
            Rational expected = t1 * x + 7;
            Rational power = 1;
            for (std::int64_t e = 0; e < std::abs(x); ++e) power *= 2;
            expected += t2 * (x >= 0 ? power : 1 / power);
            CHECK(big.evaluate(p) == std::vector<Cyclotomic>{c(expected)});
        }
        CHECK_THROWS_AS(lift(fs, genpoly(kZ2, 1, {})), StructuralError);
    }

    TEST_CASE("unlift examples") {
        const auto u = unlift(genpoly(kZ2, 1, {{{1, 2}, {1}}}), 1);
        CHECK(u.fs == genpoly(kZ, 1, {{{2}, {1}}}));
        CHECK(u.g.is_zero());

        const auto k = unlift(genpoly(GroupSpec::free(3), 1, {{{0, 0, 0}, {5}}}), 2);
        CHECK(k.fs.is_zero());
        CHECK(k.fs.vector_dim() == 2);
        CHECK(k.g == genpoly(kZ, 1, {{{0}, {5}}}));

        CHECK_THROWS_AS(unlift(genpoly(kZ2, 1, {{{2, 1}, {1}}}), 1), NotLiftedForm);
        CHECK_THROWS_AS(unlift(ExpoPoly::single(kZ2, expo(kZ2, {2, 1}), testing::vpoly(2, 1, {{{0, 0}, {1}}})), 1),
                        NotLiftedForm);
    }

    TEST_CASE("round trip") {
        testing::Generator gen(40);
        const GroupSpec g(1, {2});
        for (int trial = 0; trial < 50; ++trial) {
            const int k = 1 + trial % 3;
            const ExpoPoly fs = gen.expopoly(g, k, 2, 2, kOrder);
            const ExpoPoly h = gen.expopoly(g, 1, 2, 2, kOrder);
            const ExpoPoly lifted = lift(fs, h);
            const auto back = unlift(lifted, k);
            CHECK(back.fs == fs);
            CHECK(back.g == h);
            CHECK(lift(back.fs, back.g) == lifted);
        }
    }
}
