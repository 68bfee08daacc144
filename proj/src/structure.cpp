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

#include "expocalc/structure.hpp"

#include <random>
#include <stdexcept>

#include "expocalc/difference_operator.hpp"
#include "expocalc/errors.hpp"
#include "expocalc/linalg.hpp"
#include "expocalc/translate_span.hpp"

namespace expocalc {

namespace {

GroupElement random_element(const GroupSpec& group, std::int64_t box, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coord(-box, box);
    GroupElement x = group.zero();
    for (auto& c : x.free) c = coord(rng);
    for (std::size_t j = 0; j < x.torsion.size(); ++j) {
        std::uniform_int_distribution<std::int64_t> residue(0, group.torsion_orders()[j] - 1);
        x.torsion[j] = residue(rng);
    }
    return x;
}

// sum over theta in {0,1}^n of (-1)^(n - |theta|) f(base + sum theta_i h_i),
// which is Delta_{h_1} ... Delta_{h_n} f (base).
std::vector<Cyclotomic> iterated_difference(const FunctionOracle& f, const GroupElement& base,
                                            const std::vector<GroupElement>& steps) {
    const std::size_t n = steps.size();
    std::vector<Cyclotomic> acc(f.vector_dim, Cyclotomic(f.order));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        GroupElement point = base;
        int chosen = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                point = f.group.add(point, steps[i]);
                ++chosen;
            }
        }
        const auto value = f(point);
        const bool negative = ((static_cast<int>(n) - chosen) % 2) != 0;
        for (int j = 0; j < f.vector_dim; ++j) {
            if (negative) {
                acc[j] -= value[j];
            } else {
                acc[j] += value[j];
            }
        }
    }
    return acc;
}

const VectorPolynomial& polynomial_part(const ExpoPoly& f) {
    if (!is_generalized_polynomial(f) || f.is_zero()) throw std::logic_error("polynomial_part on non-polynomial");
    return f.terms().front().polynomial;
}

}  // namespace

bool is_generalized_polynomial(const ExpoPoly& f) noexcept {
    for (const auto& t : f.terms()) {
        if (!t.exponential.is_trivial()) return false;
    }
    return true;
}

int degree(const ExpoPoly& f) {
    if (!is_generalized_polynomial(f)) {
        throw NotGeneralizedPolynomial("function has a nontrivial exponential factor; its differences never vanish");
    }
    return f.max_degree();
}

bool check_genpoly_blackbox(const FunctionOracle& f, int n, int trials, std::int64_t box, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("n must be nonnegative");
    if (trials < 1) throw PreconditionError("trials must be positive");
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const GroupElement x = random_element(f.group, box, rng);
        std::vector<GroupElement> steps;
        for (int i = 0; i <= n; ++i) steps.push_back(random_element(f.group, box, rng));
        if (!is_zero_vector(iterated_difference(f, x, steps))) return false;
    }
    return true;
}

std::vector<std::vector<Cyclotomic>> homogeneous_parts(const FunctionOracle& f, int n, const GroupElement& x) {
    if (n < 0) throw PreconditionError("n must be nonnegative");
    f.group.require(x);
    const int size = n + 1;
    // Inverse of V[k-1][i] = k^i via rref of [V | I].
    linalg::Mat<Rational> aug(size, linalg::Vec<Rational>(2 * size, 0));
    for (int k = 1; k <= size; ++k) {
        Rational power = 1;
        for (int i = 0; i < size; ++i) {
            aug[k - 1][i] = power;
            power *= k;
        }
        aug[k - 1][size + k - 1] = 1;
    }
    if (linalg::rref(aug, size).size() != static_cast<std::size_t>(size)) {
        throw std::logic_error("Vandermonde matrix is singular");
    }
    std::vector<std::vector<Cyclotomic>> samples;
    for (int k = 1; k <= size; ++k) samples.push_back(f(f.group.multiple(x, k)));

    std::vector<std::vector<Cyclotomic>> parts(size, std::vector<Cyclotomic>(f.vector_dim, Cyclotomic(f.order)));
    for (int i = 0; i < size; ++i) {
        for (int k = 0; k < size; ++k) {
            const Rational& w = aug[i][size + k];
            if (sgn(w) == 0) continue;
            for (int j = 0; j < f.vector_dim; ++j) parts[i][j] += samples[k][j].scaled(w);
        }
    }
    return parts;
}

std::vector<Cyclotomic> polarize(const FunctionOracle& f_i, int i, const std::vector<GroupElement>& points) {
    if (i < 0) throw PreconditionError("polarization index must be nonnegative");
    if (points.size() != static_cast<std::size_t>(i)) {
        throw PreconditionError("polarize of degree " + std::to_string(i) + " needs exactly " + std::to_string(i) +
                                " points");
    }
    const GroupElement origin = f_i.group.zero();
    if (i == 0) return f_i(origin);
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(i));
    const Rational scale(mpz_class(1), factorial);
    auto out = iterated_difference(f_i, origin, points);
    for (auto& c : out) c = c.scaled(scale);
    return out;
}

ClassificationReport classify(const ExpoPoly& f) {
    ClassificationReport report;
    report.is_generalized = is_generalized_polynomial(f);
    // L_f is always finite-dimensional for an exponential polynomial, and on a
    // finitely generated group with values in C^k the w- and local notions
    // collapse onto the polynomial one.
    report.is_polynomial = report.is_generalized;
    report.is_w_polynomial = report.is_polynomial;
    report.is_local_polynomial = report.is_w_polynomial;
    if (report.is_generalized) report.degree = degree(f);
    report.dim_translate_span = translate_span(f).dim();

    const auto implies = [](bool a, bool b) { return !a || b; };
    if (!(implies(report.is_polynomial, report.is_w_polynomial) &&
          implies(report.is_w_polynomial, report.is_generalized) &&
          implies(report.is_generalized, report.is_local_polynomial))) {
        throw std::logic_error("classification violates the implication chain");
    }
    return report;
}

std::vector<Cyclotomic> degree_certificate(const ExpoPoly& f) {
    const int d = degree(f);
    if (d < 0) throw NoCertificate("the zero function has no degree certificate");
    const VectorPolynomial& p = polynomial_part(f);
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) != d) continue;
        for (int j = 0; j < f.vector_dim(); ++j) {
            if (c[j].is_zero()) continue;
            std::vector<Cyclotomic> u(f.vector_dim(), Cyclotomic(f.order()));
            u[j] = Cyclotomic(f.order(), 1);
            return u;
        }
    }
    throw std::logic_error("top-degree coefficient vanished");
}

NBounds n_of_f_bounds(const ExpoPoly& f, std::uint64_t seed) {
    const int d = degree(f);
    NBounds bounds;
    bounds.upper = translate_span(f).dim();
    const int k = f.vector_dim();
    std::vector<std::vector<Cyclotomic>> functionals;
    for (int j = 0; j < k; ++j) {
        std::vector<Cyclotomic> u(k, Cyclotomic(f.order()));
        u[j] = Cyclotomic(f.order(), 1);
        functionals.push_back(std::move(u));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int r = 0; r < 20; ++r) {
        std::vector<Cyclotomic> u;
        for (int j = 0; j < k; ++j) u.emplace_back(f.order(), entry(rng));
        functionals.push_back(std::move(u));
    }
    for (const auto& u : functionals) {
        bounds.lower = std::max(bounds.lower, translate_span(f.compose_functional(u)).dim());
    }
    if (d >= 0 && !(static_cast<std::size_t>(d) < bounds.lower)) {
        throw std::logic_error("degree bound deg f < dim L_{u o f} violated");
    }
    if (bounds.lower > bounds.upper) throw std::logic_error("lower bound exceeds dim L_f");
    return bounds;
}

namespace {

GroupSpec lifted_group(const GroupSpec& base, int k) { return group_product(GroupSpec::free(k), base); }

Exponential lift_exponential(const GroupSpec& lifted, int k, const Exponential& m, int order) {
    std::vector<Cyclotomic> free(k, Cyclotomic(order, 1));
    free.insert(free.end(), m.free_values().begin(), m.free_values().end());
    return Exponential(lifted, order, std::move(free), m.torsion_values());
}

// Reinterprets a function on Z^k x G that does not involve t as a function on G.
ExpoPoly drop_leading(const ExpoPoly& F, int k, const GroupSpec& base) {
    std::vector<ExpoTerm> terms;
    for (const auto& t : F.terms()) {
        const auto& fv = t.exponential.free_values();
        for (int j = 0; j < k; ++j) {
            if (!fv[j].is_one()) throw NotLiftedForm("exponential depends on the lifted coordinate t" + std::to_string(j + 1));
        }
        Exponential m(base, F.order(), std::vector<Cyclotomic>(fv.begin() + k, fv.end()), t.exponential.torsion_values());
        VectorPolynomial p(base.free_rank(), F.vector_dim(), F.order());
        for (const auto& [e, c] : t.polynomial.terms()) {
            for (int j = 0; j < k; ++j) {
                if (e[j] != 0) throw NotLiftedForm("expected a function independent of the lifted coordinates");
            }
            p.add_term(Exponent(e.begin() + k, e.end()), c);
        }
        terms.push_back(ExpoTerm{std::move(m), std::move(p)});
    }
    return ExpoPoly(base, F.vector_dim(), F.order(), std::move(terms));
}

}  // namespace

ExpoPoly lift(const ExpoPoly& fs, const ExpoPoly& g) {
    if (!(fs.group() == g.group())) {
        throw StructuralError("lift: components live on " + fs.group().to_string() + " but g lives on " +
                              g.group().to_string());
    }
    if (g.vector_dim() != 1) throw StructuralError("lift: g must be scalar-valued");
    const int k = fs.vector_dim();
    const int order = static_cast<int>(lcm_order(fs.order(), g.order()));
    const GroupSpec lifted = lifted_group(fs.group(), k);
    const int vars = lifted.free_rank();
    const ExpoPoly fs_promoted = fs.promoted(order);
    const ExpoPoly g_promoted = g.promoted(order);
    std::vector<ExpoTerm> terms;
    for (const auto& t : fs_promoted.terms()) {
        const Exponential m = lift_exponential(lifted, k, t.exponential, order);
        for (int j = 0; j < k; ++j) {
            std::vector<Cyclotomic> u(k, Cyclotomic(order));
            u[j] = Cyclotomic(order, 1);
            Exponent tj(vars, 0);
            tj[j] = 1;
            const VectorPolynomial coordinate = VectorPolynomial::monomial(vars, tj, {Cyclotomic(order, 1)}, order);
            terms.push_back(ExpoTerm{m, t.polynomial.compose(u).with_leading_vars(k).times(coordinate)});
        }
    }
    for (const auto& t : g_promoted.terms()) {
        terms.push_back(ExpoTerm{lift_exponential(lifted, k, t.exponential, order), t.polynomial.with_leading_vars(k)});
    }
    return ExpoPoly(lifted, 1, order, std::move(terms));
}

Unlifted unlift(const ExpoPoly& lifted, int k) {
    const GroupSpec& h = lifted.group();
    if (k < 1 || k > h.free_rank()) throw PreconditionError("unlift: k must lie in [1, free rank] for " + h.to_string());
    if (lifted.vector_dim() != 1) throw StructuralError("unlift expects a scalar-valued function");
    const GroupSpec base(h.free_rank() - k, h.torsion_orders());
    for (const auto& t : lifted.terms()) {
        for (int j = 0; j < k; ++j) {
            if (!t.exponential.free_values()[j].is_one()) {
                throw NotLiftedForm("exponential depends on the lifted coordinate t" + std::to_string(j + 1));
            }
        }
        for (const auto& [e, c] : t.polynomial.terms()) {
            int t_degree = 0;
            for (int j = 0; j < k; ++j) t_degree += e[j];
            if (t_degree > 1) throw NotLiftedForm("function is not affine in the lifted coordinates");
        }
    }
    const int order = lifted.order();
    std::vector<ExpoTerm> component_terms;
    for (int j = 0; j < k; ++j) {
        GroupElement step = h.zero();
        step.free[j] = 1;
        // Delta_{e_j} F (t, x) = f_j(x).
        const ExpoPoly fj = drop_leading(DifferenceOperator::difference(h, step, order).apply(lifted), k, base);
        for (const auto& t : fj.terms()) {
            std::vector<Cyclotomic> unit(k, Cyclotomic(order));
            unit[j] = Cyclotomic(order, 1);
            const VectorPolynomial embed = VectorPolynomial::constant(base.free_rank(), unit, order);
            component_terms.push_back(ExpoTerm{t.exponential, t.polynomial.times(embed)});
        }
    }
    ExpoPoly fs(base, k, order, std::move(component_terms));
    const ExpoPoly rest = lifted - lift(fs, ExpoPoly(base, 1, order));
    return Unlifted{std::move(fs), drop_leading(rest, k, base)};
}

}  // namespace expocalc
