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

#include "expocalc/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "expocalc/errors.hpp"
#include "expocalc/linalg.hpp"

namespace expocalc {

namespace {

using Value = std::vector<Cyclotomic>;

int common_order(const GroupSpec& group, const std::vector<Exponential>& ms) {
    if (ms.empty()) throw PreconditionError("need at least one exponential");
    std::int64_t order = group.minimal_cyclotomic_order();
    for (const auto& m : ms) order = lcm_order(order, m.order());
    return static_cast<int>(order);
}

std::vector<Exponential> normalized(const GroupSpec& group, const std::vector<Exponential>& ms, int order) {
    std::vector<Exponential> out;
    for (const auto& m : ms) {
        if (static_cast<int>(m.free_values().size()) != group.free_rank() ||
            static_cast<int>(m.torsion_values().size()) != group.torsion_count()) {
            throw StructuralError("exponential does not match group " + group.to_string());
        }
        out.push_back(m.promoted(order));
    }
    for (std::size_t a = 0; a < out.size(); ++a) {
        for (std::size_t b = a + 1; b < out.size(); ++b) {
            if (out[a] == out[b]) {
                throw PreconditionError("exponentials " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                        " coincide");
            }
        }
    }
    return out;
}

class IsolatorBuilder {
   public:
    IsolatorBuilder(GroupSpec group, std::vector<Exponential> ms, int order)
        : group_(std::move(group)), ms_(std::move(ms)), order_(order) {}

    const DifferenceOperator& isolate(const std::vector<int>& d, int b) {
        const auto key = std::make_pair(d, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        DifferenceOperator op = build(d, b);
        return memo_.emplace(key, std::move(op)).first->second;
    }

   private:
    DifferenceOperator build(const std::vector<int>& d, int b) {
        if (d[b] < 0) return DifferenceOperator::zero(group_, order_);
        int a = -1;
        for (int i = 0; i < static_cast<int>(d.size()); ++i) {
            if (i != b && d[i] >= 0) {
                a = i;
                break;
            }
        }
        if (a < 0) return DifferenceOperator::identity(group_, order_);

        const GroupElement& g = separator(a, b);
        const Cyclotomic ma = ms_[a].evaluate(g);
        const Cyclotomic mb = ms_[b].evaluate(g);
        const auto shift = DifferenceOperator::translation(group_, g, order_);
        const auto id = DifferenceOperator::identity(group_, order_);
        const DifferenceOperator lower_a = shift - id.scaled(ma);
        const DifferenceOperator lower_b = shift - id.scaled(mb);

        std::vector<int> da = d;
        --da[a];
        std::vector<int> db = d;
        --db[b];
        const DifferenceOperator first = isolate(da, b).compose(lower_a);
        const DifferenceOperator second = isolate(db, b).compose(lower_b);
        return (first - second).scaled((mb - ma).inverse());
    }

    const GroupElement& separator(int a, int b) {
        const auto key = std::minmax(a, b);
        if (auto it = separators_.find(key); it != separators_.end()) return it->second;
        for (const auto& g : group_.generators()) {
            if (ms_[a].evaluate(g) != ms_[b].evaluate(g)) return separators_.emplace(key, g).first->second;
        }
        throw PreconditionError("exponentials agree on every generator");
    }

    GroupSpec group_;
    std::vector<Exponential> ms_;
    int order_;
    std::map<std::pair<std::vector<int>, int>, DifferenceOperator> memo_;
    std::map<std::pair<int, int>, GroupElement> separators_;
};

void degree_vectors(int n, int budget, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == n) {
        out.push_back(current);
        return;
    }
    for (int d = -1; d <= budget; ++d) {
        current.push_back(d);
        degree_vectors(n, budget - d, current, out);
        current.pop_back();
    }
}

// Local evaluation memo for one black-box extraction call.
class SampledFunction {
   public:
    explicit SampledFunction(const FunctionOracle& f) : f_(f) {}
    const Value& at(const GroupElement& x) {
        if (auto it = cache_.find(x); it != cache_.end()) return it->second;
        return cache_.emplace(x, f_(x)).first->second;
    }

   private:
    const FunctionOracle& f_;
    std::map<GroupElement, Value> cache_;
};

std::vector<GroupElement> centered_box(const GroupSpec& group, std::int64_t side) {
    const std::int64_t lo = -(side / 2);
    std::vector<GroupElement> free_points{GroupElement{std::vector<std::int64_t>(group.free_rank(), lo), {}}};
    if (group.free_rank() > 0) {
        free_points.clear();
        std::vector<std::int64_t> coords(group.free_rank(), lo);
        while (true) {
            free_points.push_back(GroupElement{coords, {}});
            int i = 0;
            for (; i < group.free_rank(); ++i) {
                if (++coords[i] < lo + side) break;
                coords[i] = lo;
            }
            if (i == group.free_rank()) break;
        }
    }
    const GroupSpec torsion_part(0, group.torsion_orders());
    std::vector<GroupElement> out;
    for (const auto& fp : free_points) {
        for (const auto& tp : torsion_part.elements()) out.push_back(GroupElement{fp.free, tp.torsion});
    }
    return out;
}

Rational monomial_value(const Exponent& e, const GroupElement& x) {
    mpz_class value = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        mpz_class power;
        mpz_class base(static_cast<long>(x.free[i]));
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[i]));
        value *= power;
    }
    return Rational(value);
}

// Fits y = q(x) with deg q <= s exactly on a fixed point set.
class PolynomialFitter {
   public:
    PolynomialFitter(const std::vector<GroupElement>& points, int num_vars, int s)
        : points_(points), monomials_(monomials_up_to(num_vars, s)) {
        const std::size_t m = monomials_.size();
        for (const auto& x : points_) {
            linalg::Vec<Rational> row;
            for (const auto& e : monomials_) row.push_back(monomial_value(e, x));
            table_.push_back(std::move(row));
        }
        linalg::RowSpace<Rational> space(m, Rational(0));
        for (std::size_t r = 0; r < table_.size() && space.rank() < m; ++r) {
            if (space.insert(table_[r])) pivots_.push_back(r);
        }
        if (pivots_.size() != m) throw IllPosedInstance("sample box too small to fit polynomials of this degree");
        linalg::Mat<Rational> aug(m, linalg::Vec<Rational>(2 * m, 0));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) aug[r][c] = table_[pivots_[r]][c];
            aug[r][m + r] = 1;
        }
        linalg::rref(aug, m);
        for (std::size_t r = 0; r < m; ++r) inverse_.emplace_back(aug[r].begin() + m, aug[r].end());
    }

    /// Coefficients (per monomial, per component) or nullopt if y is not such a polynomial.
    std::optional<VectorPolynomial> fit(const std::vector<Value>& y, int vector_dim, int order) const {
        const std::size_t m = monomials_.size();
        std::vector<Value> coeffs(m, Value(vector_dim, Cyclotomic(order)));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t r = 0; r < m; ++r) {
                const Rational& w = inverse_[a][r];
                if (sgn(w) == 0) continue;
                for (int j = 0; j < vector_dim; ++j) coeffs[a][j] += y[pivots_[r]][j].scaled(w);
            }
        }
        for (std::size_t p = 0; p < points_.size(); ++p) {
            for (int j = 0; j < vector_dim; ++j) {
                Cyclotomic acc(order);
                for (std::size_t a = 0; a < m; ++a) {
                    if (!coeffs[a][j].is_zero() && sgn(table_[p][a]) != 0) acc += coeffs[a][j].scaled(table_[p][a]);
                }
                if (acc != y[p][j]) return std::nullopt;
            }
        }
        VectorPolynomial q(static_cast<int>(points_.empty() ? 0 : points_.front().free.size()), vector_dim, order);
        for (std::size_t a = 0; a < m; ++a) q.add_term(monomials_[a], coeffs[a]);
        return q;
    }

   private:
    const std::vector<GroupElement>& points_;
    std::vector<Exponent> monomials_;
    linalg::Mat<Rational> table_;
    std::vector<std::size_t> pivots_;
    linalg::Mat<Rational> inverse_;
};

}  // namespace

DifferenceOperator isolating_operator(const GroupSpec& group, const std::vector<Exponential>& ms,
                                      const std::vector<int>& degrees, int index) {
    const int order = common_order(group, ms);
    auto norm = normalized(group, ms, order);
    if (degrees.size() != norm.size()) throw PreconditionError("degree vector length differs from the exponential count");
    if (index < 0 || index >= static_cast<int>(norm.size())) throw PreconditionError("component index out of range");
    for (int d : degrees) {
        if (d < -1) throw PreconditionError("degrees must be >= -1");
    }
    IsolatorBuilder builder(group, std::move(norm), order);
    return builder.isolate(degrees, index);
}

std::vector<DifferenceOperator> lemma2_operators(const GroupSpec& group, const std::vector<Exponential>& ms, int s) {
    const int order = common_order(group, ms);
    auto norm = normalized(group, ms, order);
    const int n = static_cast<int>(norm.size());
    if (s < -n) throw PreconditionError("s must be at least -n");
    if (n == 1) return {DifferenceOperator::identity(group, order)};
    if (s == -n) return {DifferenceOperator::zero(group, order)};

    IsolatorBuilder builder(group, std::move(norm), order);
    std::vector<std::vector<int>> vectors;
    std::vector<int> scratch;
    degree_vectors(n, s, scratch, vectors);
    std::vector<DifferenceOperator> out;
    for (const auto& d : vectors) {
        for (int b = 0; b < n; ++b) out.push_back(builder.isolate(d, b));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ExpoPoly> extract_components_ops(const ExpoPoly& f, const std::vector<Exponential>& ms, int s) {
    const auto ops = lemma2_operators(f.group(), ms, s);
    const int order = static_cast<int>(lcm_order(common_order(f.group(), ms), f.order()));
    const ExpoPoly base = f.promoted(order);

    std::map<GroupElement, ExpoPoly> translates;
    std::vector<ExpoPoly> outputs;
    outputs.reserve(ops.size());
    for (const auto& op : ops) {
        std::vector<ExpoTerm> terms;
        for (const auto& t : op.terms()) {
            auto it = translates.find(t.shift);
            if (it == translates.end()) it = translates.emplace(t.shift, base.translate(t.shift)).first;
            const Cyclotomic c = t.coeff.promoted(order);
            for (const auto& term : it->second.terms()) terms.push_back(ExpoTerm{term.exponential, term.polynomial.scaled(c)});
        }
        outputs.emplace_back(f.group(), f.vector_dim(), order, std::move(terms));
    }

    // Candidates for index i are outputs supported on m_i alone. Since the
    // m_i-blocks are linearly independent, a selection sums to f exactly when
    // each chosen candidate equals the m_i-part of f and f has no other part.
    std::vector<ExpoPoly> result;
    ExpoPoly remainder = base;
    for (const auto& m : ms) {
        const Exponential key = m.promoted(order);
        const ExpoPoly wanted = base.component(key);
        remainder = remainder - wanted;
        const bool found = std::any_of(outputs.begin(), outputs.end(), [&](const ExpoPoly& out) {
            for (const auto& t : out.terms()) {
                if (!(t.exponential == key)) return false;
            }
            return out == wanted;
        });
        if (!found) {
            throw DecompositionFailure("no operator output isolates the component for exponential " +
                                       std::to_string(result.size() + 1) + "; degree budget s too small?");
        }
        result.push_back(wanted);
    }
    if (!remainder.is_zero()) {
        throw DecompositionFailure("function has components outside the given exponential list");
    }
    return result;
}

std::vector<ExpoPoly> extract_components_ops(const FunctionOracle& f, const std::vector<Exponential>& ms, int s) {
    const GroupSpec& group = f.group;
    const auto ops = lemma2_operators(group, ms, s);
    const int order = static_cast<int>(lcm_order(common_order(group, ms), f.order));
    const auto norm = normalized(group, ms, order);
    const int n = static_cast<int>(norm.size());
    const int k = f.vector_dim;
    const std::int64_t side = 2 * static_cast<std::int64_t>(std::max(s, 0) + 1) * (n + 1);
    const auto points = centered_box(group, side);
    const PolynomialFitter fitter(points, group.free_rank(), std::max(s, 0));

    SampledFunction sampled(f);
    std::vector<std::vector<Cyclotomic>> inverse_values(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& x : points) inverse_values[i].push_back(norm[i].evaluate(x).inverse());
    }

    // candidate -> number of operators producing it, per index
    std::vector<std::vector<std::pair<ExpoPoly, int>>> candidates(n);
    for (const auto& op : ops) {
        std::vector<Value> out;
        out.reserve(points.size());
        for (const auto& x : points) {
            Value acc(k, Cyclotomic(order));
            for (const auto& t : op.terms()) {
                const Value& v = sampled.at(group.add(x, t.shift));
                for (int j = 0; j < k; ++j) acc[j] += t.coeff.promoted(order) * v[j].promoted(order);
            }
            out.push_back(std::move(acc));
        }
        for (int i = 0; i < n; ++i) {
            std::vector<Value> y = out;
            for (std::size_t p = 0; p < points.size(); ++p) {
                for (auto& c : y[p]) c *= inverse_values[i][p];
            }
            auto q = fitter.fit(y, k, order);
            if (!q) continue;
            const ExpoPoly candidate = ExpoPoly::single(group, norm[i], *q);
            auto& list = candidates[i];
            auto it = std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.first == candidate; });
            if (it == list.end()) {
                list.emplace_back(candidate, 1);
            } else {
                ++it->second;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (candidates[i].empty()) throw DecompositionFailure("no operator output has the form q * m_" + std::to_string(i + 1));
        std::stable_sort(candidates[i].begin(), candidates[i].end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
    }

    std::vector<Value> target;
    for (const auto& x : points) {
        Value v = sampled.at(x);
        for (auto& c : v) c = c.promoted(order);
        target.push_back(std::move(v));
    }
    std::vector<std::vector<std::vector<Value>>> candidate_values(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& [c, count] : candidates[i]) {
            std::vector<Value> vals;
            for (const auto& x : points) vals.push_back(c.evaluate(x));
            candidate_values[i].push_back(std::move(vals));
        }
    }

    std::size_t budget = 200000;
    std::vector<std::size_t> choice(n, 0);
    std::vector<Value> partial(points.size(), Value(k, Cyclotomic(order)));
    // Depth-first search over candidate tuples, most frequent outputs first.
    std::function<bool(int, const std::vector<Value>&)> search = [&](int i, const std::vector<Value>& acc) -> bool {
        if (budget == 0) return false;
        if (i == n) {
            --budget;
            return acc == target;
        }
        for (std::size_t c = 0; c < candidate_values[i].size(); ++c) {
            std::vector<Value> next = acc;
            for (std::size_t p = 0; p < points.size(); ++p) {
                for (int j = 0; j < k; ++j) next[p][j] += candidate_values[i][c][p][j];
            }
            choice[i] = c;
            if (search(i + 1, next)) return true;
        }
        return false;
    };
    if (!search(0, partial)) throw DecompositionFailure("no selection of operator outputs reconstructs f on the sample box");
    std::vector<ExpoPoly> result;
    for (int i = 0; i < n; ++i) result.push_back(candidates[i][choice[i]].first);
    return result;
}

std::vector<ExpoPoly> extract_components_solve(const FunctionOracle& f, const std::vector<Exponential>& ms, int s) {
    const GroupSpec& group = f.group;
    const int order = static_cast<int>(lcm_order(common_order(group, ms), f.order));
    const auto norm = normalized(group, ms, order);
    const int n = static_cast<int>(norm.size());
    const int k = f.vector_dim;
    if (s < -n) throw PreconditionError("s must be at least -n");
    const auto monomials = monomials_up_to(group.free_rank(), std::max(s, 0));
    const std::size_t per_block = monomials.size();
    const std::size_t unknowns = per_block * n;
    const Cyclotomic zero(order);

    auto row_at = [&](const GroupElement& x) {
        linalg::Vec<Cyclotomic> row;
        row.reserve(unknowns);
        for (int i = 0; i < n; ++i) {
            const Cyclotomic m = norm[i].evaluate(x);
            for (const auto& e : monomials) row.push_back(m.scaled(monomial_value(e, x)));
        }
        return row;
    };

    const std::int64_t max_side = 4 * static_cast<std::int64_t>(std::max(s, 0) + 2) * (n + 1);
    std::set<GroupElement> seen;
    std::vector<GroupElement> points;
    std::vector<linalg::Vec<Cyclotomic>> rows;
    std::vector<Value> values;
    linalg::RowSpace<Cyclotomic> space(unknowns, zero);
    std::vector<std::size_t> independent;
    std::int64_t side = std::max(s, 0) + 1;
    for (;; ++side) {
        if (side > max_side) {
            throw IllPosedInstance("interpolation system stays rank deficient up to box side " + std::to_string(max_side));
        }
        for (const auto& x : centered_box(group, side)) {
            if (!seen.insert(x).second) continue;
            points.push_back(x);
            rows.push_back(row_at(x));
            Value v = f(x);
            for (auto& c : v) c = c.promoted(order);
            values.push_back(std::move(v));
            if (space.rank() < unknowns && space.insert(rows.back())) independent.push_back(rows.size() - 1);
        }
        if (space.rank() == unknowns) break;
        if (group.free_rank() == 0) {
            throw IllPosedInstance("exponentials are not independent on this finite group");
        }
    }

    // one extra layer so the check below covers points the solve did not use
    for (const auto& x : centered_box(group, side + 1)) {
        if (!seen.insert(x).second) continue;
        points.push_back(x);
        rows.push_back(row_at(x));
        Value v = f(x);
        for (auto& c : v) c = c.promoted(order);
        values.push_back(std::move(v));
    }

    linalg::Mat<Cyclotomic> square;
    for (auto r : independent) square.push_back(rows[r]);
    std::vector<linalg::Vec<Cyclotomic>> solution(k);
    for (int j = 0; j < k; ++j) {
        linalg::Vec<Cyclotomic> rhs;
        for (auto r : independent) rhs.push_back(values[r][j]);
        auto x = linalg::solve(square, rhs, unknowns, zero);
        if (!x) throw std::logic_error("square interpolation system unexpectedly inconsistent");
        solution[j] = std::move(*x);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int j = 0; j < k; ++j) {
            Cyclotomic acc(order);
            for (std::size_t c = 0; c < unknowns; ++c) {
                if (!rows[r][c].is_zero() && !solution[j][c].is_zero()) acc += rows[r][c] * solution[j][c];
            }
            if (acc != values[r][j]) {
                throw DecompositionFailure("function is not sum p_i m_i with deg p_i <= " + std::to_string(std::max(s, 0)) +
                                           " on the sample box");
            }
        }
    }
    std::vector<ExpoPoly> result;
    int degree_sum = 0;
    for (int i = 0; i < n; ++i) {
        VectorPolynomial p(group.free_rank(), k, order);
        for (std::size_t a = 0; a < per_block; ++a) {
            Value coeff(k, zero);
            for (int j = 0; j < k; ++j) coeff[j] = solution[j][i * per_block + a];
            p.add_term(monomials[a], coeff);
        }
        degree_sum += p.degree();
        result.push_back(ExpoPoly::single(group, norm[i], p));
    }
    if (degree_sum > s) {
        throw DecompositionFailure("component degrees sum to " + std::to_string(degree_sum) + ", above s = " +
                                   std::to_string(s));
    }
    return result;
}

}  // namespace expocalc
