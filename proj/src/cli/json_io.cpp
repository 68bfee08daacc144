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

#include "expocalc/cli/json_io.hpp"

#include <numeric>

#include "expocalc/errors.hpp"

namespace expocalc::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("JSON object lacks field '") + key + "'");
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw StructuralError(std::string("JSON field '") + key + "' must be an array");
    return a;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw StructuralError(e.what());
        }
    }
    throw StructuralError("rational must be an integer or a \"p/q\" string");
}

int order_of(const std::vector<Cyclotomic>& values, int order) {
    for (const auto& c : values) order = static_cast<int>(std::lcm<std::int64_t>(order, c.order()));
    return order;
}

}  // namespace

Json to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
    return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return Cyclotomic(4, rational_from_json(j));
    const int order = field(j, "order").get<int>();
    if (order < 1) throw StructuralError("cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    for (const auto& q : array_field(j, "coeffs")) coeffs.push_back(rational_from_json(q));
    return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

Json to_json(const GroupSpec& g) { return Json{{"free_rank", g.free_rank()}, {"torsion", g.torsion_orders()}}; }

GroupSpec group_from_json(const Json& j) {
    std::vector<std::int64_t> torsion;
    if (j.contains("torsion")) torsion = array_field(j, "torsion").get<std::vector<std::int64_t>>();
    return GroupSpec(field(j, "free_rank").get<int>(), torsion);
}

Json to_json(const GroupElement& x) { return Json{{"free", x.free}, {"torsion", x.torsion}}; }

GroupElement element_from_json(const Json& j, const GroupSpec& group) {
    std::vector<std::int64_t> free, torsion;
    if (j.contains("free")) free = array_field(j, "free").get<std::vector<std::int64_t>>();
    if (j.contains("torsion")) torsion = array_field(j, "torsion").get<std::vector<std::int64_t>>();
    return group.element(free, torsion);
}

Json values_to_json(const std::vector<Cyclotomic>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

std::vector<Cyclotomic> values_from_json(const Json& j) {
    if (!j.is_array()) throw StructuralError("expected an array of cyclotomic values");
    std::vector<Cyclotomic> out;
    for (const auto& c : j) out.push_back(cyclotomic_from_json(c));
    return out;
}

Json to_json(const Exponential& m) {
    return Json{{"free", values_to_json(m.free_values())}, {"torsion", values_to_json(m.torsion_values())}};
}

Exponential exponential_from_json(const Json& j, const GroupSpec& group, int order) {
    auto free = values_from_json(array_field(j, "free"));
    auto torsion = values_from_json(j.contains("torsion") ? array_field(j, "torsion") : Json::array());
    const int needed = order_of(torsion, order_of(free, order));
    if (needed != order) throw UnsupportedEmbedding("exponential values need cyclotomic order " + std::to_string(needed));
    for (auto& c : free) c = c.promoted(order);
    for (auto& c : torsion) c = c.promoted(order);
    return Exponential(group, order, std::move(free), std::move(torsion));
}

Json to_json(const VectorPolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exponent", e}, {"coeff", values_to_json(c)}});
    return out;
}

VectorPolynomial polynomial_from_json(const Json& j, int num_vars, int vector_dim, int order) {
    if (!j.is_array()) throw StructuralError("polynomial must be an array of monomials");
    VectorPolynomial p(num_vars, vector_dim, order);
    for (const auto& mono : j) {
        const auto e = array_field(mono, "exponent").get<Exponent>();
        if (static_cast<int>(e.size()) != num_vars) throw StructuralError("exponent length must equal the free rank");
        for (int v : e) {
            if (v < 0) throw StructuralError("exponents must be nonnegative");
        }
        auto coeff = values_from_json(array_field(mono, "coeff"));
        if (static_cast<int>(coeff.size()) != vector_dim) throw StructuralError("coefficient length must equal vector_dim");
        if (order_of(coeff, order) != order) throw UnsupportedEmbedding("coefficient outside the declared cyclotomic field");
        p.add_term(e, coeff);
    }
    return p;
}

Json to_json(const ExpoPoly& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        terms.push_back(Json{{"exponential", to_json(t.exponential)}, {"polynomial", to_json(t.polynomial)}});
    }
    return Json{{"group", to_json(f.group())},
                {"vector_dim", f.vector_dim()},
                {"cyclotomic_order", f.order()},
                {"terms", terms}};
}

ExpoPoly expopoly_from_json(const Json& j) {
    const GroupSpec group = group_from_json(field(j, "group"));
    const int k = field(j, "vector_dim").get<int>();
    const int order = field(j, "cyclotomic_order").get<int>();
    if (k < 1) throw StructuralError("vector_dim must be at least 1");
    std::vector<ExpoTerm> terms;
    for (const auto& t : array_field(j, "terms")) {
        terms.push_back(ExpoTerm{exponential_from_json(field(t, "exponential"), group, order),
                                 polynomial_from_json(field(t, "polynomial"), group.free_rank(), k, order)});
    }
    return ExpoPoly(group, k, order, std::move(terms));
}

Json to_json(const DifferenceOperator& op) {
    Json terms = Json::array();
    for (const auto& t : op.terms()) terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"shift", to_json(t.shift)}});
    return Json{{"terms", terms}};
}

DifferenceOperator operator_from_json(const Json& j, const GroupSpec& group, int order) {
    std::vector<OperatorTerm> terms;
    for (const auto& t : array_field(j, "terms")) {
        Cyclotomic c = cyclotomic_from_json(field(t, "coeff"));
        terms.push_back(OperatorTerm{c.promoted(static_cast<int>(std::lcm<std::int64_t>(order, c.order()))),
                                     element_from_json(field(t, "shift"), group)});
    }
    return DifferenceOperator(group, order, std::move(terms));
}

Json to_json(const ClassificationReport& r) {
    return Json{{"is_generalized", r.is_generalized},
                {"is_polynomial", r.is_polynomial},
                {"is_w_polynomial", r.is_w_polynomial},
                {"is_local_polynomial", r.is_local_polynomial},
                {"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
                {"dim_L_f", r.dim_translate_span}};
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport r;
    r.is_generalized = field(j, "is_generalized").get<bool>();
    r.is_polynomial = field(j, "is_polynomial").get<bool>();
    r.is_w_polynomial = field(j, "is_w_polynomial").get<bool>();
    r.is_local_polynomial = field(j, "is_local_polynomial").get<bool>();
    if (!field(j, "degree").is_null()) r.degree = field(j, "degree").get<int>();
    r.dim_translate_span = field(j, "dim_L_f").get<std::size_t>();
    return r;
}

Json to_json(const Table& t) {
    Json values = Json::array();
    const auto elems = t.group().elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        values.push_back(Json{{"point", to_json(elems[i])}, {"value", values_to_json(t.values()[i])}});
    }
    return Json{{"group", to_json(t.group())}, {"vector_dim", t.vector_dim()}, {"values", values}};
}

Table table_from_json(const Json& j) {
    const GroupSpec group = group_from_json(field(j, "group"));
    const int k = field(j, "vector_dim").get<int>();
    Table t(group, k, 4);
    std::vector<bool> seen(static_cast<std::size_t>(group.order()), false);
    for (const auto& entry : array_field(j, "values")) {
        const GroupElement x = element_from_json(field(entry, "point"), group);
        const std::size_t idx = group.index_of(x);
        if (seen[idx]) throw StructuralError("table lists a point twice");
        seen[idx] = true;
        t.set(x, values_from_json(field(entry, "value")));
    }
    for (bool s : seen) {
        if (!s) throw StructuralError("table must cover every point of the group");
    }
    return t;
}

Json to_json(const Measure& mu) {
    Json weights = Json::array();
    for (const auto& x : mu.group().elements()) {
        weights.push_back(Json{{"point", to_json(x)}, {"value", to_json(mu.weight(x))}});
    }
    return Json{{"group", to_json(mu.group())}, {"weights", weights}};
}

Measure measure_from_json(const Json& j) {
    const GroupSpec group = group_from_json(field(j, "group"));
    Measure mu(group, 4);
    for (const auto& entry : array_field(j, "weights")) {
        mu.set(element_from_json(field(entry, "point"), group), cyclotomic_from_json(field(entry, "value")));
    }
    return mu;
}

Json to_json(const lab::ResidualReport& r) {
    return Json{{"lambda", {r.lambda.real(), r.lambda.imag()}},
                {"e", r.e},
                {"windows", r.windows},
                {"residuals", r.residuals},
                {"conditioning", r.conditioning}};
}

lab::ResidualReport residual_report_from_json(const Json& j) {
    lab::ResidualReport r;
    const auto lambda = array_field(j, "lambda").get<std::vector<double>>();
    if (lambda.size() != 2) throw StructuralError("lambda must be [re, im]");
    r.lambda = {lambda[0], lambda[1]};
    r.e = array_field(j, "e").get<std::vector<double>>();
    r.windows = array_field(j, "windows").get<std::vector<int>>();
    r.residuals = array_field(j, "residuals").get<std::vector<double>>();
    r.conditioning = array_field(j, "conditioning").get<std::vector<double>>();
    for (double c : r.conditioning) r.ill_conditioned.push_back(c > lab::kIllConditioned);
    return r;
}

}  // namespace expocalc::json_io
