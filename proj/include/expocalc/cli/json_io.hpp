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

#include <complex>

#include "json.hpp"

#include "expocalc/cyclotomic.hpp"
#include "expocalc/difference_operator.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/fourier.hpp"
#include "expocalc/group.hpp"
#include "expocalc/lab.hpp"
#include "expocalc/least_squares.hpp"
#include "expocalc/structure.hpp"

namespace expocalc::json_io {

using Json = nlohmann::json;

Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json to_json(const GroupElement& x);
GroupElement element_from_json(const Json& j, const GroupSpec& group);

Json to_json(const Exponential& m);
Exponential exponential_from_json(const Json& j, const GroupSpec& group, int order);

Json to_json(const VectorPolynomial& p);
VectorPolynomial polynomial_from_json(const Json& j, int num_vars, int vector_dim, int order);

Json to_json(const ExpoPoly& f);
ExpoPoly expopoly_from_json(const Json& j);

Json to_json(const DifferenceOperator& op);
DifferenceOperator operator_from_json(const Json& j, const GroupSpec& group, int order);

Json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const Table& t);
Table table_from_json(const Json& j);

Json to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

Json to_json(const lab::ResidualReport& r);
lab::ResidualReport residual_report_from_json(const Json& j);

Json values_to_json(const std::vector<Cyclotomic>& v);
std::vector<Cyclotomic> values_from_json(const Json& j);

}  // namespace expocalc::json_io
