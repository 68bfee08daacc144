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

#include <functional>
#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/group.hpp"

namespace expocalc {

/// Black-box access to a function G -> C^k. Evaluation must be deterministic.
struct FunctionOracle {
    GroupSpec group;
    int vector_dim = 1;
    int order = 4;
    std::function<std::vector<Cyclotomic>(const GroupElement&)> eval;

    std::vector<Cyclotomic> operator()(const GroupElement& x) const { return eval(x); }

    static FunctionOracle of(const ExpoPoly& f) {
        return FunctionOracle{f.group(), f.vector_dim(), f.order(), [f](const GroupElement& x) { return f.evaluate(x); }};
    }
};

}  // namespace expocalc
