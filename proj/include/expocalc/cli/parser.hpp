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

#include <optional>
#include <string>
#include <vector>

#include "expocalc/cyclotomic.hpp"
#include "expocalc/exponential.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/group.hpp"

namespace expocalc::dsl {

/// Group literal "Z^r x Zn1 x Zn2 ...", spaces optional; "Z^0" is the trivial group.
GroupSpec parse_group(const std::string& text);

struct OrderResolution {
    int order = 4;
    std::vector<std::string> notices;
};

/// Cyclotomic order for a set of source texts. Without an explicit order this is
/// lcm(4, torsion orders, every n in zeta(n)), with a notice when zeta raised it.
/// An explicit order is used as given; texts needing more fail with ParseError.
OrderResolution resolve_order(const std::vector<std::string>& texts, const GroupSpec& group,
                              std::optional<int> explicit_order);

/// Parses an expression into canonical form with values in Q(zeta_order).
ExpoPoly parse(const std::string& text, const GroupSpec& group, int order);

/// Comma-separated list of exponential atoms, e.g. "exp[1;],exp[2;]".
std::vector<Exponential> parse_exponentials(const std::string& text, const GroupSpec& group, int order);

/// Point literal "a,b;c": free coordinates, then torsion coordinates after ';'.
GroupElement parse_point(const std::string& text, const GroupSpec& group);

std::string print(const Cyclotomic& c);
std::string print(const Exponential& m);
/// Canonical text; parse(print(f), f.group(), f.order()) == f.
std::string print(const ExpoPoly& f);

}  // namespace expocalc::dsl
