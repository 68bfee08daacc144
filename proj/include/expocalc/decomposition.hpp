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

#include <vector>

#include "expocalc/difference_operator.hpp"
#include "expocalc/expopoly.hpp"
#include "expocalc/oracle.hpp"

namespace expocalc {

/// Finite set of difference operators that isolates every component: for all
/// polynomials p_1..p_n with sum deg p_i <= s and f = sum p_i m_i, and every
/// index i, some D in the set has D f = p_i m_i.
///
/// n = 1 gives {T_0}; s = -n gives {0}. Otherwise the set is the union of
/// isolating_operator(d, b) over all degree vectors d (entries >= -1,
/// sum <= s) and indices b; sorted, duplicates removed.
std::vector<DifferenceOperator> lemma2_operators(const GroupSpec& group, const std::vector<Exponential>& ms, int s);

/// The operator that maps sum p_i m_i to p_b m_b whenever deg p_i <= degrees[i].
///
/// Built by the recursion
///   O(d, b) = c (O(d - e_a, b) D_a - O(d - e_b, b) D_b),
///   D_x = T_g - m_x(g) T_0,  c = 1 / (m_b(g) - m_a(g)),
/// with a the first index other than b carrying a nonzero polynomial and g a
/// generator separating m_a from m_b. D_a lowers the degree of p_a, D_b that
/// of p_b; the difference of the two b-components is (m_b(g) - m_a(g)) p_b m_b.
DifferenceOperator isolating_operator(const GroupSpec& group, const std::vector<Exponential>& ms,
                                      const std::vector<int>& degrees, int index);

/// Components (p_1 m_1, ..., p_n m_n) of f obtained by applying the
/// lemma2_operators set and selecting, per index, the output that
/// reconstructs f. Throws DecompositionFailure when no consistent selection exists.
std::vector<ExpoPoly> extract_components_ops(const ExpoPoly& f, const std::vector<Exponential>& ms, int s);

/// Same for black-box input. Operator outputs are sampled on a centered box
/// of side 2(s+1)(n+1) (times all torsion), each output is fitted as q * m_i
/// with deg q <= s, and a selection summing to f on the box is searched.
std::vector<ExpoPoly> extract_components_ops(const FunctionOracle& f, const std::vector<Exponential>& ms, int s);

/// Independent route: solve for the coefficients of every p_i (total degree
/// <= s) by exact interpolation on a growing box until full column rank.
/// Throws IllPosedInstance if rank stays deficient up to side 4(s+2)(n+1),
/// DecompositionFailure if f does not fit the model on the box.
std::vector<ExpoPoly> extract_components_solve(const FunctionOracle& f, const std::vector<Exponential>& ms, int s);

}  // namespace expocalc
