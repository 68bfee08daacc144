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

#include <map>
#include <optional>
#include <vector>

#include "expocalc/expopoly.hpp"
#include "expocalc/linalg.hpp"

namespace expocalc {

/// Finite coordinate frame for exponential polynomials: one block per
/// exponential m, spanning m * (polynomials of degree <= d_m) (x) C^k.
class CoordinateFrame {
   public:
    CoordinateFrame(GroupSpec group, int vector_dim, int order);
    /// Frame spanned by the term structure of the given functions.
    static CoordinateFrame covering(const std::vector<ExpoPoly>& functions);

    /// Extends the block of m to cover degree d (only before use).
    void cover(const Exponential& m, int degree);

    std::size_t size() const noexcept { return size_; }
    /// Coordinates of f, or nullopt when f has a component outside the frame.
    std::optional<linalg::Vec<Cyclotomic>> coordinates(const ExpoPoly& f) const;
    /// Function with the given coordinates.
    ExpoPoly function(const linalg::Vec<Cyclotomic>& coords) const;

    const GroupSpec& group() const noexcept { return group_; }
    int vector_dim() const noexcept { return vector_dim_; }
    int order() const noexcept { return order_; }

   private:
    void rebuild();

    GroupSpec group_;
    int vector_dim_;
    int order_;
    std::map<Exponential, int> degrees_;
    // (exponential, monomial) -> offset of its k components
    std::map<Exponential, std::map<Exponent, std::size_t>> offsets_;
    std::size_t size_ = 0;
};

/// Linear span of a finite family of exponential polynomials, with exact
/// membership and coordinates with respect to the stored basis.
class FunctionSpan {
   public:
    explicit FunctionSpan(CoordinateFrame frame);
    static FunctionSpan of(const std::vector<ExpoPoly>& functions);

    /// Adds f; returns true when the dimension grew.
    bool insert(const ExpoPoly& f);
    bool contains(const ExpoPoly& f) const;
    /// c with f = sum c_j basis()[j], or nullopt.
    std::optional<std::vector<Cyclotomic>> coordinates(const ExpoPoly& f) const;
    /// Residual of f after projecting out the span along the echelon basis.
    std::optional<linalg::Vec<Cyclotomic>> residual(const ExpoPoly& f) const;

    const std::vector<ExpoPoly>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const CoordinateFrame& frame() const noexcept { return frame_; }

   private:
    CoordinateFrame frame_;
    linalg::RowSpace<Cyclotomic> space_;
    std::vector<ExpoPoly> basis_;
};

/// L_f, the span of all translates of f. Finite-dimensional for every
/// exponential polynomial since T_g(m p) stays in m * (polys of degree <= deg p).
class TranslateSpan {
   public:
    const std::vector<ExpoPoly>& basis() const noexcept { return span_.basis(); }
    std::size_t dim() const noexcept { return span_.dim(); }
    bool contains(const ExpoPoly& f) const { return span_.contains(f); }
    std::optional<std::vector<Cyclotomic>> coordinates(const ExpoPoly& f) const { return span_.coordinates(f); }
    const FunctionSpan& span() const noexcept { return span_; }

    /// Closure certificate: for generator index t (free generators, then
    /// torsion generators), column j of the matrix holds the coordinates of
    /// T_{gen_t} basis()[j]. Stored as rows: action[t][j] = coords of T basis_j.
    const std::vector<std::vector<std::vector<Cyclotomic>>>& generator_action() const noexcept { return action_; }

    friend TranslateSpan translate_span(const ExpoPoly& f);

   private:
    explicit TranslateSpan(FunctionSpan span) : span_(std::move(span)) {}

    FunctionSpan span_;
    std::vector<std::vector<std::vector<Cyclotomic>>> action_;
};

/// Iterative closure: seed {f}, translate every basis element by every
/// generator, keep any translate that raises the exact rank, until stable.
/// Negative generators are not needed: a finite-dimensional space mapped into
/// itself by an injective T_g is also invariant under T_{-g}.
TranslateSpan translate_span(const ExpoPoly& f);

struct SpectralEntry {
    Exponential exponential;
    /// Basis of {e in C^k : m * e lies in L_f}.
    std::vector<std::vector<Cyclotomic>> vectors;
};

/// For every exponential m of f, the admissible vectors e with m * e in L_f.
std::vector<SpectralEntry> spectral_set(const ExpoPoly& f);

}  // namespace expocalc
