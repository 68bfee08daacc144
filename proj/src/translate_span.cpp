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

#include "expocalc/translate_span.hpp"

#include "expocalc/errors.hpp"

namespace expocalc {

CoordinateFrame::CoordinateFrame(GroupSpec group, int vector_dim, int order)
    : group_(std::move(group)), vector_dim_(vector_dim), order_(order) {}

CoordinateFrame CoordinateFrame::covering(const std::vector<ExpoPoly>& functions) {
    if (functions.empty()) throw PreconditionError("cannot build a coordinate frame from no functions");
    int order = functions.front().order();
    for (const auto& f : functions) order = static_cast<int>(lcm_order(order, f.order()));
    CoordinateFrame frame(functions.front().group(), functions.front().vector_dim(), order);
    for (const auto& f : functions) {
        for (const auto& t : f.terms()) frame.cover(t.exponential, t.polynomial.degree());
    }
    return frame;
}

void CoordinateFrame::cover(const Exponential& m, int degree) {
    const Exponential key = m.promoted(order_);
    auto [it, inserted] = degrees_.try_emplace(key, degree);
    if (!inserted) it->second = std::max(it->second, degree);
    rebuild();
}

void CoordinateFrame::rebuild() {
    offsets_.clear();
    std::size_t next = 0;
    for (const auto& [m, d] : degrees_) {
        auto& block = offsets_[m];
        for (auto& e : monomials_up_to(group_.free_rank(), d)) {
            block.emplace(std::move(e), next);
            next += vector_dim_;
        }
    }
    size_ = next;
}

std::optional<linalg::Vec<Cyclotomic>> CoordinateFrame::coordinates(const ExpoPoly& f) const {
    if (!(f.group() == group_) || f.vector_dim() != vector_dim_) {
        throw StructuralError("function does not match the coordinate frame");
    }
    linalg::Vec<Cyclotomic> out(size_, Cyclotomic(order_));
    for (const auto& t : f.terms()) {
        auto block = offsets_.find(t.exponential.promoted(order_));
        if (block == offsets_.end()) return std::nullopt;
        for (const auto& [e, c] : t.polynomial.terms()) {
            auto slot = block->second.find(e);
            if (slot == block->second.end()) return std::nullopt;
            for (int j = 0; j < vector_dim_; ++j) out[slot->second + j] = c[j].promoted(order_);
        }
    }
    return out;
}

ExpoPoly CoordinateFrame::function(const linalg::Vec<Cyclotomic>& coords) const {
    if (coords.size() != size_) throw StructuralError("coordinate vector has the wrong length");
    std::vector<ExpoTerm> terms;
    for (const auto& [m, block] : offsets_) {
        VectorPolynomial p(group_.free_rank(), vector_dim_, order_);
        for (const auto& [e, offset] : block) {
            p.add_term(e, VectorPolynomial::Coefficient(coords.begin() + offset, coords.begin() + offset + vector_dim_));
        }
        terms.push_back(ExpoTerm{m, std::move(p)});
    }
    return ExpoPoly(group_, vector_dim_, order_, std::move(terms));
}

FunctionSpan::FunctionSpan(CoordinateFrame frame)
    : frame_(std::move(frame)), space_(frame_.size(), Cyclotomic(frame_.order())) {}

FunctionSpan FunctionSpan::of(const std::vector<ExpoPoly>& functions) {
    FunctionSpan span(CoordinateFrame::covering(functions));
    for (const auto& f : functions) span.insert(f);
    return span;
}

bool FunctionSpan::insert(const ExpoPoly& f) {
    auto coords = frame_.coordinates(f);
    if (!coords) throw StructuralError("function lies outside the coordinate frame of this span");
    if (!space_.insert(std::move(*coords))) return false;
    basis_.push_back(f);
    return true;
}

bool FunctionSpan::contains(const ExpoPoly& f) const {
    if (!(f.group() == frame_.group()) || f.vector_dim() != frame_.vector_dim()) return false;
    auto coords = frame_.coordinates(f);
    return coords && space_.contains(*coords);
}

std::optional<std::vector<Cyclotomic>> FunctionSpan::coordinates(const ExpoPoly& f) const {
    auto coords = frame_.coordinates(f);
    if (!coords) return std::nullopt;
    return space_.coordinates(std::move(*coords));
}

std::optional<linalg::Vec<Cyclotomic>> FunctionSpan::residual(const ExpoPoly& f) const {
    auto coords = frame_.coordinates(f);
    if (!coords) return std::nullopt;
    return space_.residual(std::move(*coords));
}

TranslateSpan translate_span(const ExpoPoly& f) {
    CoordinateFrame frame(f.group(), f.vector_dim(), f.order());
    for (const auto& t : f.terms()) frame.cover(t.exponential, t.polynomial.degree());
    TranslateSpan result{FunctionSpan(std::move(frame))};
    FunctionSpan& span = result.span_;

    // Translations are invertible, so closure under T_g for each generator g
    // already gives closure under T_{-g} on the finite-dimensional span.
    const auto generators = f.group().generators();
    std::vector<std::vector<std::vector<Cyclotomic>>> action(generators.size());
    if (!f.is_zero()) span.insert(f);
    for (std::size_t next = 0; next < span.basis().size(); ++next) {
        const ExpoPoly current = span.basis()[next];
        for (std::size_t t = 0; t < generators.size(); ++t) {
            ExpoPoly moved = current.translate(generators[t]);
            auto coords = span.coordinates(moved);
            if (!coords) {
                if (!span.insert(std::move(moved))) throw std::logic_error("translate fits neither inside nor outside the span");
                coords = std::vector<Cyclotomic>(span.dim(), Cyclotomic(f.order()));
                coords->back() = Cyclotomic(f.order(), 1);
            }
            action[t].push_back(std::move(*coords));
        }
    }
    for (auto& columns : action) {
        for (auto& c : columns) c.resize(span.dim(), Cyclotomic(f.order()));
    }
    result.action_ = std::move(action);
    return result;
}

std::vector<SpectralEntry> spectral_set(const ExpoPoly& f) {
    const TranslateSpan span = translate_span(f);
    const int k = f.vector_dim();
    std::vector<SpectralEntry> out;
    for (const auto& t : f.terms()) {
        // e is admissible iff sum_j e_j * residual(m u_j) = 0.
        std::vector<linalg::Vec<Cyclotomic>> residuals;
        for (int j = 0; j < k; ++j) {
            std::vector<Cyclotomic> unit(k, Cyclotomic(f.order()));
            unit[j] = Cyclotomic(f.order(), 1);
            const ExpoPoly probe = ExpoPoly::single(
                f.group(), t.exponential, VectorPolynomial::constant(f.group().free_rank(), unit, f.order()));
            auto r = span.span().residual(probe);
            if (!r) throw std::logic_error("spectral probe outside the frame of its own translate span");
            residuals.push_back(std::move(*r));
        }
        const std::size_t rows = residuals.front().size();
        linalg::Mat<Cyclotomic> system(rows, linalg::Vec<Cyclotomic>(k, Cyclotomic(f.order())));
        for (std::size_t r = 0; r < rows; ++r) {
            for (int j = 0; j < k; ++j) system[r][j] = residuals[j][r];
        }
        out.push_back(SpectralEntry{t.exponential, linalg::nullspace(std::move(system), k, Cyclotomic(f.order()))});
    }
    return out;
}

}  // namespace expocalc
