#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallforge/fincat/rep_shape.hpp"
#include "hallforge/groupoid/action.hpp"

namespace hallforge {

/// Flags of length n in a category, at a chosen set of grades: one action
/// piece per grade, together with its skeleton.
class FlagSpace {
public:
    FlagSpace(CategorySpec spec, std::size_t n, std::vector<Grade> grades) : spec_(std::move(spec)), n_(n) {
        for (auto& g : grades) {
            if (g.length() != n) throw usage_error("grade length does not match flag length");
            if (piece_of_.count(g)) continue;
            auto shape = std::make_shared<const RepShape>(spec_, g);
            ActionPiece p;
            p.grade = grade_label(g);
            p.weight = g.total();
            p.points = shape->points();
            p.group = shape->group();
            p.act = [shape](const Matrix& m, std::size_t x) { return shape->act(m, x); };
            p.label = [shape](std::size_t x) { return shape->label(x); };
            piece_of_.emplace(g, shapes_.size());
            shapes_.push_back(shape);
            action_.pieces.push_back(std::move(p));
        }
        skeleton_ = skeletalize(action_);
    }

    /// All grades of total dimension at most `bound`.
    static FlagSpace up_to(const CategorySpec& spec, std::size_t n, std::size_t bound) {
        if (bound > spec.max_bound())
            throw bound_exceeded("bound " + std::to_string(bound) + " above the limit " + std::to_string(spec.max_bound()) +
                                 " for " + spec.name());
        return FlagSpace(spec, n, grades_up_to(spec.vertex_count(), n, bound));
    }

    const CategorySpec& spec() const { return spec_; }
    std::size_t length() const { return n_; }
    const std::vector<std::shared_ptr<const RepShape>>& shapes() const { return shapes_; }
    const RepShape& shape(std::size_t piece) const { return *shapes_[piece]; }
    std::optional<std::size_t> piece_of(const Grade& g) const {
        auto it = piece_of_.find(g);
        if (it == piece_of_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t piece_or_throw(const Grade& g) const {
        auto p = piece_of(g);
        if (!p) throw bound_exceeded("grade " + grade_label(g) + " is outside the enumerated range");
        return *p;
    }

    const ActionGroupoid& action() const { return action_; }
    const Skeleton& skeleton() const { return skeleton_; }
    const GroupoidPtr& groupoid() const { return skeleton_.groupoid; }
    std::size_t component(std::size_t piece, std::size_t point) const { return skeleton_.component_of[piece][point]; }

    /// Normal-form data of the representative of class c.
    RepData representative(std::size_t c) const {
        const auto& comp = (*groupoid())[c];
        return shape(comp.piece).decode(comp.point);
    }

private:
    CategorySpec spec_;
    std::size_t n_;
    std::vector<std::shared_ptr<const RepShape>> shapes_;
    std::map<Grade, std::size_t> piece_of_;
    ActionGroupoid action_;
    Skeleton skeleton_;
};

/// An isomorphism class of objects with its automorphism group.
struct IsoClass {
    std::string label;
    Grade grade;  // a single dimension vector
    GroupPtr aut;
    RepData representative;
    std::size_t weight = 0;
};

inline std::vector<IsoClass> classes_of(const FlagSpace& s) {
    std::vector<IsoClass> out;
    const auto& g = *s.groupoid();
    for (std::size_t c = 0; c < g.size(); ++c)
        out.push_back({g[c].label, s.shape(g[c].piece).grade(), g[c].aut, s.representative(c), g[c].weight});
    return out;
}

/// One class per isomorphism type with total dimension <= bound.
inline std::vector<IsoClass> objects_up_to(const CategorySpec& spec, std::size_t bound) {
    return classes_of(FlagSpace::up_to(spec, 1, bound));
}

/// A class of short exact sequences 0 -> U -> V -> W -> 0.
///
/// In normal form V has U as its first block at every vertex, so the mono is
/// [I; 0] and the epi is [0 I] vertex by vertex.
struct ExactSequence {
    std::string label;
    std::string u, v, w;       // class labels of the three objects
    std::vector<Matrix> mono;  // per vertex, V_v x U_v
    std::vector<Matrix> epi;   // per vertex, W_v x V_v
    GroupPtr aut;              // automorphisms of the whole diagram
    RepData data;
};

namespace detail {

inline std::size_t class_in(const FlagSpace& s1, const RepShape& src, const RepData& d, const std::vector<std::size_t>& I) {
    Grade g = restrict_grade(src.grade(), I);
    std::size_t p = s1.piece_or_throw(g);
    const auto& dst = s1.shape(p);
    return s1.component(p, dst.encode(restrict_data(src, dst, d, I)));
}

}  // namespace detail

/// All classes of exact sequences with ends isomorphic to U and W.
inline std::vector<ExactSequence> exact_sequences(const CategorySpec& spec, const IsoClass& U, const IsoClass& W) {
    Grade g{{U.grade.blocks.at(0), W.grade.blocks.at(0)}};
    FlagSpace s2(spec, 2, {g});
    FlagSpace s1(spec, 1, {restrict_grade(g, {0, 1}), restrict_grade(g, {1, 2}), restrict_grade(g, {0, 2})});
    const auto& src = s2.shape(0);
    std::vector<ExactSequence> out;
    const auto& G2 = *s2.groupoid();
    const auto& G1 = *s1.groupoid();
    for (std::size_t c = 0; c < G2.size(); ++c) {
        RepData d = s2.representative(c);
        auto cu = detail::class_in(s1, src, d, {0, 1});
        auto cw = detail::class_in(s1, src, d, {1, 2});
        auto cv = detail::class_in(s1, src, d, {0, 2});
        if (G1[cu].label != U.label || G1[cw].label != W.label) continue;
        ExactSequence e;
        e.label = G2[c].label;
        e.u = G1[cu].label;
        e.v = G1[cv].label;
        e.w = G1[cw].label;
        for (std::size_t v = 0; v < spec.vertex_count(); ++v) {
            std::size_t du = U.grade.blocks[0][v], dw = W.grade.blocks[0][v];
            Matrix m(spec.field, du + dw, du), p(spec.field, dw, du + dw);
            for (std::size_t i = 0; i < du; ++i) m.at(i, i) = 1;
            for (std::size_t i = 0; i < dw; ++i) p.at(i, du + i) = 1;
            e.mono.push_back(m);
            e.epi.push_back(p);
        }
        e.aut = G2[c].aut;
        e.data = d;
        out.push_back(std::move(e));
    }
    return out;
}

/// A commutative square of linear maps  A -f-> B -h-> D,  A -g-> C -k-> D.
struct LinearSquare {
    Matrix f, g, h, k;
};

namespace detail {

inline void check_linear_square(const LinearSquare& s) {
    if (s.f.cols() != s.g.cols() || s.h.cols() != s.f.rows() || s.k.cols() != s.g.rows() || s.h.rows() != s.k.rows())
        throw diagram_error("square maps do not compose");
    if (s.h * s.f != s.k * s.g) throw diagram_error("square does not commute");
}

// [f; g] : A -> B + C and [h, -k] : B + C -> D
inline std::pair<std::size_t, std::size_t> square_ranks(const LinearSquare& s) {
    const FiniteField* fld = s.f.field() ? s.f.field() : s.h.field();
    Matrix in = Matrix::stack(s.f, s.g);
    Matrix neg_k = fld ? s.k.scaled(fld->neg(1)) : s.k;
    Matrix out = Matrix::concat(s.h, neg_k);
    return {in.rank(), out.rank()};
}

}  // namespace detail

/// A is the pullback of B -> D <- C.
inline bool is_pullback(const LinearSquare& s) {
    detail::check_linear_square(s);
    auto [r_in, r_out] = detail::square_ranks(s);
    std::size_t a = s.f.cols(), bc = s.f.rows() + s.g.rows();
    return r_in == a && bc - r_out == a;
}

/// D is the pushout of B <- A -> C.
inline bool is_pushout(const LinearSquare& s) {
    detail::check_linear_square(s);
    auto [r_in, r_out] = detail::square_ranks(s);
    std::size_t d = s.h.rows(), bc = s.f.rows() + s.g.rows();
    return r_out == d && bc - d == r_in;
}

/// For mono/epi squares the two properties coincide; both are checked.
inline bool is_bicartesian(const LinearSquare& s) { return is_pullback(s) && is_pushout(s); }

/// Vertexwise version for representations.
inline bool is_bicartesian(const std::vector<LinearSquare>& per_vertex) {
    for (const auto& s : per_vertex)
        if (!is_bicartesian(s)) return false;
    return true;
}

}  // namespace hallforge
