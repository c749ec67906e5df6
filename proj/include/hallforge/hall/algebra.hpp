#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallforge/hall/element.hpp"
#include "hallforge/qlinalg/qpoly.hpp"
#include "hallforge/waldhausen/flags.hpp"

namespace hallforge {

/// One structure constant: the coefficient of v in u * w.
struct StructureConstant {
    std::string u, w, v;
    Rational coeff;
};

/// Polynomial-in-q coefficients, Vect only.
using SymbolicElement = std::map<std::string, QPolynomial>;

inline HallElement evaluate(const SymbolicElement& s, int q) {
    HallElement e;
    for (const auto& [l, p] : s) e.add(l, Rational(p.evaluate(q)));
    return e;
}

/// |P| for the parabolic with diagonal blocks d_1..d_r: q^{sum_{i<j} d_i d_j} prod |GL_{d_i}|.
inline QPolynomial parabolic_polynomial(const std::vector<std::size_t>& blocks) {
    QPolynomial r = 1;
    std::size_t before = 0;
    for (auto d : blocks) {
        r *= general_linear_polynomial(static_cast<int>(d)) * QPolynomial::monomial(before * d);
        before += d;
    }
    return r;
}

/// The Hall algebra of the category up to a dimension bound:
///   S_1 x S_1 <-(end)- S_2 -(mid)-> S_1,   f * g = mid_! end^*(f x g).
class HallAlgebra {
public:
    HallAlgebra(const CategorySpec& spec, std::size_t bound)
        : spec_(spec),
          bound_(bound),
          s1_(std::make_shared<const FlagSpace>(FlagSpace::up_to(spec, 1, bound))),
          s2_(std::make_shared<const FlagSpace>(FlagSpace::up_to(spec, 2, bound))) {
        auto leg = [&](std::vector<std::size_t> I) {
            return skeletal_functor(s2_->skeleton(), s1_->skeleton(), flag_restriction(*s2_, *s1_, std::move(I)));
        };
        left_ = leg({0, 1});
        right_ = leg({1, 2});
        mid_ = leg({0, 2});
    }

    const CategorySpec& spec() const { return spec_; }
    std::size_t bound() const { return bound_; }
    const FlagSpace& objects() const { return *s1_; }
    const FlagSpace& sequences() const { return *s2_; }
    const SkeletalGroupoid& classes() const { return *s1_->groupoid(); }
    const GroupoidFunctor& left() const { return left_; }
    const GroupoidFunctor& right() const { return right_; }
    const GroupoidFunctor& mid() const { return mid_; }

    HallElement delta(const std::string& label) const {
        if (!classes().find(label)) throw usage_error("unknown class " + label + " in " + spec_.name());
        return HallElement::delta(label);
    }

    /// The class of the zero object.
    HallElement unit() const {
        Grade z{{DimVector(spec_.vertex_count(), 0)}};
        return HallElement::delta(grade_label(z));
    }

    HallElement product(const HallElement& f, const HallElement& g) const {
        const auto& G1 = classes();
        auto fv = values_on(f, G1), gv = values_on(g, G1);
        for (std::size_t a = 0; a < fv.size(); ++a)
            for (std::size_t b = 0; b < gv.size(); ++b)
                if (fv[a] != 0 && gv[b] != 0 && G1[a].weight + G1[b].weight > bound_)
                    throw bound_exceeded("product of " + G1[a].label + " and " + G1[b].label + " exceeds the bound " +
                                         std::to_string(bound_));
        auto on_s2 = pointwise(pull_values(fv, left_), pull_values(gv, right_));
        return element_from(push_values(on_s2, mid_), G1);
    }

    /// Products of the deltas u, w with weight(u) + weight(w) <= bound; the
    /// coefficients are checked to be integers.
    std::vector<StructureConstant> structure_constants() const {
        const auto& G1 = classes();
        std::vector<StructureConstant> out;
        for (std::size_t a = 0; a < G1.size(); ++a)
            for (std::size_t b = 0; b < G1.size(); ++b) {
                if (G1[a].weight + G1[b].weight > bound_) continue;
                auto p = product(HallElement::delta(G1[a].label), HallElement::delta(G1[b].label));
                for (const auto& [v, c] : p.terms()) {
                    if (denominator(c) != 1)
                        throw std::logic_error("non-integral structure constant " + c.str() + " for " + G1[a].label +
                                               " * " + G1[b].label);
                    out.push_back({G1[a].label, G1[b].label, v, c});
                }
            }
        auto key = [&](const StructureConstant& s) {
            return std::make_tuple(G1[G1.index_of(s.u)].weight, s.u, G1[G1.index_of(s.w)].weight, s.w,
                                   G1[G1.index_of(s.v)].weight, s.v);
        };
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
        return out;
    }

    /// delta_u * delta_w with coefficients as polynomials in q.  Every flag
    /// automorphism group of Vect is a full parabolic, so each push weight
    /// |Aut z| / |Aut y| is a ratio of parabolic polynomials.
    SymbolicElement symbolic_product(const std::string& u, const std::string& w) const {
        if (spec_.kind != CategoryKind::vect) throw usage_error("symbolic products exist only for Vect");
        const auto& G1 = classes();
        const auto& G2 = *s2_->groupoid();
        const std::size_t a = G1.index_of(u), b = G1.index_of(w);
        if (G1[a].weight + G1[b].weight > bound_) throw bound_exceeded("product exceeds the bound");
        auto aut_poly = [&](const FlagSpace& s, const Component& c) {
            std::vector<std::size_t> blocks;
            for (const auto& blk : s.shape(c.piece).grade().blocks) blocks.push_back(blk[0]);
            auto p = parabolic_polynomial(blocks);
            if (p.evaluate(spec_.field->order()) != c.aut->order())
                throw std::logic_error("automorphism group of " + c.label + " is not a full parabolic");
            return p;
        };
        SymbolicElement out;
        for (std::size_t c = 0; c < G2.size(); ++c) {
            if (left_(c) != a || right_(c) != b) continue;
            const auto& z = G1[mid_(c)];
            auto coeff = aut_poly(*s1_, z).divide_exact(aut_poly(*s2_, G2[c]));
            auto& slot = out[z.label];
            slot = slot + coeff;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    std::string render(const HallElement& e) const { return hallforge::render(e, &classes()); }

private:
    CategorySpec spec_;
    std::size_t bound_;
    std::shared_ptr<const FlagSpace> s1_, s2_;
    GroupoidFunctor left_, right_, mid_;
};

inline HallElement hall_product(const HallAlgebra& alg, const HallElement& f, const HallElement& g) {
    return alg.product(f, g);
}

/// The product of several elements along one path through the associativity
/// cube: the gaps between consecutive letters are closed in the given order,
/// each closing multiplying the two blocks it separates.
inline HallElement product_along_path(const HallAlgebra& alg, const std::vector<HallElement>& letters,
                                      const std::vector<std::size_t>& gap_order) {
    if (letters.empty()) return alg.unit();
    if (gap_order.size() + 1 != letters.size()) throw usage_error("one gap per pair of adjacent letters is needed");
    // blocks: [first letter, last letter] -> value
    std::map<std::size_t, std::pair<std::size_t, HallElement>> blocks;
    for (std::size_t k = 0; k < letters.size(); ++k) blocks[k] = {k, letters[k]};
    std::vector<bool> closed(gap_order.size(), false);
    for (auto gap : gap_order) {
        if (gap >= closed.size() || closed[gap]) throw usage_error("gap order is not a permutation");
        closed[gap] = true;
        auto right = blocks.find(gap + 1);
        auto left = std::prev(right);
        left->second = {right->second.first, alg.product(left->second.second, right->second.second)};
        blocks.erase(right);
    }
    return blocks.begin()->second.second;
}

}  // namespace hallforge
