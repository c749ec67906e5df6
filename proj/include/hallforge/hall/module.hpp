#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "hallforge/fincat/slice.hpp"
#include "hallforge/hall/algebra.hpp"

namespace hallforge {

/// Functions on the classes of the slice category.
using ModuleElement = HallElement;

/// The action of the Hall algebra of Vect on functions over Vect/V:
///   S_1 x S_1^{/V} <-(C01, C12)- S_2^{/V} -(C02)-> S_1^{/V}.
/// C01 forgets the map to V, since a sub of a slice flag has zero map.
class HallModule {
public:
    HallModule(const CategorySpec& base, std::size_t v_dim, std::size_t bound)
        : algebra_(base, bound),
          slice_(slice_category(base, v_dim)),
          m1_(std::make_shared<const FlagSpace>(FlagSpace::up_to(slice_, 1, bound))),
          m2_(std::make_shared<const FlagSpace>(FlagSpace::up_to(slice_, 2, bound))) {
        c01_ = skeletal_functor(m2_->skeleton(), algebra_.objects().skeleton(),
                                flag_restriction(*m2_, algebra_.objects(), {0, 1}));
        c12_ = skeletal_functor(m2_->skeleton(), m1_->skeleton(), flag_restriction(*m2_, *m1_, {1, 2}));
        c02_ = skeletal_functor(m2_->skeleton(), m1_->skeleton(), flag_restriction(*m2_, *m1_, {0, 2}));
    }

    const HallAlgebra& algebra() const { return algebra_; }
    const CategorySpec& slice() const { return slice_; }
    std::size_t bound() const { return algebra_.bound(); }
    const FlagSpace& objects() const { return *m1_; }
    const FlagSpace& sequences() const { return *m2_; }
    const SkeletalGroupoid& classes() const { return *m1_->groupoid(); }

    ModuleElement delta(const std::string& label) const {
        if (!classes().find(label)) throw usage_error("unknown class " + label + " in " + slice_.name());
        return HallElement::delta(label);
    }

    /// The slice class of the given dimension whose map to V has the given rank.
    std::string class_label(std::size_t dim, std::size_t rank) const {
        const auto& G = classes();
        for (std::size_t c = 0; c < G.size(); ++c) {
            const auto& comp = G[c];
            if (comp.weight != dim) continue;
            if (m1_->representative(c).slice.rank() == rank) return comp.label;
        }
        throw usage_error("no slice class of dimension " + std::to_string(dim) + " and rank " + std::to_string(rank));
    }

    ModuleElement act(const HallElement& f, const ModuleElement& m) const {
        const auto& A = algebra_.classes();
        const auto& M = classes();
        auto fv = values_on(f, A), mv = values_on(m, M);
        for (std::size_t a = 0; a < fv.size(); ++a)
            for (std::size_t b = 0; b < mv.size(); ++b)
                if (fv[a] != 0 && mv[b] != 0 && A[a].weight + M[b].weight > bound())
                    throw bound_exceeded("action of " + A[a].label + " on " + M[b].label + " exceeds the bound " +
                                         std::to_string(bound()));
        auto on_m2 = pointwise(pull_values(fv, c01_), pull_values(mv, c12_));
        return element_from(push_values(on_m2, c02_), M);
    }

    std::string render(const ModuleElement& e) const { return hallforge::render(e, &classes()); }

private:
    HallAlgebra algebra_;
    CategorySpec slice_;
    std::shared_ptr<const FlagSpace> m1_, m2_;
    GroupoidFunctor c01_, c12_, c02_;
};

inline ModuleElement module_action(const HallModule& mod, const HallElement& f, const ModuleElement& m) {
    return mod.act(f, m);
}

}  // namespace hallforge
