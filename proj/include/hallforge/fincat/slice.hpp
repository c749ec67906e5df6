#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hallforge/fincat/objects.hpp"

namespace hallforge {

/// The slice category C/V over an object V of Vect.
///
/// Objects are linear maps S -> V.  Monos are maps that are monos after
/// forgetting the structure map and whose source has zero structure map;
/// epis are created by the forgetful functor.
inline CategorySpec slice_category(const CategorySpec& base, const IsoClass& V) {
    if (base.kind != CategoryKind::vect)
        throw usage_error("slice categories are implemented over Vect only");
    if (V.grade.blocks.size() != 1 || V.grade.blocks[0].size() != 1) throw usage_error("slice target must be a Vect object");
    CategorySpec s;
    s.kind = CategoryKind::slice;
    s.field = base.field;
    s.slice_dim = V.grade.blocks[0][0];
    return s;
}

inline CategorySpec slice_category(const CategorySpec& base, std::size_t v_dim) {
    IsoClass V;
    V.grade.blocks = {{v_dim}};
    return slice_category(base, V);
}

/// An object S -> V of a slice category, given by the dimension of S and the map.
struct SliceObject {
    std::size_t dim = 0;
    Matrix map;  // slice_dim x dim
};

inline SliceObject slice_object(const IsoClass& c) {
    return {c.grade.blocks.at(0).at(0), c.representative.slice};
}

/// #Hom((S, phi), (T, psi)) = #{m : S -> T with psi m = phi}.
///
/// Solvable iff every column of phi lies in the column space of psi; the
/// solution set is then a coset of {m : psi m = 0}, of size q^{dim S (dim T - rank psi)}.
inline BigInt hom_count(const CategorySpec& spec, const SliceObject& x, const SliceObject& y) {
    const std::size_t r = y.map.rank();
    if (Matrix::concat(y.map, x.map).rank() != r) return 0;
    BigInt n = 1;
    for (std::size_t i = 0; i < x.dim * (y.dim - r); ++i) n *= spec.field->order();
    return n;
}

enum class ZeroSide { initial_like, terminal_like, both, neither };

inline std::string to_string(ZeroSide s) {
    switch (s) {
        case ZeroSide::initial_like: return "initial-like";
        case ZeroSide::terminal_like: return "terminal-like";
        case ZeroSide::both: return "both";
        case ZeroSide::neither: return "neither";
    }
    return "?";
}

struct PseudoZero {
    IsoClass object;
    ZeroSide side = ZeroSide::neither;
};

/// Which side of the pseudo-zero condition holds for Z, tested against every
/// object of total dimension <= bound: #Hom(Z,X) <= 1 for all X is
/// initial-like, #Hom(X,Z) <= 1 for all X is terminal-like.
inline ZeroSide pseudo_zero_side(const CategorySpec& spec, const IsoClass& z, std::size_t bound) {
    auto zo = slice_object(z);
    bool from = true, to = true;
    for (const auto& x : objects_up_to(spec, bound)) {
        auto xo = slice_object(x);
        if (hom_count(spec, zo, xo) > 1) from = false;
        if (hom_count(spec, xo, zo) > 1) to = false;
    }
    if (from && to) return ZeroSide::both;
    if (from) return ZeroSide::initial_like;
    if (to) return ZeroSide::terminal_like;
    return ZeroSide::neither;
}

/// The zero subcategory {0 -> V, V = V}, each with the side that holds.
inline std::vector<PseudoZero> zero_subcategory(const CategorySpec& spec, std::size_t bound) {
    if (!spec.is_slice()) throw usage_error("zero_subcategory needs a slice category");
    std::vector<PseudoZero> out;
    for (const auto& c : objects_up_to(spec, std::max(bound, spec.slice_dim))) {
        auto o = slice_object(c);
        bool zero = o.dim == 0;
        bool identity = o.dim == spec.slice_dim && o.map.rank() == spec.slice_dim;  // isomorphic to V = V
        if (zero || identity) out.push_back({c, pseudo_zero_side(spec, c, bound)});
    }
    return out;
}

}  // namespace hallforge
