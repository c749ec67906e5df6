#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hallforge/grid.hpp"
#include "hallforge/simpset/delta_plus.hpp"
#include "hallforge/simpset/subcomplex.hpp"

namespace hallforge {

/// H_comb of a monotone map f : ord{N} -> ord{n}: inside the simplex on the
/// cut points of ord{N}, the union of the faces spanned by the cut intervals
/// [a_y, a_{y+1}] of consecutive preimages.
inline SubComplex hcomb_of_map(const DeltaPlusMap& f) {
    const std::size_t N = f.source();
    auto a = f.cuts();
    SubComplex k(N);
    k.add({0});
    for (std::size_t y = 0; y < f.target(); ++y) {
        Simplex s;
        for (std::size_t v = a[y]; v <= a[y + 1]; ++v) s.push_back(v);
        k.add(s);
    }
    return k;
}

/// H_comb of an object: the spine of its augmentation.
inline SubComplex hcomb_of_object(std::size_t n) { return hcomb_of_map(DeltaPlusMap::identity(n)); }

/// Vertex map of the augmentations induced by h : ord{N} -> ord{m}: the cut c_k
/// of ord{m} pulls back to the cut a_k of ord{N}.
inline std::vector<std::size_t> cut_embedding(const DeltaPlusMap& h) { return h.cuts(); }

/// The grid of subcomplexes of the simplex on aug(X), X the initial vertex.
struct CorrGrid {
    std::size_t dim = 0;
    std::size_t ambient = 0;         // |X|
    std::vector<SubComplex> entry;   // by grid_index

    const SubComplex& at(const std::vector<int>& w) const { return entry.at(grid_index(w)); }
};

/// Entry at w is H_comb of the composite a(w) -> b(w), where a(w) and b(w)
/// replace every M by 0 and by 1, pushed into aug(X) along X -> a(w).
inline CorrGrid hcomb_grid(const DeltaPlusCube& cube) {
    if (!cube.commutes()) throw usage_error("hcomb_grid: cube does not commute");
    CorrGrid g;
    g.dim = cube.dim();
    g.ambient = cube.size(0);
    std::size_t n = 1;
    for (std::size_t i = 0; i < g.dim; ++i) n *= 3;
    for (std::size_t k = 0; k < n; ++k) {
        auto w = grid_coords(k, g.dim);
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < g.dim; ++i) {
            if (w[i] == grid_one) a |= std::size_t{1} << i;
            if (w[i] != grid_zero) b |= std::size_t{1} << i;
        }
        auto local = hcomb_of_map(cube.composite(a, b));
        g.entry.push_back(local.pushforward(cut_embedding(cube.composite(0, a)), g.ambient));
    }
    return g;
}

}  // namespace hallforge
