#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hallforge/fincat/objects.hpp"
#include "hallforge/qlinalg/subspace.hpp"

namespace hallforge {

namespace detail {

inline std::vector<std::size_t> pivots(const Subspace& s) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.ambient; ++j)
            if (s.basis(i, j) != 0) {
                piv.push_back(j);
                break;
            }
    return piv;
}

/// Columns of the inclusion of the non-pivot coordinates, so that P E = I
/// for the quotient map P of quotient_map.
inline Matrix complement_inclusion(const Subspace& s) {
    const auto piv = pivots(s);
    Matrix e(s.basis.field(), s.ambient, s.ambient - s.dim());
    std::size_t r = 0;
    for (std::size_t j = 0; j < s.ambient; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) e.at(j, r++) = 1;
    return e;
}


/// Class label of arbitrary one-object data (no block shape to respect) in S_1.
inline std::string classify(const FlagSpace& s1, const DimVector& dims, const RepData& d) {
    auto p = s1.piece_of(Grade{{dims}});
    if (!p) return "";
    const auto& shape = s1.shape(*p);
    return (*s1.groupoid())[s1.component(*p, shape.encode(d))].label;
}

/// Calls visit(subspaces) for every tuple of per-vertex subspaces of the given
/// dimensions that is invariant under the arrows.
inline void for_each_subrepresentation(const CategorySpec& spec, const DimVector& ambient, const DimVector& sub,
                                       const RepData& data,
                                       const std::function<void(const std::vector<Subspace>&)>& visit) {
    const std::size_t nv = spec.vertex_count();
    std::vector<std::vector<Subspace>> choices(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        if (sub[v] > ambient[v]) return;
        choices[v] = enumerate_subspaces(ambient[v], sub[v], *spec.field);
    }
    std::vector<Subspace> cur(nv);
    auto rec = [&](auto& self, std::size_t v) -> void {
        if (v == nv) {
            for (std::size_t a = 0; a < spec.quiver.arrows.size(); ++a) {
                auto [s, t] = spec.quiver.arrows[a];
                if (cur[s].dim() == 0) continue;
                Matrix image = (data.arrows[a] * cur[s].basis.transpose()).transpose();
                if (!contains(cur[t], row_space(image))) return;
            }
            visit(cur);
            return;
        }
        for (const auto& s : choices[v]) {
            cur[v] = s;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// The number of subobjects U' of V with U' = U and V/U' = W, by listing
/// every invariant tuple of subspaces of V's representative and classifying
/// the sub and the quotient.
inline BigInt subobject_count_oracle(const CategorySpec& spec, const IsoClass& U, const IsoClass& W, const IsoClass& V) {
    if (spec.is_slice()) throw usage_error("use slice_subobject_count_oracle for slice categories");
    const std::size_t nv = spec.vertex_count();
    const DimVector du = U.grade.blocks.at(0), dw = W.grade.blocks.at(0), dv = V.grade.blocks.at(0);
    for (std::size_t v = 0; v < nv; ++v)
        if (du[v] + dw[v] != dv[v]) return 0;
    const std::size_t total = V.grade.total();
    const FlagSpace s1 = FlagSpace::up_to(spec, 1, total);
    const auto& arrows = spec.quiver.arrows;
    BigInt count = 0;
    detail::for_each_subrepresentation(spec, dv, du, V.representative, [&](const std::vector<Subspace>& sub) {
        RepData ds, dq;
        std::vector<Matrix> proj(nv), incl(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            proj[v] = quotient_map(sub[v]).second;
            incl[v] = detail::complement_inclusion(sub[v]);
        }
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            auto [s, t] = arrows[a];
            const Matrix& A = V.representative.arrows[a];
            // restriction: A B_s^T = B_t^T X, X read off at the pivots of B_t
            Matrix image = A * sub[s].basis.transpose();
            Matrix x(spec.field, sub[t].dim(), sub[s].dim());
            auto piv = detail::pivots(sub[t]);
            for (std::size_t r = 0; r < piv.size(); ++r)
                for (std::size_t c = 0; c < x.cols(); ++c) x.at(r, c) = image(piv[r], c);
            if (sub[t].basis.transpose() * x != image) throw std::logic_error("oracle: restriction does not factor");
            ds.arrows.push_back(x);
            dq.arrows.push_back(proj[t] * A * incl[s]);
        }
        if (detail::classify(s1, du, ds) == U.label && detail::classify(s1, dw, dq) == W.label) ++count;
    });
    return count;
}

/// Slice version over Vect/V: subspaces U' of S on which phi vanishes, with
/// U' of dimension dim U (a class of the base) and (S/U', induced map) = W.
inline BigInt slice_subobject_count_oracle(const CategorySpec& slice, const IsoClass& U, const IsoClass& W,
                                           const IsoClass& X) {
    if (!slice.is_slice()) throw usage_error("not a slice category");
    const std::size_t du = U.grade.blocks.at(0).at(0), dw = W.grade.blocks.at(0).at(0), dx = X.grade.blocks.at(0).at(0);
    if (du + dw != dx) return 0;
    const FlagSpace s1 = FlagSpace::up_to(slice, 1, dx);
    const Matrix& phi = X.representative.slice;
    BigInt count = 0;
    for (const auto& sub : enumerate_subspaces(dx, du, *slice.field)) {
        if (du && !(phi * sub.basis.transpose()).is_zero()) continue;
        RepData dq;
        dq.slice = phi * detail::complement_inclusion(sub);
        if (detail::classify(s1, {dw}, dq) == W.label) ++count;
    }
    return count;
}

}  // namespace hallforge
