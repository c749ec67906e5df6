#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hallforge/groupoid/action.hpp"
#include "hallforge/groupoid/fiber_product.hpp"

namespace hallforge {

/// A d-cube of groupoids.  Vertices are indexed by bit masks, edge(m, i) goes
/// from m to m | 1<<i, and every 2-face (m, i < j) carries a cell
///   edge(m|i, j) edge(m, i) => edge(m|j, i) edge(m, j).
class GroupoidCube {
public:
    GroupoidCube() = default;
    explicit GroupoidCube(std::size_t dim) : dim_(dim), vertex_(std::size_t{1} << dim), edge_(std::size_t{1} << dim) {
        for (auto& e : edge_) e.resize(dim);
    }

    std::size_t dim() const { return dim_; }
    std::size_t vertices() const { return vertex_.size(); }

    const GroupoidPtr& vertex(std::size_t m) const { return vertex_.at(m); }
    void set_vertex(std::size_t m, GroupoidPtr g) { vertex_.at(m) = std::move(g); }

    const GroupoidFunctor& edge(std::size_t m, std::size_t i) const {
        check_edge(m, i);
        return edge_[m][i];
    }
    void set_edge(std::size_t m, std::size_t i, GroupoidFunctor f) {
        check_edge(m, i);
        edge_[m][i] = std::move(f);
    }

    const TwoCell& cell(std::size_t m, std::size_t i, std::size_t j) const {
        auto it = cell_.find({m, i, j});
        if (it == cell_.end()) throw diagram_error("cube: missing face cell");
        return it->second;
    }
    void set_cell(std::size_t m, std::size_t i, std::size_t j, TwoCell t) {
        if (i >= j || j >= dim_ || (m >> i & 1) || (m >> j & 1)) throw diagram_error("cube: bad face index");
        cell_[{m, i, j}] = std::move(t);
    }

    /// The 2-face at m spanned by axes i < j, as a square from vertex m.
    GroupoidSquare square(std::size_t m, std::size_t i, std::size_t j) const {
        const std::size_t mi = m | std::size_t{1} << i, mj = m | std::size_t{1} << j;
        return {edge(m, i), edge(m, j), edge(mi, j), edge(mj, i), cell(m, i, j)};
    }

    /// The face where the axes with fixed[k] = 0 or 1 are held at that value;
    /// axes with fixed[k] < 0 stay free, in increasing order.
    GroupoidCube face(const std::vector<int>& fixed) const {
        if (fixed.size() != dim_) throw usage_error("face: wrong number of coordinates");
        std::vector<std::size_t> free;
        std::size_t base = 0;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (fixed[k] < 0) free.push_back(k);
            else if (fixed[k] == 1) base |= std::size_t{1} << k;
        }
        auto full = [&](std::size_t sub) {
            std::size_t m = base;
            for (std::size_t k = 0; k < free.size(); ++k)
                if (sub >> k & 1) m |= std::size_t{1} << free[k];
            return m;
        };
        GroupoidCube out(free.size());
        for (std::size_t s = 0; s < out.vertices(); ++s) {
            out.set_vertex(s, vertex(full(s)));
            for (std::size_t k = 0; k < free.size(); ++k) {
                if (s >> k & 1) continue;
                out.set_edge(s, k, edge(full(s), free[k]));
                for (std::size_t l = k + 1; l < free.size(); ++l)
                    if (!(s >> l & 1)) out.set_cell(s, k, l, cell(full(s), free[k], free[l]));
            }
        }
        return out;
    }

    /// The same cube with axis k of the result being axis perm[k] of this one.
    GroupoidCube permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != dim_) throw usage_error("permuted: wrong permutation size");
        auto full = [&](std::size_t sub) {
            std::size_t m = 0;
            for (std::size_t k = 0; k < dim_; ++k)
                if (sub >> k & 1) m |= std::size_t{1} << perm[k];
            return m;
        };
        GroupoidCube out(dim_);
        for (std::size_t s = 0; s < vertices(); ++s) {
            out.set_vertex(s, vertex(full(s)));
            for (std::size_t k = 0; k < dim_; ++k) {
                if (s >> k & 1) continue;
                out.set_edge(s, k, edge(full(s), perm[k]));
                for (std::size_t l = k + 1; l < dim_; ++l) {
                    if (s >> l & 1) continue;
                    std::size_t i = perm[k], j = perm[l];
                    out.set_cell(s, k, l, i < j ? cell(full(s), i, j) : inverse(cell(full(s), j, i)));
                }
            }
        }
        return out;
    }

    /// Replaces the initial vertex by X' along K : X' -> X.
    GroupoidCube precomposed(const GroupoidFunctor& k) const {
        if (k.target() != vertex(0)) throw diagram_error("precomposed: functor does not land in the initial vertex");
        GroupoidCube out = *this;
        out.vertex_[0] = k.source();
        for (std::size_t i = 0; i < dim_; ++i) out.edge_[0][i] = compose(edge(0, i), k);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) out.cell_[{0, i, j}] = precompose(cell(0, i, j), k);
        return out;
    }

private:
    void check_edge(std::size_t m, std::size_t i) const {
        if (i >= dim_ || m >= vertex_.size() || (m >> i & 1)) throw diagram_error("cube: bad edge index");
    }

    std::size_t dim_ = 0;
    std::vector<GroupoidPtr> vertex_;
    std::vector<std::vector<GroupoidFunctor>> edge_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, TwoCell> cell_;
};

/// Every 2-face must commute through its cell.
inline void check_cube(const GroupoidCube& c) {
    for (std::size_t m = 0; m < c.vertices(); ++m)
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = i + 1; j < c.dim(); ++j)
                if (!(m >> i & 1) && !(m >> j & 1)) check_square(c.square(m, i, j));
}

/// A cube of action groupoids with strictly commuting strict functors.  The
/// cells of the realized cube come from path transports.
struct StrictCube {
    std::size_t dim = 0;
    std::vector<std::shared_ptr<const Skeleton>> vertex;  // by mask
    std::vector<std::vector<StrictFunctor>> edge;         // [mask][axis]
};

inline GroupoidCube realize(const StrictCube& s) {
    GroupoidCube out(s.dim);
    for (std::size_t m = 0; m < out.vertices(); ++m) out.set_vertex(m, s.vertex[m]->groupoid);
    for (std::size_t m = 0; m < out.vertices(); ++m)
        for (std::size_t i = 0; i < s.dim; ++i)
            if (!(m >> i & 1))
                out.set_edge(m, i, skeletal_functor(*s.vertex[m], *s.vertex[m | std::size_t{1} << i], s.edge[m][i]));
    for (std::size_t m = 0; m < out.vertices(); ++m)
        for (std::size_t i = 0; i < s.dim; ++i)
            for (std::size_t j = i + 1; j < s.dim; ++j) {
                if ((m >> i & 1) || (m >> j & 1)) continue;
                const std::size_t mi = m | std::size_t{1} << i, mj = m | std::size_t{1} << j, mij = mi | mj;
                std::vector<StrictStep> p{{&s.edge[m][i], s.vertex[mi].get()}, {&s.edge[mi][j], s.vertex[mij].get()}};
                std::vector<StrictStep> q{{&s.edge[m][j], s.vertex[mj].get()}, {&s.edge[mj][i], s.vertex[mij].get()}};
                out.set_cell(m, i, j, path_cell(*s.vertex[m], p, q));
            }
    return out;
}

namespace detail {

// identity functor on the initial vertex, for dimension 0
inline EquivalenceReport trivial_report(const GroupoidPtr& g) { return equivalence_report(identity_functor(g)); }

}  // namespace detail

/// Whether the initial vertex is the limit of the punctured cube, d <= 3.
///
/// For d = 3 the limit is built as L0 x_{L1} V1 with L0 = V2 x_{V6} V4 and
/// L1 = V3 x_{V7} V5, the map L0 -> L1 induced by the edges along axis 0.
inline EquivalenceReport pullback_cube_report(const GroupoidCube& c) {
    check_cube(c);
    switch (c.dim()) {
        case 0: return detail::trivial_report(c.vertex(0));
        case 1: return equivalence_report(c.edge(0, 0));
        case 2: {
            auto s = c.square(0, 0, 1);
            FiberProduct p(s.f, s.g);
            return equivalence_report(p.comparison(s.u, s.v, s.theta));
        }
        case 3: break;
        default: throw usage_error("pullback cubes are checked directly up to dimension 3");
    }
    const auto& e = [&](std::size_t m, std::size_t i) -> const GroupoidFunctor& { return c.edge(m, i); };
    FiberProduct L0(e(2, 2), e(4, 1));
    FiberProduct L1(e(3, 2), e(5, 1));
    auto u = L0.induced_to(L1, e(2, 0), e(4, 0), e(6, 0), c.cell(2, 0, 2), c.cell(4, 0, 1));
    auto k0 = L0.compare(e(0, 1), e(0, 2), c.cell(0, 1, 2));
    auto c1 = L1.compare(e(1, 1), e(1, 2), c.cell(1, 1, 2));

    // theta : u k0 => c1 e(0,0), assembled from its two components
    const auto& X = *c.vertex(0);
    const auto& f001 = c.cell(0, 0, 1);
    const auto& f002 = c.cell(0, 0, 2);
    TwoCell theta;
    for (std::size_t x = 0; x < X.size(); ++x) {
        const std::size_t l = k0.functor(x), y = e(0, 0)(x);
        Matrix ta = c1.alpha[y] * f001[x].inverse_or_throw() * e(2, 0).map(e(0, 1)(x), k0.alpha[x]).inverse_or_throw() *
                    u.alpha[l].inverse_or_throw();
        Matrix tb = c1.beta[y] * f002[x].inverse_or_throw() * e(4, 0).map(e(0, 2)(x), k0.beta[x]).inverse_or_throw() *
                    u.beta[l].inverse_or_throw();
        theta.push_back(Matrix::block_diag(ta, tb));
    }
    GroupoidSquare sq{k0.functor, e(0, 0), u.functor, c1.functor, theta};
    check_square(sq);
    FiberProduct lim(u.functor, c1.functor);
    return equivalence_report(lim.comparison(sq.u, sq.v, sq.theta));
}

inline bool is_pullback_cube(const GroupoidCube& c) { return pullback_cube_report(c).equivalence(); }

/// The Corollary reduction along an axis: the subcube at coordinate 1 must be
/// a pullback cube, and then the whole cube is one iff the opposite subcube is.
struct CorollaryReduction {
    std::size_t axis = 0;
    bool subcube_pullback = false;   // the face away from the initial vertex
    bool opposite_pullback = false;  // the face through the initial vertex
    bool applicable() const { return subcube_pullback; }
    bool result() const { return opposite_pullback; }
};

inline CorollaryReduction reduce_via_corollary(const GroupoidCube& c, std::size_t axis) {
    if (c.dim() == 0 || axis >= c.dim()) throw usage_error("reduce_via_corollary: bad axis");
    std::vector<int> top(c.dim(), -1), bottom(c.dim(), -1);
    top[axis] = 1;
    bottom[axis] = 0;
    CorollaryReduction r;
    r.axis = axis;
    r.subcube_pullback = is_pullback_cube(c.face(top));
    if (r.subcube_pullback) r.opposite_pullback = is_pullback_cube(c.face(bottom));
    return r;
}

}  // namespace hallforge
