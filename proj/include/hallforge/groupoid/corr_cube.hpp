#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hallforge/grid.hpp"
#include "hallforge/groupoid/cube.hpp"

namespace hallforge {

/// A d-cube of correspondences: a 3^d grid of groupoids with legs from every
/// M coordinate toward 0 and 1, and a cell on every small square of legs:
///   leg(w[i:=s], j, t) leg(w, i, s) => leg(w[j:=t], i, s) leg(w, j, t),  i < j.
class CorrespondenceCube {
public:
    CorrespondenceCube() = default;
    explicit CorrespondenceCube(std::size_t dim) : dim_(dim) {
        std::size_t n = 1;
        for (std::size_t i = 0; i < dim; ++i) n *= 3;
        entry_.resize(n);
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return entry_.size(); }
    const GroupoidPtr& entry(const std::vector<int>& w) const { return entry_.at(grid_index(w)); }
    void set_entry(const std::vector<int>& w, GroupoidPtr g) { entry_.at(grid_index(w)) = std::move(g); }

    const GroupoidFunctor& leg(const std::vector<int>& w, std::size_t axis, int side) const {
        auto it = leg_.find({grid_index(w), axis, side});
        if (it == leg_.end()) throw diagram_error("correspondence cube: missing leg at " + grid_label(w));
        return it->second;
    }
    void set_leg(const std::vector<int>& w, std::size_t axis, int side, GroupoidFunctor f) {
        if (w.at(axis) != grid_mid || (side != grid_zero && side != grid_one))
            throw diagram_error("correspondence cube: legs start at an M coordinate");
        leg_[{grid_index(w), axis, side}] = std::move(f);
    }

    const TwoCell& cell(const std::vector<int>& w, std::size_t i, std::size_t j, int si, int sj) const {
        auto it = cell_.find({grid_index(w), i, j, si, sj});
        if (it == cell_.end()) throw diagram_error("correspondence cube: missing cell at " + grid_label(w));
        return it->second;
    }
    void set_cell(const std::vector<int>& w, std::size_t i, std::size_t j, int si, int sj, TwoCell t) {
        if (i >= j || w.at(i) != grid_mid || w.at(j) != grid_mid) throw diagram_error("correspondence cube: bad cell index");
        cell_[{grid_index(w), i, j, si, sj}] = std::move(t);
    }

    /// The d-cube of all faces through the vertex v (coordinates 0/1): vertex
    /// mask m sits at the grid point with v_i where bit i is set and M elsewhere.
    GroupoidCube corner(const std::vector<int>& v) const {
        if (v.size() != dim_) throw usage_error("corner: wrong number of coordinates");
        auto at = [&](std::size_t m) {
            std::vector<int> w(dim_);
            for (std::size_t i = 0; i < dim_; ++i) w[i] = (m >> i & 1) ? (v[i] ? grid_one : grid_zero) : grid_mid;
            return w;
        };
        auto side = [&](std::size_t i) { return v[i] ? grid_one : grid_zero; };
        GroupoidCube c(dim_);
        for (std::size_t m = 0; m < c.vertices(); ++m) {
            auto w = at(m);
            c.set_vertex(m, entry(w));
            for (std::size_t i = 0; i < dim_; ++i) {
                if (m >> i & 1) continue;
                c.set_edge(m, i, leg(w, i, side(i)));
                for (std::size_t j = i + 1; j < dim_; ++j)
                    if (!(m >> j & 1)) c.set_cell(m, i, j, cell(w, i, j, side(i), side(j)));
            }
        }
        return c;
    }

    /// Replaces the center entry by X' along K : X' -> center.
    CorrespondenceCube with_center(const GroupoidFunctor& k) const {
        std::vector<int> mid(dim_, grid_mid);
        const std::size_t ci = grid_index(mid);
        if (k.target() != entry_.at(ci)) throw diagram_error("with_center: functor does not land in the center");
        CorrespondenceCube out = *this;
        out.entry_[ci] = k.source();
        for (auto& [key, f] : out.leg_)
            if (std::get<0>(key) == ci) f = compose(f, k);
        for (auto& [key, t] : out.cell_)
            if (std::get<0>(key) == ci) t = precompose(t, k);
        return out;
    }

private:
    std::size_t dim_ = 0;
    std::vector<GroupoidPtr> entry_;
    std::map<std::tuple<std::size_t, std::size_t, int>, GroupoidFunctor> leg_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, TwoCell> cell_;
};

/// Strict data for a correspondence cube: skeleta of action groupoids and
/// strictly commuting legs.  Cells come from path transports.
struct StrictCorrespondenceCube {
    std::size_t dim = 0;
    std::vector<std::shared_ptr<const Skeleton>> entry;  // by grid_index
    std::map<std::tuple<std::size_t, std::size_t, int>, StrictFunctor> leg;
};

inline CorrespondenceCube realize(const StrictCorrespondenceCube& s) {
    CorrespondenceCube out(s.dim);
    auto skel = [&](const std::vector<int>& w) -> const Skeleton& { return *s.entry.at(grid_index(w)); };
    auto strict = [&](const std::vector<int>& w, std::size_t i, int side) -> const StrictFunctor& {
        auto it = s.leg.find({grid_index(w), i, side});
        if (it == s.leg.end()) throw diagram_error("correspondence cube: missing strict leg at " + grid_label(w));
        return it->second;
    };
    for (std::size_t k = 0; k < out.size(); ++k) out.set_entry(grid_coords(k, s.dim), s.entry[k]->groupoid);
    const int sides[2] = {grid_zero, grid_one};
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto w = grid_coords(k, s.dim);
        for (std::size_t i = 0; i < s.dim; ++i) {
            if (w[i] != grid_mid) continue;
            for (int si : sides) {
                auto wi = w;
                wi[i] = si;
                out.set_leg(w, i, si, skeletal_functor(skel(w), skel(wi), strict(w, i, si)));
                for (std::size_t j = i + 1; j < s.dim; ++j) {
                    if (w[j] != grid_mid) continue;
                    for (int sj : sides) {
                        auto wj = w, wij = wi;
                        wj[j] = sj;
                        wij[j] = sj;
                        std::vector<StrictStep> p{{&strict(w, i, si), &skel(wi)}, {&strict(wi, j, sj), &skel(wij)}};
                        std::vector<StrictStep> q{{&strict(w, j, sj), &skel(wj)}, {&strict(wj, i, si), &skel(wij)}};
                        out.set_cell(w, i, j, si, sj, path_cell(skel(w), p, q));
                    }
                }
            }
        }
    }
    return out;
}

struct CornerResult {
    std::vector<int> vertex;  // 0/1 coordinates
    EquivalenceReport report;
    bool pass() const { return report.equivalence(); }
};

struct CorrCubeReport {
    std::vector<CornerResult> corners;
    bool commutative() const {
        for (const auto& c : corners)
            if (!c.pass()) return false;
        return true;
    }
};

/// The two designated corners (1,0,1,...) and (0,1,0,...).
inline std::vector<std::vector<int>> designated_corners(std::size_t dim) {
    std::vector<int> a(dim), b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a[i] = i % 2 == 0 ? 1 : 0;
        b[i] = 1 - a[i];
    }
    return {a, b};
}

inline CorrCubeReport corr_cube_report(const CorrespondenceCube& c) {
    CorrCubeReport r;
    if (c.dim() < 2) return r;
    for (auto& v : designated_corners(c.dim())) r.corners.push_back({v, pullback_cube_report(c.corner(v))});
    return r;
}

inline bool is_commutative_corr_cube(const CorrespondenceCube& c) { return corr_cube_report(c).commutative(); }

}  // namespace hallforge
