#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hallforge/groupoid/corr_cube.hpp"
#include "hallforge/simpset/hcomb.hpp"
#include "hallforge/waldhausen/ext.hpp"
#include "hallforge/waldhausen/segal.hpp"

namespace hallforge {

/// The correspondence cube S^ext(H_comb(assoc_cube(n))) at one fine grade.
struct Corr0Cube {
    CorrGrid grid;
    std::vector<std::shared_ptr<const ExtSpace>> spaces;  // by grid_index
    CorrespondenceCube cube;

    const ExtSpace& center() const { return *spaces.at(grid_index(std::vector<int>(grid.dim, grid_mid))); }
};

inline Corr0Cube corr0_cube_at(const CategorySpec& spec, std::size_t n, const Grade& g) {
    if (n < 3 || n > 4) throw usage_error("the Corr0 pipeline supports n = 3 and n = 4");
    Corr0Cube out;
    out.grid = hcomb_grid(assoc_cube(n));
    StrictCorrespondenceCube s;
    s.dim = out.grid.dim;
    for (const auto& k : out.grid.entry) {
        auto sp = std::make_shared<const ExtSpace>(ExtSpace::at_grade(spec, k, g));
        s.entry.push_back(std::shared_ptr<const Skeleton>(sp, &sp->skeleton()));
        out.spaces.push_back(std::move(sp));
    }
    for (std::size_t k = 0; k < out.spaces.size(); ++k) {
        auto w = grid_coords(k, s.dim);
        for (std::size_t i = 0; i < s.dim; ++i) {
            if (w[i] != grid_mid) continue;
            for (int side : {static_cast<int>(grid_zero), static_cast<int>(grid_one)}) {
                auto t = w;
                t[i] = side;
                s.leg[{k, i, side}] = ext_restriction(*out.spaces[k], *out.spaces[grid_index(t)]);
            }
        }
    }
    out.cube = realize(s);
    return out;
}

/// Direct sum of a chain of flags into one flag on the whole simplex: the
/// maximal faces of `from` must be the consecutive intervals of a chain
/// covering 0..N, and `to` the full simplex.
inline StrictFunctor direct_sum_functor(const ExtSpace& from, const ExtSpace& to) {
    const auto& fs = from.faces();
    if (fs.empty() || fs.front().front() != 0 || fs.back().back() != from.complex().ambient())
        throw usage_error("direct sum: faces do not cover the simplex");
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t v = 1; v < fs[k].size(); ++v)
            if (fs[k][v] != fs[k][v - 1] + 1) throw usage_error("direct sum: faces must be intervals");
        if (k && fs[k].front() != fs[k - 1].back()) throw usage_error("direct sum: faces must form a chain");
    }
    if (to.faces().size() != 1 || to.faces()[0].size() != from.complex().ambient() + 1)
        throw usage_error("direct sum: target must be the full simplex");
    const std::size_t np = from.pieces();
    std::vector<std::size_t> piece(np);
    // partial sums: prefix[p][k] is the shape of faces 0..k concatenated
    std::vector<std::vector<std::shared_ptr<const RepShape>>> parts(np), prefix(np);
    std::vector<std::vector<std::size_t>> offs(np);
    for (std::size_t p = 0; p < np; ++p) {
        Grade acc;
        for (std::size_t f = 0; f < fs.size(); ++f) {
            parts[p].push_back(from.shape_ptr(p, f));
            offs[p].push_back(from.block_offset(p, f));
            acc = f ? concat_grade(acc, from.shape(p, f).grade()) : from.shape(p, f).grade();
            prefix[p].push_back(std::make_shared<const RepShape>(from.spec(), acc));
        }
        piece[p] = to.piece_or_throw({acc});
    }
    return {[=](std::size_t p, std::size_t x) {
                std::vector<std::size_t> xs(parts[p].size());
                for (std::size_t f = parts[p].size(); f-- > 0;) {
                    xs[f] = x % parts[p][f]->points();
                    x /= parts[p][f]->points();
                }
                RepData d = parts[p][0]->decode(xs[0]);
                for (std::size_t f = 1; f < parts[p].size(); ++f)
                    d = concat_data(*prefix[p][f], d, parts[p][f]->decode(xs[f]));
                return std::make_pair(piece[p], prefix[p].back()->encode(d));
            },
            [=](std::size_t p, const Matrix& g) {
                auto block = [&](std::size_t f) {
                    const std::size_t d = parts[p][f]->total_dim();
                    return g.block(offs[p][f], offs[p][f], d, d);
                };
                Matrix acc = block(0);
                for (std::size_t f = 1; f < parts[p].size(); ++f)
                    acc = concat_group(*prefix[p][f - 1], *parts[p][f], acc, block(f));
                return acc;
            }};
}

/// One designated corner of the cube at one grade.
struct CornerOutcome {
    std::vector<int> vertex;
    EquivalenceReport report;
    std::vector<CorollaryReduction> reductions;  // one per axis
    bool pass() const { return report.equivalence(); }
    /// Every applicable reduction agrees with the direct check.
    bool reductions_consistent() const {
        return std::all_of(reductions.begin(), reductions.end(),
                           [&](const CorollaryReduction& r) { return !r.applicable() || r.result() == pass(); });
    }
};

struct Corr0Grade {
    std::string grade;
    std::vector<CornerOutcome> corners;
    // n = 3 only: the corner squares against C^3_1 and C^3_0 at the same grade
    std::vector<GradedResult> segal;
    bool corners_match_segal = true;
    bool pass() const {
        return std::all_of(corners.begin(), corners.end(), [](const CornerOutcome& c) { return c.pass(); });
    }
};

struct Corr0Report {
    std::size_t n = 0;
    std::string category;
    int q = 0;
    std::size_t bound = 0;
    std::vector<Corr0Grade> grades;

    bool commutative() const {
        return std::all_of(grades.begin(), grades.end(), [](const Corr0Grade& g) { return g.pass(); });
    }
    bool reductions_consistent() const {
        for (const auto& g : grades)
            for (const auto& c : g.corners)
                if (!c.reductions_consistent()) return false;
        return true;
    }
    bool corners_match_segal() const {
        return std::all_of(grades.begin(), grades.end(), [](const Corr0Grade& g) { return g.corners_match_segal; });
    }
};

inline std::vector<CornerOutcome> corner_outcomes(const CorrespondenceCube& c) {
    std::vector<CornerOutcome> out;
    for (auto& v : designated_corners(c.dim())) {
        auto cube = c.corner(v);
        CornerOutcome o{v, pullback_cube_report(cube), {}};
        for (std::size_t i = 0; i < cube.dim(); ++i) o.reductions.push_back(reduce_via_corollary(cube, i));
        out.push_back(std::move(o));
    }
    return out;
}

/// The Corr0 pipeline: the associativity cube of ord{n} through H_comb and
/// S^ext, checked corner by corner at every fine grade up to the bound.
/// `modify` turns the realized cube into the cube that is checked.
template <class Modify>
Corr0Report corr0_report(const CategorySpec& spec, std::size_t n, std::size_t bound, Modify modify) {
    if (n < 3 || n > 4) throw usage_error("the Corr0 pipeline supports n = 3 and n = 4");
    if (bound > spec.max_bound())
        throw bound_exceeded("bound " + std::to_string(bound) + " above the limit " + std::to_string(spec.max_bound()) +
                             " for " + spec.name());
    Corr0Report r;
    r.n = n;
    r.category = spec.name();
    r.q = spec.field->order();
    r.bound = bound;
    auto grades = grades_up_to(spec.vertex_count(), n, bound);
    r.grades.resize(grades.size());
    parallel_for(grades.size(), [&](std::size_t k) {
        const auto& g = grades[k];
        auto cc = corr0_cube_at(spec, n, g);
        auto& out = r.grades[k];
        out.grade = grade_label(g);
        out.corners = corner_outcomes(modify(cc));
        if (n == 3) {
            // corner (1,0) is C^3_1 and corner (0,1) is C^3_0
            const std::size_t conds[2] = {1, 0};
            for (std::size_t c = 0; c < 2; ++c) {
                auto seg = removal_square_at(spec, 3, {conds[c]}, {conds[c] + 2}, {g});
                out.segal.push_back(graded_result("C^3_" + std::to_string(conds[c]) + " " + out.grade, seg));
                const auto& rep = out.corners[c].report;
                if (seg.equivalence() != rep.equivalence() || seg.pi0_lhs != rep.pi0_lhs || seg.pi0_rhs != rep.pi0_rhs)
                    out.corners_match_segal = false;
            }
        }
    });
    return r;
}

inline Corr0Report corr0_pipeline(std::size_t n, const CategorySpec& spec, std::size_t bound) {
    return corr0_report(spec, n, bound, [](const Corr0Cube& c) { return c.cube; });
}

/// Negative control: the center S_3 replaced by S_2 x S_1 along the direct sum.
inline Corr0Report corr0_split_center(const CategorySpec& spec, std::size_t bound) {
    return corr0_report(spec, 3, bound, [&](const Corr0Cube& c) {
        const auto& center = c.center();
        auto split = std::make_shared<const ExtSpace>(
            ExtSpace::at_grade(spec, SubComplex::generated(3, {{0, 1, 2}, {2, 3}}), center.shape(0, 0).grade()));
        auto k = skeletal_functor(split->skeleton(), center.skeleton(), direct_sum_functor(*split, center));
        return c.cube.with_center(k);
    });
}

/// Negative control: the center replaced by the full subgroupoid without its
/// last class (only at grades where the center has more than one class).
inline Corr0Report corr0_drop_center_class(const CategorySpec& spec, std::size_t bound) {
    return corr0_report(spec, 3, bound, [&](const Corr0Cube& c) {
        const auto& g = c.center().groupoid();
        if (g->size() < 2) return c.cube;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i + 1 < g->size(); ++i) keep.push_back(i);
        return c.cube.with_center(full_subgroupoid(g, keep));
    });
}

}  // namespace hallforge
