#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/groupoid/skeletal.hpp"

namespace hallforge {

/// A finite set {0..points-1} with an action of a matrix group.
struct ActionPiece {
    std::string grade;
    std::size_t weight = 0;
    std::size_t points = 1;
    GroupPtr group;
    std::function<std::size_t(const Matrix&, std::size_t)> act;  // may be empty when points == 1
    std::function<std::string(std::size_t)> label;
};

/// Disjoint union of action groupoids X_i // G_i.
struct ActionGroupoid {
    std::vector<ActionPiece> pieces;
};

/// Skeleton of an action groupoid, with the data to transport points to representatives.
struct Skeleton {
    GroupoidPtr groupoid;
    std::vector<std::vector<std::size_t>> component_of;  // [piece][point]
    std::vector<std::vector<Matrix>> transporter;        // [piece][point]: t with t . x = rep

    const Matrix& transport(std::size_t piece, std::size_t x) const { return transporter[piece][x]; }
};

/// Orbits are found by breadth-first search along generators; the
/// representative of an orbit is its smallest point.  Stabilizers are found by
/// filtering the group, except for one-point pieces where the whole group
/// (possibly unlisted) is the automorphism group.
inline Skeleton skeletalize(const ActionGroupoid& x) {
    Skeleton s;
    std::vector<Component> comps;
    for (std::size_t p = 0; p < x.pieces.size(); ++p) {
        const auto& piece = x.pieces[p];
        const auto& g = *piece.group;
        const Matrix id = Matrix::identity(g.field(), g.degree());
        s.component_of.emplace_back(piece.points, 0);
        s.transporter.emplace_back(piece.points, id);
        if (piece.points == 1) {
            s.component_of[p][0] = comps.size();
            comps.push_back({piece.label(0), piece.group, piece.weight, piece.grade, p, 0});
            continue;
        }
        const auto& gens = g.generators();
        std::vector<Matrix> gens_inv;
        for (const auto& m : gens) gens_inv.push_back(m.inverse_or_throw());
        std::vector<char> seen(piece.points, 0);
        for (std::size_t rep = 0; rep < piece.points; ++rep) {
            if (seen[rep]) continue;
            const std::size_t c = comps.size();
            seen[rep] = 1;
            s.component_of[p][rep] = c;
            std::vector<std::size_t> queue{rep};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const std::size_t y = queue[h];
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    const std::size_t z = piece.act(gens[k], y);
                    if (seen[z]) continue;
                    seen[z] = 1;
                    s.component_of[p][z] = c;
                    s.transporter[p][z] = s.transporter[p][y] * gens_inv[k];
                    queue.push_back(z);
                }
            }
            std::vector<Matrix> stab;
            for (const auto& e : g.elements())
                if (piece.act(e, rep) == rep) stab.push_back(e);
            comps.push_back({piece.label(rep), group_from_elements(g.field(), g.degree(), std::move(stab)), piece.weight,
                             piece.grade, p, rep});
        }
    }
    s.groupoid = std::make_shared<SkeletalGroupoid>(std::move(comps));
    return s;
}

/// A strictly equivariant functor between action groupoids:
/// point(p, x) = (p', x') and group(p, g) with point(p, g.x) = group(p, g) . point(p, x).
struct StrictFunctor {
    std::function<std::pair<std::size_t, std::size_t>(std::size_t, std::size_t)> point;
    std::function<Matrix(std::size_t, const Matrix&)> group;
};

/// The functor induced on skeleta: an automorphism g of the representative x
/// goes to t rho(g) t^{-1}, where t transports the image of x to its representative.
inline GroupoidFunctor skeletal_functor(const Skeleton& src, const Skeleton& tgt, const StrictFunctor& f) {
    const auto& sg = *src.groupoid;
    std::vector<std::size_t> comp(sg.size());
    std::vector<Matrix> conj(sg.size());
    std::vector<Matrix> conj_inv(sg.size());
    for (std::size_t c = 0; c < sg.size(); ++c) {
        auto [p2, x2] = f.point(sg[c].piece, sg[c].point);
        comp[c] = tgt.component_of[p2][x2];
        conj[c] = tgt.transport(p2, x2);
        conj_inv[c] = conj[c].inverse_or_throw();
    }
    auto rho = f.group;
    std::vector<std::size_t> pieces(sg.size());
    for (std::size_t c = 0; c < sg.size(); ++c) pieces[c] = sg[c].piece;
    return GroupoidFunctor(src.groupoid, tgt.groupoid, comp,
                           [rho, conj, conj_inv, pieces](std::size_t c, const Matrix& g) {
                               return conj[c] * rho(pieces[c], g) * conj_inv[c];
                           });
}

/// One step of a path of strict functors, with the skeleton of its target.
struct StrictStep {
    const StrictFunctor* functor;
    const Skeleton* target;
};

/// For every component of src, the element Phi of the final target's group
/// such that the composite of the induced skeletal functors along the path is
/// g -> Phi rho(g) Phi^{-1}, rho the strict composite.
inline std::vector<Matrix> path_transport(const Skeleton& src, const std::vector<StrictStep>& path) {
    const auto& sg = *src.groupoid;
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < sg.size(); ++c) {
        std::size_t p = sg[c].piece, x = sg[c].point;
        const auto& aut = *sg[c].aut;
        Matrix phi = Matrix::identity(aut.field(), aut.degree());
        for (const auto& step : path) {
            auto [p2, y] = step.functor->point(p, x);
            phi = step.target->transport(p2, y) * step.functor->group(p, phi);
            const auto& comp = (*step.target->groupoid)[step.target->component_of[p2][y]];
            p = comp.piece;
            x = comp.point;
        }
        out.push_back(std::move(phi));
    }
    return out;
}

/// The cell P => Q between the skeletal composites along two paths of strict
/// functors with equal strict composites.
inline TwoCell path_cell(const Skeleton& src, const std::vector<StrictStep>& p, const std::vector<StrictStep>& q) {
    auto tp = path_transport(src, p);
    auto tq = path_transport(src, q);
    TwoCell out;
    for (std::size_t c = 0; c < tp.size(); ++c) out.push_back(tq[c] * tp[c].inverse_or_throw());
    return out;
}

/// Product of two action groupoids; points are paired as x = x1 * |X2| + x2 and
/// groups act block-diagonally.
inline ActionGroupoid product(const ActionGroupoid& a, const ActionGroupoid& b) {
    ActionGroupoid out;
    for (const auto& pa : a.pieces)
        for (const auto& pb : b.pieces) {
            ActionPiece p;
            p.grade = "(" + pa.grade + "," + pb.grade + ")";
            p.weight = pa.weight + pb.weight;
            p.points = pa.points * pb.points;
            const FiniteField* f = pa.group->field() ? pa.group->field() : pb.group->field();
            p.group = product_group(f, {pa.group, pb.group});
            const std::size_t da = pa.group->degree(), db = pb.group->degree(), nb = pb.points;
            auto act_a = pa.act, act_b = pb.act;
            const std::size_t na = pa.points;
            p.act = [=](const Matrix& g, std::size_t x) {
                std::size_t xa = x / nb, xb = x % nb;
                if (na > 1) xa = act_a(g.block(0, 0, da, da), xa);
                if (nb > 1) xb = act_b(g.block(da, da, db, db), xb);
                return xa * nb + xb;
            };
            auto la = pa.label, lb = pb.label;
            p.label = [=](std::size_t x) { return "(" + la(x / nb) + "," + lb(x % nb) + ")"; };
            out.pieces.push_back(std::move(p));
        }
    return out;
}

/// Index of the product piece (i, j) in product(a, b).
inline std::size_t product_piece(const ActionGroupoid& b, std::size_t i, std::size_t j) { return i * b.pieces.size() + j; }

/// Pair of strict functors into a product: x -> (F(x), G(x)).
inline StrictFunctor pair_functor(const ActionGroupoid& target_b, const StrictFunctor& f, const StrictFunctor& g) {
    auto nb_pieces = target_b.pieces.size();
    std::vector<std::size_t> nb_points;
    for (const auto& p : target_b.pieces) nb_points.push_back(p.points);
    return {[=](std::size_t p, std::size_t x) {
                auto [pa, xa] = f.point(p, x);
                auto [pb, xb] = g.point(p, x);
                return std::make_pair(pa * nb_pieces + pb, xa * nb_points[pb] + xb);
            },
            [=](std::size_t p, const Matrix& m) { return Matrix::block_diag(f.group(p, m), g.group(p, m)); }};
}

}  // namespace hallforge
