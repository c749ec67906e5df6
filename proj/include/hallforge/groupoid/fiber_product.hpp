#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/groupoid/skeletal.hpp"

namespace hallforge {

/// The 2-fiber product A x_C B of F: A -> C and G: B -> C.
///
/// Objects are triples (a, b, phi: F(a) -> G(b)); over a pair (a, b) with
/// F(a) = G(b) = c the classes are the double cosets G(Aut b) \ Aut c / F(Aut a),
/// each represented by its smallest element phi.  The automorphisms of
/// (a, b, phi) are the pairs (alpha, beta) with G(beta) phi F(alpha)^{-1} = phi,
/// stored as block-diagonal matrices diag(alpha, beta).
class FiberProduct {
public:
    struct Normal {
        std::size_t component;
        Matrix alpha;  // in Aut a
        Matrix beta;   // in Aut b, with G(beta) phi F(alpha)^{-1} = canonical phi
    };

    FiberProduct(GroupoidFunctor f, GroupoidFunctor g, std::size_t weight_bound = SIZE_MAX)
        : f_(std::move(f)), g_(std::move(g)) {
        if (f_.target()->size() != g_.target()->size()) throw diagram_error("fiber product: different targets");
        build(weight_bound);
    }

    const GroupoidPtr& groupoid() const { return groupoid_; }
    const GroupoidFunctor& to_a() const { return to_a_; }
    const GroupoidFunctor& to_b() const { return to_b_; }
    const GroupoidFunctor& f() const { return f_; }
    const GroupoidFunctor& g() const { return g_; }
    /// cell[c] = canonical phi of class c; a natural iso F o to_a => G o to_b.
    const TwoCell& cell() const { return cell_; }

    bool has_pair(std::size_t a, std::size_t b) const { return pairs_.count({a, b}) != 0; }

    /// Normal form of the object (a, b, phi).
    Normal normalize(std::size_t a, std::size_t b, const Matrix& phi) const {
        auto it = pairs_.find({a, b});
        if (it == pairs_.end()) throw diagram_error("fiber product: no object over this pair");
        const auto& aut_c = *(*f_.target())[f_(a)].aut;
        std::size_t i = aut_c.index_or_throw(phi);
        return {it->second.component[i], it->second.alpha[i], it->second.beta[i]};
    }

    /// A functor into the fiber product together with the cells
    /// alpha : U => to_a K and beta : V => to_b K that exhibit it.
    struct Induced {
        GroupoidFunctor functor;
        TwoCell alpha, beta;
    };

    /// Comparison functor from D given U: D -> A, V: D -> B and theta: F U => G V.
    Induced compare(const GroupoidFunctor& u, const GroupoidFunctor& v, const TwoCell& theta) const {
        const auto& d = *u.source();
        std::vector<std::size_t> comp(d.size());
        Induced out;
        std::vector<Matrix> al_inv(d.size()), be_inv(d.size());
        for (std::size_t c = 0; c < d.size(); ++c) {
            auto n = normalize(u(c), v(c), theta[c]);
            comp[c] = n.component;
            out.alpha.push_back(n.alpha);
            out.beta.push_back(n.beta);
            al_inv[c] = n.alpha.inverse_or_throw();
            be_inv[c] = n.beta.inverse_or_throw();
        }
        auto al = out.alpha, be = out.beta;
        out.functor = GroupoidFunctor(u.source(), groupoid_, comp, [=](std::size_t c, const Matrix& x) {
            return Matrix::block_diag(al[c] * u.map(c, x) * al_inv[c], be[c] * v.map(c, x) * be_inv[c]);
        });
        return out;
    }

    GroupoidFunctor comparison(const GroupoidFunctor& u, const GroupoidFunctor& v, const TwoCell& theta) const {
        return compare(u, v, theta).functor;
    }

    /// The map of fiber products induced by a map of cospans
    ///   a: A -> A', b: B -> B', c: C -> C'
    /// with sigma_a : F' a => c F and sigma_b : G' b => c G.  An object
    /// (x, y, phi) goes to (a x, b y, sigma_b^{-1} c(phi) sigma_a).
    Induced induced_to(const FiberProduct& target, const GroupoidFunctor& a, const GroupoidFunctor& b,
                       const GroupoidFunctor& c, const TwoCell& sigma_a, const TwoCell& sigma_b) const {
        const auto& P = *groupoid_;
        Induced out;
        std::vector<std::size_t> comp(P.size());
        std::vector<Matrix> al_inv(P.size()), be_inv(P.size());
        std::vector<std::size_t> xs(P.size()), ys(P.size());
        for (std::size_t l = 0; l < P.size(); ++l) {
            const std::size_t x = to_a_(l), y = to_b_(l);
            xs[l] = x;
            ys[l] = y;
            Matrix psi = sigma_b[y].inverse_or_throw() * c.map(f_(x), cell_[l]) * sigma_a[x];
            auto n = target.normalize(a(x), b(y), psi);
            comp[l] = n.component;
            out.alpha.push_back(n.alpha);
            out.beta.push_back(n.beta);
            al_inv[l] = n.alpha.inverse_or_throw();
            be_inv[l] = n.beta.inverse_or_throw();
        }
        auto al = out.alpha, be = out.beta;
        auto ta = to_a_, tb = to_b_;
        out.functor = GroupoidFunctor(groupoid_, target.groupoid(), comp, [=](std::size_t l, const Matrix& m) {
            Matrix x = ta.map(l, m), y = tb.map(l, m);
            return Matrix::block_diag(al[l] * a.map(xs[l], x) * al_inv[l], be[l] * b.map(ys[l], y) * be_inv[l]);
        });
        return out;
    }

private:
    struct PairData {
        std::vector<std::size_t> component;  // indexed by element of Aut c
        std::vector<Matrix> alpha, beta;
    };

    void build(std::size_t weight_bound) {
        const auto& A = *f_.source();
        const auto& B = *g_.source();
        const auto& C = *f_.target();
        std::vector<std::vector<std::size_t>> over_a(C.size()), over_b(C.size());
        for (std::size_t a = 0; a < A.size(); ++a) over_a[f_(a)].push_back(a);
        for (std::size_t b = 0; b < B.size(); ++b) over_b[g_(b)].push_back(b);

        std::vector<Component> comps;
        std::vector<std::size_t> deg_a, deg_b;
        for (std::size_t c = 0; c < C.size(); ++c) {
            if (over_a[c].empty() || over_b[c].empty()) continue;
            const auto& aut_c = *C[c].aut;
            const std::size_t nc = aut_c.size();
            // preimages of every element of Aut c under G, per b
            std::map<std::size_t, std::vector<std::vector<std::size_t>>> pre_b;
            for (auto b : over_b[c]) {
                auto& pre = pre_b[b];
                pre.assign(nc, {});
                const auto& t = g_.hom_table(b);
                for (std::size_t i = 0; i < t.size(); ++i) pre[t[i]].push_back(i);
            }
            for (auto a : over_a[c])
                for (auto b : over_b[c]) {
                    std::size_t weight = std::max(A[a].weight, B[b].weight);
                    if (weight > weight_bound) continue;
                    const auto& aut_a = *A[a].aut;
                    const auto& aut_b = *B[b].aut;
                    // moves: phi -> phi F(x)^{-1} and phi -> G(y) phi
                    std::vector<Matrix> fx_inv, x_inv, gy, y_inv;
                    for (const auto& x : aut_a.generators()) {
                        fx_inv.push_back(f_.map(a, x).inverse_or_throw());
                        x_inv.push_back(x.inverse_or_throw());
                    }
                    for (const auto& y : aut_b.generators()) {
                        gy.push_back(g_.map(b, y));
                        y_inv.push_back(y.inverse_or_throw());
                    }
                    PairData pd;
                    pd.component.assign(nc, SIZE_MAX);
                    const Matrix id_a = Matrix::identity(aut_a.field(), aut_a.degree());
                    const Matrix id_b = Matrix::identity(aut_b.field(), aut_b.degree());
                    pd.alpha.assign(nc, id_a);
                    pd.beta.assign(nc, id_b);
                    std::size_t local = 0;
                    std::vector<std::size_t> reps;
                    for (std::size_t rep = 0; rep < nc; ++rep) {
                        if (pd.component[rep] != SIZE_MAX) continue;
                        const std::size_t k = comps.size() + local;
                        ++local;
                        reps.push_back(rep);
                        pd.component[rep] = k;
                        std::vector<std::size_t> queue{rep};
                        for (std::size_t h = 0; h < queue.size(); ++h) {
                            const std::size_t y = queue[h];
                            const Matrix& phi = aut_c.element(y);
                            for (std::size_t m = 0; m < fx_inv.size(); ++m) {
                                std::size_t z = aut_c.index_or_throw(phi * fx_inv[m]);
                                if (pd.component[z] != SIZE_MAX) continue;
                                pd.component[z] = k;
                                pd.alpha[z] = pd.alpha[y] * x_inv[m];
                                pd.beta[z] = pd.beta[y];
                                queue.push_back(z);
                            }
                            for (std::size_t m = 0; m < gy.size(); ++m) {
                                std::size_t z = aut_c.index_or_throw(gy[m] * phi);
                                if (pd.component[z] != SIZE_MAX) continue;
                                pd.component[z] = k;
                                pd.alpha[z] = pd.alpha[y];
                                pd.beta[z] = pd.beta[y] * y_inv[m];
                                queue.push_back(z);
                            }
                        }
                    }
                    const auto& fa = f_.hom_table(a);
                    const auto& pre = pre_b[b];
                    for (std::size_t r = 0; r < reps.size(); ++r) {
                        const Matrix& phi = aut_c.element(reps[r]);
                        const Matrix phi_inv = phi.inverse_or_throw();
                        std::vector<Matrix> stab;
                        for (std::size_t i = 0; i < aut_a.size(); ++i) {
                            std::size_t t = aut_c.index_or_throw(phi * aut_c.element(fa[i]) * phi_inv);
                            for (auto j : pre[t]) stab.push_back(Matrix::block_diag(aut_a.element(i), aut_b.element(j)));
                        }
                        const FiniteField* fld = aut_c.field() ? aut_c.field() : (aut_a.field() ? aut_a.field() : aut_b.field());
                        std::string label = "(" + A[a].label + "," + B[b].label + ")";
                        if (reps.size() > 1) label += "#" + std::to_string(r);
                        comps.push_back({label, group_from_elements(fld, aut_a.degree() + aut_b.degree(), std::move(stab)),
                                         weight, "(" + A[a].grade + "," + B[b].grade + ")", 0, 0});
                        deg_a.push_back(aut_a.degree());
                        deg_b.push_back(aut_b.degree());
                        cell_.push_back(phi);
                        src_a_.push_back(a);
                        src_b_.push_back(b);
                    }
                    pairs_.emplace(std::make_pair(a, b), std::move(pd));
                }
        }
        groupoid_ = std::make_shared<SkeletalGroupoid>(std::move(comps));
        auto da = deg_a, db = deg_b;
        to_a_ = GroupoidFunctor(groupoid_, f_.source(), src_a_,
                                [da](std::size_t c, const Matrix& m) { return m.block(0, 0, da[c], da[c]); });
        to_b_ = GroupoidFunctor(groupoid_, g_.source(), src_b_, [da, db](std::size_t c, const Matrix& m) {
            return m.block(da[c], da[c], db[c], db[c]);
        });
    }

    GroupoidFunctor f_, g_;
    GroupoidPtr groupoid_;
    GroupoidFunctor to_a_, to_b_;
    TwoCell cell_;
    std::vector<std::size_t> src_a_, src_b_;
    std::map<std::pair<std::size_t, std::size_t>, PairData> pairs_;
};

/// A square  D -u-> A -f-> C,  D -v-> B -g-> C  with theta: f u => g v.
struct GroupoidSquare {
    GroupoidFunctor u, v, f, g;
    TwoCell theta;
};

inline void check_square(const GroupoidSquare& s) {
    if (s.u.target() != s.f.source() || s.v.target() != s.g.source() || s.u.source() != s.v.source() ||
        s.f.target()->size() != s.g.target()->size())
        throw diagram_error("square: functors do not fit together");
    if (!is_natural(s.theta, compose(s.f, s.u), compose(s.g, s.v))) throw diagram_error("square does not commute");
}

inline EquivalenceReport pullback_report(const GroupoidSquare& s) {
    check_square(s);
    FiberProduct p(s.f, s.g);
    return equivalence_report(p.comparison(s.u, s.v, s.theta));
}

inline bool is_pullback_square(const GroupoidSquare& s) { return pullback_report(s).equivalence(); }

}  // namespace hallforge
