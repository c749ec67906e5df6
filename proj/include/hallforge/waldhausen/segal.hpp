#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/groupoid/fiber_product.hpp"
#include "hallforge/waldhausen/flags.hpp"

namespace hallforge {

/// Outcome of one graded piece of a pullback check.
struct GradedResult {
    std::string grade;
    std::size_t pi0_lhs = 0;
    std::size_t pi0_rhs = 0;
    bool aut_match = false;
    bool pass = false;
};

inline GradedResult graded_result(const std::string& grade, const EquivalenceReport& r) {
    return {grade, r.pi0_lhs, r.pi0_rhs, r.aut_match, r.equivalence()};
}

struct SegalReport {
    std::string condition;
    std::string category;
    int q = 0;
    std::size_t bound = 0;
    std::vector<GradedResult> graded_results;

    bool pass() const {
        return std::all_of(graded_results.begin(), graded_results.end(), [](const GradedResult& g) { return g.pass; });
    }
};

/// The square  S_n -> S_{n\I}, S_{n\J} -> S_{n\(I u J)}  over a set of fine
/// grades of S_n sharing the same pair of restricted grades.
inline GroupoidSquare removal_square_groupoids(const CategorySpec& spec, std::size_t n, const std::vector<std::size_t>& I,
                                               const std::vector<std::size_t>& J, const std::vector<Grade>& gs) {
    std::vector<std::size_t> IJ = I;
    IJ.insert(IJ.end(), J.begin(), J.end());
    const auto all = vertices_without(n, {});
    const auto va = vertices_without(n, I), vb = vertices_without(n, J), vc = vertices_without(n, IJ);
    if (vc.empty()) throw usage_error("removal square: the removed vertices cover everything");
    auto space = [&](const std::vector<std::size_t>& v) {
        std::vector<Grade> r;
        for (const auto& g : gs) r.push_back(restrict_grade(g, v));
        return FlagSpace(spec, v.size() - 1, r);
    };
    const FlagSpace D = space(all), A = space(va), B = space(vb), C = space(vc);
    const auto du = flag_restriction(D, A, va), dv = flag_restriction(D, B, vb);
    const auto af = flag_restriction(A, C, positions_in(vc, va)), bg = flag_restriction(B, C, positions_in(vc, vb));
    GroupoidSquare sq;
    sq.u = skeletal_functor(D.skeleton(), A.skeleton(), du);
    sq.v = skeletal_functor(D.skeleton(), B.skeleton(), dv);
    sq.f = skeletal_functor(A.skeleton(), C.skeleton(), af);
    sq.g = skeletal_functor(B.skeleton(), C.skeleton(), bg);
    sq.theta = path_cell(D.skeleton(), {{&du, &A.skeleton()}, {&af, &C.skeleton()}},
                         {{&dv, &B.skeleton()}, {&bg, &C.skeleton()}});
    return sq;
}

inline EquivalenceReport removal_square_at(const CategorySpec& spec, std::size_t n, const std::vector<std::size_t>& I,
                                           const std::vector<std::size_t>& J, const std::vector<Grade>& gs) {
    return pullback_report(removal_square_groupoids(spec, n, I, J, gs));
}

/// Fine grades of S_n up to the bound, grouped by their pair of restrictions
/// along the removals of I and J.
inline std::vector<std::vector<Grade>> removal_units(const CategorySpec& spec, std::size_t n,
                                                     const std::vector<std::size_t>& I,
                                                     const std::vector<std::size_t>& J, std::size_t bound) {
    const auto va = vertices_without(n, I), vb = vertices_without(n, J);
    std::map<std::pair<Grade, Grade>, std::vector<Grade>> units;
    for (auto& g : grades_up_to(spec.vertex_count(), n, bound))
        units[{restrict_grade(g, va), restrict_grade(g, vb)}].push_back(g);
    std::vector<std::vector<Grade>> work;
    for (auto& [key, gs] : units) work.push_back(gs);
    return work;
}

/// Checks the removal square over all fine grades of S_n with total at most
/// bound.  Fine grades with the same pair of restricted grades form one unit,
/// since the fiber product cannot tell them apart.
inline SegalReport removal_report(const CategorySpec& spec, std::size_t n, const std::vector<std::size_t>& I,
                                  const std::vector<std::size_t>& J, std::size_t bound, std::string condition) {
    if (bound > spec.max_bound())
        throw bound_exceeded("bound " + std::to_string(bound) + " above the limit " + std::to_string(spec.max_bound()) +
                             " for " + spec.name());
    const auto work = removal_units(spec, n, I, J, bound);
    SegalReport r;
    r.condition = std::move(condition);
    r.category = spec.name();
    r.q = spec.field->order();
    r.bound = bound;
    r.graded_results.resize(work.size());
    parallel_for(work.size(), [&](std::size_t k) {
        std::string label;
        for (std::size_t t = 0; t < work[k].size(); ++t) label += (t ? "+" : "") + grade_label(work[k][t]);
        r.graded_results[k] = graded_result(label, removal_square_at(spec, n, I, J, work[k]));
    });
    return r;
}

/// Removing the vertex sets I and J of ord{n}; the two must be disjoint and
/// leave something behind.
inline SegalReport removal_square(const CategorySpec& spec, std::size_t n, const std::vector<std::size_t>& I,
                                  const std::vector<std::size_t>& J, std::size_t bound) {
    std::set<std::size_t> seen;
    for (auto v : I)
        if (v > n || !seen.insert(v).second) throw usage_error("removal square: bad vertex set");
    for (auto v : J)
        if (v > n || !seen.insert(v).second) throw usage_error("removal square: vertex sets must be disjoint");
    if (seen.size() > n) throw usage_error("removal square: the removed vertices cover everything");
    auto label = [](const std::vector<std::size_t>& s) {
        std::string out = "{";
        for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
        return out + "}";
    };
    return removal_report(spec, n, I, J, bound, "removal n=" + std::to_string(n) + " I=" + label(I) + " J=" + label(J));
}

/// C^n_i: the square removing the vertices i and i+2.
inline SegalReport two_segal_report(const CategorySpec& spec, std::size_t n, std::size_t i, std::size_t bound) {
    if (n < 3) throw usage_error("2-Segal conditions need n >= 3");
    if (n > 5) throw usage_error("flags are supported up to length 5");
    if (i + 2 > n) throw usage_error("2-Segal condition C^" + std::to_string(n) + "_i needs 0 <= i <= " + std::to_string(n - 2));
    return removal_report(spec, n, {i}, {i + 2}, bound, "C^" + std::to_string(n) + "_" + std::to_string(i));
}

inline bool two_segal_condition(std::size_t n, std::size_t i, const CategorySpec& spec, std::size_t bound) {
    return two_segal_report(spec, n, i, bound).pass();
}

/// A polygonal decomposition of the polygon with vertices 0..n: each piece
/// is an increasing vertex list with at least three vertices, or the whole polygon.
using Polygon = std::vector<std::size_t>;

inline void check_decomposition(std::size_t n, const std::vector<Polygon>& ps) {
    if (ps.empty()) throw usage_error("polygonal decomposition: no pieces");
    std::map<std::pair<std::size_t, std::size_t>, int> edges;
    std::size_t triangles = 0;
    for (const auto& p : ps) {
        if (p.size() < 3 && !(p.size() == n + 1)) throw usage_error("polygonal decomposition: pieces need three vertices");
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] > n || (k && p[k] <= p[k - 1])) throw usage_error("polygonal decomposition: vertices must increase within 0..n");
            std::size_t a = p[k], b = p[(k + 1) % p.size()];
            ++edges[std::minmax(a, b)];
        }
        triangles += p.size() - 2;
    }
    for (const auto& [e, count] : edges) {
        const bool boundary = e.second == e.first + 1 || (e.first == 0 && e.second == n);
        if (count != (boundary ? 1 : 2)) throw usage_error("polygonal decomposition: pieces do not tile the polygon");
    }
    if (triangles + 1 != n) throw usage_error("polygonal decomposition: pieces do not tile the polygon");
}

/// The canonical map S_n -> S_P at one fine grade.
struct PolygonalPiece {
    std::string grade;
    GroupoidPtr product;       // S_P at the induced grades
    GroupoidFunctor canonical;  // S_n -> S_P
    EquivalenceReport report;
};

/// S_P = S_{P_1} x_{S_e} S_{P_2} x ... : every piece after the first is glued
/// along an edge it shares with an earlier piece.
inline PolygonalPiece polygonal_fiber_product_at(const CategorySpec& spec, std::size_t n, const std::vector<Polygon>& ps,
                                                 const Grade& g) {
    check_decomposition(n, ps);
    const auto all = vertices_without(n, {});
    auto space = [&](const Polygon& v) {
        return std::make_shared<const FlagSpace>(spec, v.size() - 1, std::vector<Grade>{restrict_grade(g, v)});
    };
    auto D = space(all);
    std::vector<std::shared_ptr<const FlagSpace>> S;
    std::vector<StrictFunctor> R_strict;
    std::vector<GroupoidFunctor> R, proj;
    std::vector<TwoCell> alpha;  // R_j => proj_j K
    for (const auto& p : ps) {
        S.push_back(space(p));
        R_strict.push_back(flag_restriction(*D, *S.back(), p));
        R.push_back(skeletal_functor(D->skeleton(), S.back()->skeleton(), R_strict.back()));
    }
    GroupoidFunctor K = R[0];
    proj.push_back(identity_functor(S[0]->groupoid()));
    alpha.push_back(identity_cell(R[0]));
    for (std::size_t k = 1; k < ps.size(); ++k) {
        std::optional<std::pair<std::size_t, Polygon>> glue;
        for (std::size_t j = 0; j < k && !glue; ++j) {
            Polygon e;
            std::set_intersection(ps[j].begin(), ps[j].end(), ps[k].begin(), ps[k].end(), std::back_inserter(e));
            if (e.size() == 2) glue = std::make_pair(j, e);
        }
        if (!glue) throw usage_error("polygonal decomposition: a piece shares no edge with the earlier ones");
        const auto [j, e] = *glue;
        auto E = space(e);
        const auto rj = flag_restriction(*S[j], *E, positions_in(e, ps[j]));
        const auto rk = flag_restriction(*S[k], *E, positions_in(e, ps[k]));
        const auto fj = skeletal_functor(S[j]->skeleton(), E->skeleton(), rj);
        const auto gk = skeletal_functor(S[k]->skeleton(), E->skeleton(), rk);
        FiberProduct fp(compose(fj, proj[j]), gk);
        // theta : fj proj_j K => gk R_k
        auto pc = path_cell(D->skeleton(), {{&R_strict[j], &S[j]->skeleton()}, {&rj, &E->skeleton()}},
                            {{&R_strict[k], &S[k]->skeleton()}, {&rk, &E->skeleton()}});
        auto theta = vertical(pc, inverse(whisker(fj, alpha[j], R[j])));
        auto ind = fp.compare(K, R[k], theta);
        for (std::size_t i = 0; i < k; ++i) {
            alpha[i] = vertical(whisker(proj[i], ind.alpha, K), alpha[i]);
            proj[i] = compose(proj[i], fp.to_a());
        }
        proj.push_back(fp.to_b());
        alpha.push_back(ind.beta);
        K = ind.functor;
    }
    return {grade_label(g), K.target(), K, equivalence_report(K)};
}

struct PolygonalReport {
    std::vector<PolygonalPiece> pieces;
    bool equivalence() const {
        return std::all_of(pieces.begin(), pieces.end(), [](const PolygonalPiece& p) { return p.report.equivalence(); });
    }
    /// Groupoid cardinality of S_P summed over the grades.
    Rational cardinality() const {
        Rational r = 0;
        for (const auto& p : pieces) r += p.product->cardinality();
        return r;
    }
};

inline PolygonalReport polygonal_fiber_product(const CategorySpec& spec, std::size_t n, const std::vector<Polygon>& ps,
                                               std::size_t bound) {
    check_decomposition(n, ps);
    PolygonalReport r;
    auto grades = grades_up_to(spec.vertex_count(), n, bound);
    r.pieces.resize(grades.size());
    parallel_for(grades.size(), [&](std::size_t k) { r.pieces[k] = polygonal_fiber_product_at(spec, n, ps, grades[k]); });
    return r;
}

/// The fan triangulation of the polygon 0..n from vertex v.
inline std::vector<Polygon> fan_triangulation(std::size_t n, std::size_t v) {
    if (v > n || n < 2) throw usage_error("fan triangulation: bad vertex");
    std::vector<std::size_t> others;
    for (std::size_t k = 1; k <= n; ++k) others.push_back((v + k) % (n + 1));
    std::vector<Polygon> out;
    for (std::size_t k = 0; k + 1 < others.size(); ++k) {
        Polygon t{v, others[k], others[k + 1]};
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

}  // namespace hallforge
