#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallforge/simpset/subcomplex.hpp"
#include "hallforge/waldhausen/flags.hpp"

namespace hallforge {

/// S^ext(K) for a subcomplex K of a simplex whose maximal faces pairwise meet
/// in at most one vertex.  Such a K is glued from simplices along vertices, so
/// S^ext(K) is the product of S_{|f|-1} over its maximal faces f with at least
/// two vertices.  One action piece per tuple of face grades.
class ExtSpace {
public:
    ExtSpace(CategorySpec spec, SubComplex k, const std::vector<std::vector<Grade>>& tuples)
        : spec_(std::move(spec)), k_(std::move(k)) {
        for (auto& f : k_.maximal_faces())
            if (f.size() >= 2) faces_.push_back(f);
        for (std::size_t a = 0; a < faces_.size(); ++a)
            for (std::size_t b = a + 1; b < faces_.size(); ++b) {
                std::size_t common = 0;
                for (auto v : faces_[a]) common += std::binary_search(faces_[b].begin(), faces_[b].end(), v);
                if (common > 1)
                    throw usage_error("S^ext is only supported when maximal faces meet in at most one vertex, got " +
                                      to_string(k_));
            }
        for (const auto& t : tuples) add_piece(t);
        skeleton_ = skeletalize(action_);
    }

    /// The single piece whose face grades are induced by a grade of the ambient simplex.
    static ExtSpace at_grade(const CategorySpec& spec, const SubComplex& k, const Grade& fine) {
        if (fine.length() != k.ambient()) throw usage_error("fine grade length does not match the ambient simplex");
        ExtSpace probe(spec, k, {});
        std::vector<Grade> t;
        for (const auto& f : probe.faces_) t.push_back(restrict_grade(fine, f));
        return ExtSpace(spec, k, {t});
    }

    /// All tuples of face grades with total dimension at most `bound`.
    static ExtSpace up_to(const CategorySpec& spec, const SubComplex& k, std::size_t bound) {
        if (bound > spec.max_bound())
            throw bound_exceeded("bound " + std::to_string(bound) + " above the limit " + std::to_string(spec.max_bound()) +
                                 " for " + spec.name());
        ExtSpace probe(spec, k, {});
        std::vector<std::vector<Grade>> per_face;
        for (const auto& f : probe.faces_) per_face.push_back(grades_up_to(spec.vertex_count(), f.size() - 1, bound));
        std::vector<std::vector<Grade>> tuples;
        std::vector<Grade> cur;
        auto rec = [&](auto& self, std::size_t i, std::size_t left) -> void {
            if (i == per_face.size()) {
                tuples.push_back(cur);
                return;
            }
            for (const auto& g : per_face[i]) {
                if (g.total() > left) continue;
                cur.push_back(g);
                self(self, i + 1, left - g.total());
                cur.pop_back();
            }
        };
        rec(rec, 0, bound);
        return ExtSpace(spec, k, tuples);
    }

    const CategorySpec& spec() const { return spec_; }
    const SubComplex& complex() const { return k_; }
    const std::vector<Simplex>& faces() const { return faces_; }
    std::size_t pieces() const { return pieces_.size(); }

    std::optional<std::size_t> piece_of(const std::vector<Grade>& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t piece_or_throw(const std::vector<Grade>& t) const {
        auto p = piece_of(t);
        if (!p) throw bound_exceeded("face grades outside the enumerated range");
        return *p;
    }

    const RepShape& shape(std::size_t piece, std::size_t face) const { return *pieces_[piece].shapes[face]; }
    const std::shared_ptr<const RepShape>& shape_ptr(std::size_t piece, std::size_t face) const {
        return pieces_[piece].shapes[face];
    }
    std::size_t block_offset(std::size_t piece, std::size_t face) const { return pieces_[piece].offset[face]; }

    /// Mixed radix, first face most significant.
    std::vector<std::size_t> split(std::size_t piece, std::size_t x) const {
        const auto& p = pieces_[piece];
        std::vector<std::size_t> out(p.shapes.size());
        for (std::size_t f = p.shapes.size(); f-- > 0;) {
            out[f] = x % p.shapes[f]->points();
            x /= p.shapes[f]->points();
        }
        return out;
    }
    std::size_t join(std::size_t piece, const std::vector<std::size_t>& xs) const {
        const auto& p = pieces_[piece];
        std::size_t x = 0;
        for (std::size_t f = 0; f < xs.size(); ++f) x = x * p.shapes[f]->points() + xs[f];
        return x;
    }
    Matrix factor(std::size_t piece, std::size_t face, const Matrix& g) const {
        const auto& p = pieces_[piece];
        const std::size_t d = p.shapes[face]->total_dim();
        return g.block(p.offset[face], p.offset[face], d, d);
    }

    const ActionGroupoid& action() const { return action_; }
    const Skeleton& skeleton() const { return skeleton_; }
    const GroupoidPtr& groupoid() const { return skeleton_.groupoid; }

private:
    struct Piece {
        std::vector<std::shared_ptr<const RepShape>> shapes;
        std::vector<std::size_t> offset;
    };

    void add_piece(const std::vector<Grade>& t) {
        if (t.size() != faces_.size()) throw usage_error("one grade per maximal face is needed");
        if (index_.count(t)) return;
        Piece pc;
        std::vector<GroupPtr> groups;
        std::size_t off = 0, points = 1, weight = 0;
        for (std::size_t f = 0; f < t.size(); ++f) {
            if (t[f].length() + 1 != faces_[f].size()) throw usage_error("face grade has the wrong length");
            auto s = std::make_shared<const RepShape>(spec_, t[f]);
            pc.offset.push_back(off);
            off += s->total_dim();
            if (points > RepShape::max_points / std::max<std::size_t>(s->points(), 1))
                throw bound_exceeded("S^ext piece has too many points");
            points *= s->points();
            weight += t[f].total();
            groups.push_back(s->group());
            pc.shapes.push_back(std::move(s));
        }
        ActionPiece ap;
        ap.weight = weight;
        ap.points = points;
        ap.group = product_group(spec_.field, groups);
        std::string glabel;
        for (std::size_t f = 0; f < t.size(); ++f) glabel += (f ? "|" : "") + grade_label(t[f]);
        ap.grade = t.empty() ? "*" : glabel;
        const std::size_t id = pieces_.size();
        index_.emplace(t, id);
        pieces_.push_back(pc);
        auto shapes = pc.shapes;
        auto offs = pc.offset;
        auto split_fn = [shapes](std::size_t x) {
            std::vector<std::size_t> out(shapes.size());
            for (std::size_t f = shapes.size(); f-- > 0;) {
                out[f] = x % shapes[f]->points();
                x /= shapes[f]->points();
            }
            return out;
        };
        ap.act = [shapes, offs, split_fn](const Matrix& g, std::size_t x) {
            auto xs = split_fn(x);
            std::size_t out = 0;
            for (std::size_t f = 0; f < shapes.size(); ++f) {
                const std::size_t d = shapes[f]->total_dim();
                out = out * shapes[f]->points() + shapes[f]->act(g.block(offs[f], offs[f], d, d), xs[f]);
            }
            return out;
        };
        ap.label = [shapes, split_fn](std::size_t x) {
            if (shapes.empty()) return std::string("*");
            auto xs = split_fn(x);
            if (shapes.size() == 1) return shapes[0]->label(xs[0]);
            std::string s = "(";
            for (std::size_t f = 0; f < shapes.size(); ++f) s += (f ? "," : "") + shapes[f]->label(xs[f]);
            return s + ")";
        };
        action_.pieces.push_back(std::move(ap));
    }

    CategorySpec spec_;
    SubComplex k_;
    std::vector<Simplex> faces_;
    std::vector<Piece> pieces_;
    std::map<std::vector<Grade>, std::size_t> index_;
    ActionGroupoid action_;
    Skeleton skeleton_;
};

/// The strict restriction S^ext(K) -> S^ext(L) for L inside K: each maximal
/// face of L lies in a maximal face of K and is restricted from it.
inline StrictFunctor ext_restriction(const ExtSpace& from, const ExtSpace& to) {
    if (!to.complex().is_subcomplex_of(from.complex())) throw usage_error("ext_restriction: not a subcomplex");
    struct Route {
        std::size_t face;
        std::vector<std::size_t> I;
    };
    std::vector<Route> routes;
    for (const auto& tau : to.faces()) {
        std::optional<Route> r;
        for (std::size_t s = 0; s < from.faces().size() && !r; ++s)
            if (std::includes(from.faces()[s].begin(), from.faces()[s].end(), tau.begin(), tau.end()))
                r = Route{s, positions_in(tau, from.faces()[s])};
        if (!r) throw usage_error("ext_restriction: face " + simplex_label(tau) + " is not in a maximal face");
        routes.push_back(*r);
    }
    const std::size_t n = from.pieces();
    std::vector<std::size_t> piece(n);
    std::vector<std::vector<std::shared_ptr<const RepShape>>> src(n), dst(n);
    std::vector<std::vector<std::size_t>> src_off(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Grade> t;
        for (const auto& r : routes) t.push_back(restrict_grade(from.shape(p, r.face).grade(), r.I));
        piece[p] = to.piece_or_throw(t);
        for (std::size_t f = 0; f < from.faces().size(); ++f) {
            src[p].push_back(from.shape_ptr(p, f));
            src_off[p].push_back(from.block_offset(p, f));
        }
        for (std::size_t f = 0; f < routes.size(); ++f) dst[p].push_back(to.shape_ptr(piece[p], f));
    }
    auto split = [src](std::size_t p, std::size_t x) {
        std::vector<std::size_t> out(src[p].size());
        for (std::size_t f = src[p].size(); f-- > 0;) {
            out[f] = x % src[p][f]->points();
            x /= src[p][f]->points();
        }
        return out;
    };
    const FiniteField* field = from.spec().field;
    return {[=](std::size_t p, std::size_t x) {
                auto xs = split(p, x);
                std::size_t out = 0;
                for (std::size_t f = 0; f < routes.size(); ++f) {
                    const auto& s = *src[p][routes[f].face];
                    const auto& t = *dst[p][f];
                    out = out * t.points() + t.encode(restrict_data(s, t, s.decode(xs[routes[f].face]), routes[f].I));
                }
                return std::make_pair(piece[p], out);
            },
            [=](std::size_t p, const Matrix& g) {
                Matrix out(field, 0, 0);
                for (const auto& r : routes) {
                    const auto& s = *src[p][r.face];
                    const std::size_t d = s.total_dim(), o = src_off[p][r.face];
                    out = Matrix::block_diag(out, restrict_group(s, g.block(o, o, d, d), r.I));
                }
                return out;
            }};
}

/// S^ext(K) with face grades of total at most `bound`.
inline GroupoidPtr s_ext(const SubComplex& k, const CategorySpec& spec, std::size_t bound) {
    return ExtSpace::up_to(spec, k, bound).groupoid();
}

}  // namespace hallforge
