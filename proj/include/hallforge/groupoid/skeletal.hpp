#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hallforge/qlinalg/matrix_group.hpp"

namespace hallforge {

using Rational = boost::multiprecision::cpp_rational;

/// One isomorphism class: a label and its automorphism group.
struct Component {
    std::string label;
    GroupPtr aut;
    std::size_t weight = 0;  // total dimension, used for sorting and grading
    std::string grade;       // grade label of the piece the class lives in
    std::size_t piece = 0;   // origin piece (action groupoids) ...
    std::size_t point = 0;   // ... and representative point in it
};

/// A finite groupoid in skeletal form.
class SkeletalGroupoid {
public:
    SkeletalGroupoid() = default;
    explicit SkeletalGroupoid(std::vector<Component> comps) : components_(std::move(comps)) { reindex(); }

    std::size_t size() const { return components_.size(); }
    const Component& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Component>& components() const { return components_; }

    std::optional<std::size_t> find(const std::string& label) const {
        auto it = by_label_.find(label);
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const std::string& label) const {
        auto i = find(label);
        if (!i) throw usage_error("unknown class label " + label);
        return *i;
    }

    /// Sum over components of 1/|Aut|.
    Rational cardinality() const {
        Rational r = 0;
        for (const auto& c : components_) r += Rational(BigInt(1), c.aut->order());
        return r;
    }

private:
    void reindex() {
        by_label_.clear();
        for (std::size_t i = 0; i < components_.size(); ++i)
            if (!by_label_.emplace(components_[i].label, i).second)
                throw std::logic_error("duplicate component label " + components_[i].label);
    }

    std::vector<Component> components_;
    std::map<std::string, std::size_t> by_label_;
};

using GroupoidPtr = std::shared_ptr<const SkeletalGroupoid>;

/// A functor between skeletal groupoids.
///
/// comp[c] is the image class of c; hom(c, g) maps an automorphism of c to an
/// automorphism of comp[c].  Index tables for the homomorphisms are built on
/// demand (they need listed groups) and cached.
class GroupoidFunctor {
public:
    using Hom = std::function<Matrix(std::size_t, const Matrix&)>;

    GroupoidFunctor() = default;
    GroupoidFunctor(GroupoidPtr source, GroupoidPtr target, std::vector<std::size_t> comp, Hom hom)
        : source_(std::move(source)), target_(std::move(target)), comp_(std::move(comp)), hom_(std::move(hom)),
          cache_(std::make_shared<Cache>()) {
        if (comp_.size() != source_->size()) throw std::logic_error("functor component map has wrong size");
        for (auto c : comp_)
            if (c >= target_->size()) throw std::logic_error("functor component map out of range");
        cache_->tables.resize(comp_.size());
    }

    const GroupoidPtr& source() const { return source_; }
    const GroupoidPtr& target() const { return target_; }
    std::size_t operator()(std::size_t c) const { return comp_[c]; }
    const std::vector<std::size_t>& components() const { return comp_; }
    Matrix map(std::size_t c, const Matrix& g) const { return hom_(c, g); }
    const Hom& hom() const { return hom_; }

    /// hom_table(c)[i] = index in Aut(comp[c]) of the image of the i-th element of Aut(c).
    const std::vector<std::size_t>& hom_table(std::size_t c) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto& slot = cache_->tables[c];
        if (!slot) {
            const auto& src = *(*source_)[c].aut;
            const auto& tgt = *(*target_)[comp_[c]].aut;
            std::vector<std::size_t> t(src.size());
            for (std::size_t i = 0; i < src.size(); ++i) t[i] = tgt.index_or_throw(hom_(c, src.element(i)));
            slot = std::move(t);
        }
        return *slot;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::optional<std::vector<std::size_t>>> tables;
    };

    GroupoidPtr source_;
    GroupoidPtr target_;
    std::vector<std::size_t> comp_;
    Hom hom_;
    std::shared_ptr<Cache> cache_;
};

/// A finite set viewed as a groupoid with trivial automorphism groups.
inline GroupoidPtr discrete_groupoid(std::size_t n, const std::string& prefix = "x") {
    std::vector<Component> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back({prefix + std::to_string(i), trivial_group(nullptr, 0), 0, "", 0, i});
    return std::make_shared<SkeletalGroupoid>(std::move(comps));
}

/// The functor induced by a map of finite sets.
inline GroupoidFunctor discrete_functor(const GroupoidPtr& source, const GroupoidPtr& target, std::vector<std::size_t> map) {
    return GroupoidFunctor(source, target, std::move(map), [](std::size_t, const Matrix& m) { return m; });
}

inline GroupoidFunctor identity_functor(const GroupoidPtr& g) {
    std::vector<std::size_t> comp(g->size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    return GroupoidFunctor(g, g, comp, [](std::size_t, const Matrix& m) { return m; });
}

/// second after first.
inline GroupoidFunctor compose(const GroupoidFunctor& second, const GroupoidFunctor& first) {
    if (first.target() != second.source() && first.target()->size() != second.source()->size())
        throw diagram_error("functors do not compose");
    std::vector<std::size_t> comp(first.components().size());
    for (std::size_t c = 0; c < comp.size(); ++c) comp[c] = second(first(c));
    auto f = first;
    auto s = second;
    return GroupoidFunctor(first.source(), second.target(), comp,
                           [f, s](std::size_t c, const Matrix& g) { return s.map(f(c), f.map(c, g)); });
}

/// A natural isomorphism theta: F => G between functors A -> B with the same
/// component map, stored as one element of Aut(F(c)) per component c, with
/// G(g) = theta_c F(g) theta_c^{-1}.
using TwoCell = std::vector<Matrix>;

inline TwoCell identity_cell(const GroupoidFunctor& f) {
    TwoCell t;
    for (std::size_t c = 0; c < f.source()->size(); ++c) {
        const auto& aut = *(*f.target())[f(c)].aut;
        t.push_back(Matrix::identity(aut.field(), aut.degree()));
    }
    return t;
}

/// H theta : H F => H G, for theta : F => G.
inline TwoCell whisker(const GroupoidFunctor& h, const TwoCell& theta, const GroupoidFunctor& f) {
    TwoCell out;
    for (std::size_t c = 0; c < theta.size(); ++c) out.push_back(h.map(f(c), theta[c]));
    return out;
}

/// theta K : F K => G K.
inline TwoCell precompose(const TwoCell& theta, const GroupoidFunctor& k) {
    TwoCell out;
    for (std::size_t c = 0; c < k.source()->size(); ++c) out.push_back(theta[k(c)]);
    return out;
}

/// eta after theta : F => H, for theta : F => G and eta : G => H.
inline TwoCell vertical(const TwoCell& eta, const TwoCell& theta) {
    TwoCell out;
    for (std::size_t c = 0; c < theta.size(); ++c) out.push_back(eta[c] * theta[c]);
    return out;
}

inline TwoCell inverse(const TwoCell& theta) {
    TwoCell out;
    for (const auto& t : theta) out.push_back(t.inverse_or_throw());
    return out;
}

/// The full subgroupoid on the listed classes, with its inclusion.
inline GroupoidFunctor full_subgroupoid(const GroupoidPtr& g, const std::vector<std::size_t>& keep) {
    std::vector<Component> comps;
    for (auto c : keep) comps.push_back((*g)[c]);
    auto sub = std::make_shared<const SkeletalGroupoid>(std::move(comps));
    return GroupoidFunctor(sub, g, keep, [](std::size_t, const Matrix& m) { return m; });
}

/// Checks the naturality condition on generators of every source group.
inline bool is_natural(const TwoCell& theta, const GroupoidFunctor& f, const GroupoidFunctor& g) {
    if (theta.size() != f.source()->size()) return false;
    for (std::size_t c = 0; c < theta.size(); ++c) {
        if (f(c) != g(c)) return false;
        const auto inv = theta[c].inverse_or_throw();
        for (const auto& x : (*f.source())[c].aut->generators())
            if (g.map(c, x) != theta[c] * f.map(c, x) * inv) return false;
    }
    return true;
}

/// Result of comparing two groupoids through a functor.
struct EquivalenceReport {
    std::size_t pi0_lhs = 0;
    std::size_t pi0_rhs = 0;
    bool pi0_bijective = false;
    bool aut_match = false;
    bool equivalence() const { return pi0_bijective && aut_match; }
};

/// Decides whether F is an equivalence: bijective on classes and bijective on
/// every automorphism group.
inline EquivalenceReport equivalence_report(const GroupoidFunctor& f) {
    EquivalenceReport r;
    r.pi0_lhs = f.source()->size();
    r.pi0_rhs = f.target()->size();
    std::vector<char> hit(r.pi0_rhs, 0);
    bool injective = true;
    for (std::size_t c = 0; c < r.pi0_lhs; ++c) {
        if (hit[f(c)]) injective = false;
        hit[f(c)] = 1;
    }
    r.pi0_bijective = injective && r.pi0_lhs == r.pi0_rhs;
    r.aut_match = true;
    for (std::size_t c = 0; c < r.pi0_lhs && r.aut_match; ++c) {
        const auto& a = *(*f.source())[c].aut;
        const auto& b = *(*f.target())[f(c)].aut;
        if (a.order() != b.order()) {
            r.aut_match = false;
            break;
        }
        if (a.order() == 1) continue;
        const auto& t = f.hom_table(c);
        std::vector<char> seen(b.size(), 0);
        for (auto x : t) {
            if (seen[x]) {
                r.aut_match = false;
                break;
            }
            seen[x] = 1;
        }
    }
    return r;
}

inline bool is_equivalence(const GroupoidFunctor& f) { return equivalence_report(f).equivalence(); }

}  // namespace hallforge
