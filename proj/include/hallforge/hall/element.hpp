#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hallforge/groupoid/skeletal.hpp"

namespace hallforge {

/// A finitely supported function on isomorphism classes, keyed by class label.
/// Zero coefficients are never stored.
class HallElement {
public:
    HallElement() = default;

    static HallElement delta(const std::string& label, const Rational& c = 1) {
        HallElement e;
        e.add(label, c);
        return e;
    }

    const std::map<std::string, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const std::string& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const std::string& label, const Rational& c) {
        if (c == 0) return;
        auto& slot = terms_[label];
        slot += c;
        if (slot == 0) terms_.erase(label);
    }

    HallElement& operator+=(const HallElement& o) {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }
    friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
    friend HallElement operator-(HallElement a, const HallElement& b) { return a += b * Rational(-1); }
    friend HallElement operator*(const HallElement& a, const Rational& s) {
        HallElement out;
        if (s == 0) return out;
        for (const auto& [l, c] : a.terms_) out.terms_[l] = c * s;
        return out;
    }
    friend HallElement operator*(const Rational& s, const HallElement& a) { return a * s; }
    friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

private:
    std::map<std::string, Rational> terms_;
};

/// Values of a function on the classes of g, by component index.
inline std::vector<Rational> values_on(const HallElement& f, const SkeletalGroupoid& g) {
    std::vector<Rational> v(g.size(), 0);
    for (const auto& [l, c] : f.terms()) {
        auto i = g.find(l);
        if (!i) throw bound_exceeded("class " + l + " is outside the enumerated range");
        v[*i] = c;
    }
    return v;
}

inline HallElement element_from(const std::vector<Rational>& v, const SkeletalGroupoid& g) {
    HallElement e;
    for (std::size_t i = 0; i < v.size(); ++i) e.add(g[i].label, v[i]);
    return e;
}

/// (F^* f)(y) = f(F(y)).
inline std::vector<Rational> pull_values(const std::vector<Rational>& f, const GroupoidFunctor& F) {
    std::vector<Rational> out(F.source()->size());
    for (std::size_t y = 0; y < out.size(); ++y) out[y] = f[F(y)];
    return out;
}

/// (F_! f)(z) = sum over classes y with F(y) = z of f(y) |Aut z| / |Aut y|.
inline std::vector<Rational> push_values(const std::vector<Rational>& f, const GroupoidFunctor& F) {
    const auto& Y = *F.source();
    const auto& Z = *F.target();
    std::vector<Rational> out(Z.size(), 0);
    for (std::size_t y = 0; y < Y.size(); ++y) {
        if (f[y] == 0) continue;
        out[F(y)] += f[y] * Rational(Z[F(y)].aut->order(), Y[y].aut->order());
    }
    return out;
}

inline HallElement pull(const HallElement& f, const GroupoidFunctor& F) {
    return element_from(pull_values(values_on(f, *F.target()), F), *F.source());
}

inline HallElement push(const HallElement& f, const GroupoidFunctor& F) {
    return element_from(push_values(values_on(f, *F.source()), F), *F.target());
}

/// Pointwise product of two functions on the same groupoid.
inline std::vector<Rational> pointwise(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

/// "3·[2] + 1/2·[1] + [0]"; unit coefficients are left off.  Classes are
/// sorted by weight, then label, when g is given.
inline std::string render(const HallElement& e, const SkeletalGroupoid* g = nullptr) {
    if (e.is_zero()) return "0";
    std::vector<std::pair<std::string, Rational>> items(e.terms().begin(), e.terms().end());
    if (g) {
        auto weight = [&](const std::string& l) {
            auto i = g->find(l);
            return i ? (*g)[*i].weight : SIZE_MAX;
        };
        std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
            auto wa = weight(a.first), wb = weight(b.first);
            return wa != wb ? wa < wb : a.first < b.first;
        });
    }
    std::string s;
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& [l, c] = items[k];
        if (k) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Rational a = c < 0 ? Rational(-c) : c;
        s += (a == 1 ? "" : a.str() + "·") + l;
    }
    return s;
}

}  // namespace hallforge
