#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hallforge/errors.hpp"

namespace hallforge {

using Simplex = std::vector<std::size_t>;  // strictly increasing vertex list

/// A simplicial subcomplex of the standard simplex on vertices {0..N}.
class SubComplex {
public:
    SubComplex() = default;
    explicit SubComplex(std::size_t n) : n_(n) {}

    /// The subcomplex generated by the given simplices (closed downward).
    static SubComplex generated(std::size_t n, const std::vector<Simplex>& simplices) {
        SubComplex k(n);
        for (const auto& s : simplices) k.add(s);
        return k;
    }
    static SubComplex full(std::size_t n) {
        Simplex s(n + 1);
        for (std::size_t i = 0; i <= n; ++i) s[i] = i;
        return generated(n, {s});
    }
    static SubComplex spine(std::size_t n) {
        std::vector<Simplex> edges;
        for (std::size_t i = 0; i < n; ++i) edges.push_back({i, i + 1});
        if (n == 0) edges.push_back({0});
        return generated(n, edges);
    }

    std::size_t ambient() const { return n_; }
    const std::set<Simplex>& faces() const { return faces_; }
    bool contains(const Simplex& s) const { return faces_.count(s) != 0; }

    /// Adds a simplex with all of its faces.
    void add(Simplex s) {
        std::sort(s.begin(), s.end());
        if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end()) throw usage_error("simplex vertices must be distinct");
        if (s.back() > n_) throw usage_error("simplex vertex outside the ambient simplex");
        if (faces_.count(s)) return;
        const std::size_t k = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) f.push_back(s[i]);
            faces_.insert(f);
        }
    }

    /// Faces not contained in a larger face.
    std::vector<Simplex> maximal_faces() const {
        std::vector<Simplex> out;
        for (const auto& f : faces_) {
            bool maximal = true;
            for (std::size_t v = 0; v <= n_ && maximal; ++v) {
                if (std::binary_search(f.begin(), f.end(), v)) continue;
                Simplex g = f;
                g.insert(std::upper_bound(g.begin(), g.end(), v), v);
                if (faces_.count(g)) maximal = false;
            }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    bool is_subcomplex_of(const SubComplex& o) const {
        if (n_ != o.n_) return false;
        for (const auto& f : faces_)
            if (!o.contains(f)) return false;
        return true;
    }

    bool downward_closed() const {
        for (const auto& f : faces_)
            for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
                Simplex g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                if (!faces_.count(g)) return false;
            }
        return true;
    }

    /// Image under the vertex map v -> map[v] into the simplex on {0..target}.
    SubComplex pushforward(const std::vector<std::size_t>& map, std::size_t target) const {
        if (map.size() != n_ + 1) throw usage_error("pushforward: vertex map has the wrong size");
        SubComplex out(target);
        for (const auto& f : maximal_faces()) {
            Simplex g;
            for (auto v : f) g.push_back(map[v]);
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            out.add(g);
        }
        return out;
    }

    friend bool operator==(const SubComplex& a, const SubComplex& b) { return a.n_ == b.n_ && a.faces_ == b.faces_; }

private:
    std::size_t n_ = 0;
    std::set<Simplex> faces_;
};

/// "012" for a simplex; vertices above 9 are bracketed.
inline std::string simplex_label(const Simplex& s) {
    std::string out;
    for (auto v : s) out += v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")";
    return out;
}

/// Sorted list of maximal faces, e.g. "{012,23}".
inline std::string to_string(const SubComplex& k) {
    std::string s = "{";
    bool first = true;
    for (const auto& f : k.maximal_faces()) {
        s += (first ? "" : ",") + simplex_label(f);
        first = false;
    }
    return s + "}";
}

/// Full sorted face list, one face per entry.
inline std::string face_list(const SubComplex& k) {
    std::string s;
    for (const auto& f : k.faces()) s += simplex_label(f) + "\n";
    return s;
}

}  // namespace hallforge
