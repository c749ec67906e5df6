#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hallforge/errors.hpp"

namespace hallforge {

/// A monotone map ord{m} -> ord{n} of finite ordered sets.
class DeltaPlusMap {
public:
    DeltaPlusMap() = default;
    DeltaPlusMap(std::size_t target, std::vector<std::size_t> values) : n_(target), f_(std::move(values)) {
        for (std::size_t i = 0; i < f_.size(); ++i) {
            if (f_[i] >= n_) throw usage_error("monotone map value out of range");
            if (i && f_[i] < f_[i - 1]) throw usage_error("map is not monotone");
        }
    }

    static DeltaPlusMap identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), 0);
        return {n, v};
    }
    /// The surjection ord{n} -> ord{n-1} identifying j and j+1.
    static DeltaPlusMap collapse(std::size_t n, std::size_t j) {
        if (j + 1 >= n) throw usage_error("collapse position out of range");
        std::vector<std::size_t> v(n);
        for (std::size_t x = 0; x < n; ++x) v[x] = x <= j ? x : x - 1;
        return {n - 1, v};
    }

    std::size_t source() const { return f_.size(); }
    std::size_t target() const { return n_; }
    std::size_t operator()(std::size_t x) const { return f_.at(x); }
    const std::vector<std::size_t>& values() const { return f_; }

    bool is_surjective() const {
        std::vector<char> hit(n_, 0);
        for (auto y : f_) hit[y] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }

    /// a_y = #{x : f(x) < y} for y = 0..n; consecutive cuts bound the preimages.
    std::vector<std::size_t> cuts() const {
        std::vector<std::size_t> a(n_ + 1, 0);
        for (auto y : f_) ++a[y + 1];
        for (std::size_t y = 1; y <= n_; ++y) a[y] += a[y - 1];
        return a;
    }

    friend bool operator==(const DeltaPlusMap&, const DeltaPlusMap&) = default;
    friend auto operator<=>(const DeltaPlusMap&, const DeltaPlusMap&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> f_;
};

/// second after first.
inline DeltaPlusMap compose(const DeltaPlusMap& second, const DeltaPlusMap& first) {
    if (first.target() != second.source()) throw usage_error("monotone maps do not compose");
    std::vector<std::size_t> v;
    for (auto y : first.values()) v.push_back(second(y));
    return {second.target(), v};
}

inline std::string to_string(const DeltaPlusMap& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.source(); ++i) s += (i ? "," : "") + std::to_string(f(i));
    return s + "]->" + std::to_string(f.target());
}

/// The augmentation of ord{n}: its n+1 cut points c_0..c_n, c_k sending the
/// first k elements to 0.  Each cut is returned as a map ord{n} -> ord{2}.
inline std::vector<DeltaPlusMap> augmentation(std::size_t n) {
    std::vector<DeltaPlusMap> out;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> v(n);
        for (std::size_t x = 0; x < n; ++x) v[x] = x < k ? 0 : 1;
        out.emplace_back(2, v);
    }
    return out;
}

/// A commutative d-cube in the augmented simplex category; vertex masks as in
/// GroupoidCube, edge(m, i) : vertex(m) -> vertex(m | 1<<i).
class DeltaPlusCube {
public:
    DeltaPlusCube() = default;
    DeltaPlusCube(std::size_t dim, std::vector<std::size_t> sizes, std::vector<std::vector<DeltaPlusMap>> edges)
        : dim_(dim), size_(std::move(sizes)), edge_(std::move(edges)) {
        if (size_.size() != (std::size_t{1} << dim_) || edge_.size() != size_.size()) throw usage_error("cube data has the wrong size");
        for (std::size_t m = 0; m < size_.size(); ++m) {
            if (edge_[m].size() != dim_) throw usage_error("cube edge table has the wrong size");
            for (std::size_t i = 0; i < dim_; ++i) {
                if (m >> i & 1) continue;
                const auto& e = edge_[m][i];
                if (e.source() != size_[m] || e.target() != size_[m | std::size_t{1} << i])
                    throw usage_error("cube edge does not match its vertices");
            }
        }
        if (!commutes()) throw usage_error("cube does not commute");
    }

    std::size_t dim() const { return dim_; }
    std::size_t vertices() const { return size_.size(); }
    std::size_t size(std::size_t m) const { return size_.at(m); }
    const DeltaPlusMap& edge(std::size_t m, std::size_t i) const { return edge_.at(m).at(i); }

    /// Composite along the path that adds the missing axes in increasing order.
    DeltaPlusMap composite(std::size_t from, std::size_t to) const {
        if ((from & to) != from) throw usage_error("composite: target vertex is not above the source");
        DeltaPlusMap f = DeltaPlusMap::identity(size_[from]);
        std::size_t m = from;
        for (std::size_t i = 0; i < dim_; ++i)
            if ((to >> i & 1) && !(from >> i & 1)) {
                f = hallforge::compose(edge(m, i), f);
                m |= std::size_t{1} << i;
            }
        return f;
    }

    bool commutes() const {
        for (std::size_t m = 0; m < vertices(); ++m)
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = i + 1; j < dim_; ++j) {
                    if ((m >> i & 1) || (m >> j & 1)) continue;
                    const std::size_t mi = m | std::size_t{1} << i, mj = m | std::size_t{1} << j;
                    if (hallforge::compose(edge(mi, j), edge(m, i)) != hallforge::compose(edge(mj, i), edge(m, j))) return false;
                }
        return true;
    }

    /// The cube with axis k of the result being axis perm[k] of this one.
    DeltaPlusCube permuted(const std::vector<std::size_t>& perm) const {
        auto full = [&](std::size_t s) {
            std::size_t m = 0;
            for (std::size_t k = 0; k < dim_; ++k)
                if (s >> k & 1) m |= std::size_t{1} << perm[k];
            return m;
        };
        std::vector<std::size_t> sizes(vertices());
        std::vector<std::vector<DeltaPlusMap>> edges(vertices(), std::vector<DeltaPlusMap>(dim_));
        for (std::size_t s = 0; s < vertices(); ++s) {
            sizes[s] = size_[full(s)];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!(s >> k & 1)) edges[s][k] = edge(full(s), perm[k]);
        }
        return {dim_, sizes, edges};
    }

    friend bool operator==(const DeltaPlusCube&, const DeltaPlusCube&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> size_;
    std::vector<std::vector<DeltaPlusMap>> edge_;
};

/// The associativity cube of ord{n}: the vertex at a set S of adjacency gaps
/// is ord{n - |S|}, and the edge adding gap i collapses it.
inline DeltaPlusCube assoc_cube(std::size_t n) {
    if (n < 3) throw usage_error("associativity cubes need n >= 3");
    const std::size_t d = n - 1;
    const std::size_t nv = std::size_t{1} << d;
    std::vector<std::size_t> sizes(nv);
    std::vector<std::vector<DeltaPlusMap>> edges(nv, std::vector<DeltaPlusMap>(d));
    for (std::size_t m = 0; m < nv; ++m) {
        sizes[m] = n - static_cast<std::size_t>(__builtin_popcountll(m));
        for (std::size_t i = 0; i < d; ++i) {
            if (m >> i & 1) continue;
            // gap i sits between positions j and j+1 once the gaps below it are collapsed
            const std::size_t j = i - static_cast<std::size_t>(__builtin_popcountll(m & ((std::size_t{1} << i) - 1)));
            edges[m][i] = DeltaPlusMap::collapse(sizes[m], j);
        }
    }
    return {d, sizes, edges};
}

/// The bracketing of n letters obtained by collapsing the gaps in the given order.
inline std::string bracketing(std::size_t n, const std::vector<std::size_t>& gap_order) {
    std::vector<std::string> terms;
    std::vector<std::size_t> owner(n);
    for (std::size_t k = 0; k < n; ++k) {
        terms.push_back(std::string(1, static_cast<char>('a' + k)));
        owner[k] = k;
    }
    // each letter points at its current term; terms merge left into right
    for (auto g : gap_order) {
        std::size_t l = owner[g], r = owner[g + 1];
        if (l == r) throw usage_error("gap collapsed twice");
        terms[l] = "(" + terms[l] + terms[r] + ")";
        terms[r].clear();
        for (auto& o : owner)
            if (o == r) o = l;
    }
    std::vector<std::string> parts;
    for (const auto& t : terms)
        if (!t.empty()) parts.push_back(t);
    if (parts.size() == 1 && n > 1) return parts[0].substr(1, parts[0].size() - 2);
    std::string s;
    for (const auto& t : parts) s += t;
    return s;
}

/// Every path from the initial to the final vertex, as a sequence of axes.
inline std::vector<std::vector<std::size_t>> cube_paths(std::size_t dim) {
    std::vector<std::size_t> p(dim);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct UniquenessResult {
    bool unique = false;          // every solution is the witness up to axis permutation
    std::size_t solutions = 0;    // number of cubes found
    std::size_t symmetric = 0;    // how many of them are axis permutations of the witness
    DeltaPlusCube witness;
};

/// Exhaustive search over commutative (n-1)-cubes starting at ord{n} whose
/// edges are elementary surjections ord{j} -> ord{j-1}, keeping those that
/// use every such surjection at least once.
///
/// Vertices are filled in by level.  Surjections are epimorphisms, so once one
/// edge into a vertex is chosen the composite from ord{n} is fixed and the
/// other edges into it are forced; the search branches only on that choice.
inline UniquenessResult verify_assoc_cube_unique(std::size_t n) {
    if (n < 3 || n > 5) throw usage_error("uniqueness search supports 3 <= n <= 5");
    const std::size_t d = n - 1, nv = std::size_t{1} << d;
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
    std::vector<std::size_t> sizes(nv);
    for (std::size_t m = 0; m < nv; ++m) sizes[m] = n - static_cast<std::size_t>(__builtin_popcountll(m));

    std::vector<DeltaPlusMap> from_initial(nv);  // composite ord{n} -> vertex(m)
    from_initial[0] = DeltaPlusMap::identity(n);
    std::vector<std::vector<DeltaPlusMap>> edges(nv, std::vector<DeltaPlusMap>(d));
    UniquenessResult res;
    DeltaPlusCube reference = assoc_cube(n);

    auto covers_all = [&]() {
        std::map<std::size_t, std::vector<char>> used;
        for (std::size_t j = 2; j <= n; ++j) used[j].assign(j - 1, 0);
        for (std::size_t m = 0; m < nv; ++m)
            for (std::size_t i = 0; i < d; ++i) {
                if (m >> i & 1) continue;
                const auto& e = edges[m][i];
                for (std::size_t p = 0; p + 1 < e.source(); ++p)
                    if (e(p) == e(p + 1)) used[e.source()][p] = 1;
            }
        for (auto& [j, u] : used)
            if (std::find(u.begin(), u.end(), 0) != u.end()) return false;
        return true;
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == nv) {
            if (!covers_all()) return;
            DeltaPlusCube c(d, sizes, edges);
            ++res.solutions;
            for (const auto& perm : cube_paths(d))
                if (c.permuted(perm) == reference) {
                    ++res.symmetric;
                    break;
                }
            return;
        }
        const std::size_t m = order[k];
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < d; ++i)
            if (m >> i & 1) in.push_back(i);
        const std::size_t first = m & ~(std::size_t{1} << in[0]);
        for (std::size_t j = 0; j + 1 < sizes[first]; ++j) {
            auto e0 = DeltaPlusMap::collapse(sizes[first], j);
            auto total = compose(e0, from_initial[first]);
            bool ok = true;
            std::vector<DeltaPlusMap> forced{e0};
            for (std::size_t t = 1; t < in.size() && ok; ++t) {
                const std::size_t src = m & ~(std::size_t{1} << in[t]);
                ok = false;
                for (std::size_t jj = 0; jj + 1 < sizes[src]; ++jj) {
                    auto e = DeltaPlusMap::collapse(sizes[src], jj);
                    if (compose(e, from_initial[src]) == total) {
                        forced.push_back(e);
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) continue;
            for (std::size_t t = 0; t < in.size(); ++t) edges[m & ~(std::size_t{1} << in[t])][in[t]] = forced[t];
            from_initial[m] = total;
            self(self, k + 1);
        }
    };
    rec(rec, 1);
    res.unique = res.solutions > 0 && res.symmetric == res.solutions;
    res.witness = reference;
    return res;
}

}  // namespace hallforge
