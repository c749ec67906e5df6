#pragma once

// Test-side brute-force oracles.  These use plain modular integer arithmetic
// over prime fields and share no code with the library's linear algebra.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline int modp(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

inline int inv_mod(int a, int p) {
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    return 0;
}

// rank of a list of row vectors mod p
inline int rank_mod(std::vector<Vec> rows, int p) {
    int r = 0;
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] % p) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[r]);
        int s = inv_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = modp(x * s, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (int j = 0; j < n; ++j) rows[i][j] = modp(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    return r;
}

inline std::vector<Vec> all_vectors(int n, int p) {
    std::vector<Vec> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long long v = 0; v < total; ++v) {
        Vec x(n);
        long long t = v;
        for (int i = 0; i < n; ++i) {
            x[i] = static_cast<int>(t % p);
            t /= p;
        }
        out.push_back(x);
    }
    return out;
}

// number of ordered linearly independent k-tuples in F_p^n
inline long long independent_tuples(int n, int k, int p) {
    auto vs = all_vectors(n, p);
    long long count = 0;
    std::vector<Vec> cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            ++count;
            return;
        }
        for (const auto& v : vs) {
            cur.push_back(v);
            if (rank_mod(cur, p) == depth + 1) self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

// |GL_n(F_p)| by testing every matrix
inline long long gl_order_brute(int n, int p) { return independent_tuples(n, n, p); }

// number of k-dim subspaces of F_p^n: independent k-tuples / |GL_k|
inline long long subspace_count(int n, int k, int p) { return independent_tuples(n, k, p) / gl_order_brute(k, p); }

// ---- small dense matrices mod p, row-major as vector of rows

using Mat = std::vector<Vec>;

inline Mat zeros(int r, int c) { return Mat(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(c), 0)); }
inline int rows(const Mat& m) { return static_cast<int>(m.size()); }

inline Mat eye(int n) {
    Mat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// cols must be passed when a has zero rows
inline Mat mul(const Mat& a, const Mat& b, int inner, int cols, int p) {
    Mat r = zeros(rows(a), cols);
    for (int i = 0; i < rows(a); ++i)
        for (int k = 0; k < inner; ++k)
            for (int j = 0; j < cols; ++j) r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % p;
    return r;
}

inline std::vector<Mat> all_matrices(int r, int c, int p) {
    std::vector<Mat> out;
    for (const auto& v : all_vectors(r * c, p)) {
        Mat m = zeros(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m[i][j] = v[i * c + j];
        out.push_back(m);
    }
    return out;
}

inline int rank_of(const Mat& m, int p) { return m.empty() ? 0 : rank_mod(m, p); }

inline std::vector<Mat> gl(int n, int p) {
    std::vector<Mat> out;
    for (const auto& m : all_matrices(n, n, p))
        if (rank_of(m, p) == n) out.push_back(m);
    return out;
}

inline Mat inverse(const Mat& a, int p) {
    const int n = rows(a);
    for (const auto& b : all_matrices(n, n, p))
        if (mul(a, b, n, n, p) == eye(n)) return b;
    return {};
}

// A quiver representation: dims per vertex and one matrix per arrow (dims[t] x dims[s]).
struct Quiver {
    int vertices;
    std::vector<std::pair<int, int>> arrows;
};
using Rep = std::vector<Mat>;

inline std::vector<Rep> all_reps(const Quiver& q, const std::vector<int>& d, int p) {
    std::vector<Rep> out{Rep{}};
    for (auto [s, t] : q.arrows) {
        std::vector<Rep> next;
        for (const auto& r : out)
            for (const auto& m : all_matrices(d[t], d[s], p)) {
                auto x = r;
                x.push_back(m);
                next.push_back(x);
            }
        out = next;
    }
    return out;
}

using GroupEl = std::vector<Mat>;  // one invertible matrix per vertex

inline std::vector<GroupEl> gl_product(const std::vector<int>& d, int p) {
    std::vector<GroupEl> out{GroupEl{}};
    for (int dv : d) {
        std::vector<GroupEl> next;
        auto g = gl(dv, p);
        for (const auto& x : out)
            for (const auto& m : g) {
                auto y = x;
                y.push_back(m);
                next.push_back(y);
            }
        out = next;
    }
    return out;
}

inline Rep act(const Quiver& q, const std::vector<int>& d, const GroupEl& g, const Rep& r, int p) {
    Rep out;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        auto gi = inverse(g[s], p);
        out.push_back(mul(mul(g[t], r[a], d[t], d[s], p), gi, d[s], d[s], p));
    }
    return out;
}

struct RepClass {
    Rep rep;
    long long aut;  // stabilizer order
    std::vector<Rep> orbit;
};

// iso classes of representations of dimension vector d, by explicit orbits
inline std::vector<RepClass> classify_reps(const Quiver& q, const std::vector<int>& d, int p) {
    auto pts = all_reps(q, d, p);
    auto grp = gl_product(d, p);
    std::vector<RepClass> out;
    std::vector<char> seen(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (seen[i]) continue;
        RepClass c{pts[i], 0, {}};
        for (const auto& g : grp) {
            auto y = act(q, d, g, pts[i], p);
            if (y == pts[i]) ++c.aut;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (!seen[j] && pts[j] == y) {
                    seen[j] = 1;
                    c.orbit.push_back(y);
                }
        }
        out.push_back(c);
    }
    return out;
}

// Classes of exact sequences 0 -> U -> M -> W -> 0 with U, W fixed reps.
// Returns (index of M's class in classify_reps(dim U + dim W), |Aut of the sequence|) per class.
inline std::vector<std::pair<int, long long>> classify_sequences(const Quiver& q, const std::vector<int>& du, const Rep& u,
                                                                const std::vector<int>& dw, const Rep& w, int p) {
    const int nv = q.vertices;
    std::vector<int> dm(nv);
    for (int v = 0; v < nv; ++v) dm[v] = du[v] + dw[v];
    auto mid = classify_reps(q, dm, p);
    struct Pt {
        Rep m;
        std::vector<Mat> i, e;
        bool operator==(const Pt& o) const { return m == o.m && i == o.i && e == o.e; }
    };
    // all vertexwise monos and epis
    std::vector<std::vector<Mat>> monos(nv), epis(nv);
    for (int v = 0; v < nv; ++v) {
        for (const auto& x : all_matrices(dm[v], du[v], p))
            if (rank_of(x, p) == du[v]) monos[v].push_back(x);
        for (const auto& x : all_matrices(dw[v], dm[v], p))
            if (rank_of(x, p) == dw[v]) epis[v].push_back(x);
    }
    std::vector<Pt> pts;
    std::vector<std::vector<Mat>> is{{}}, es{{}};
    for (int v = 0; v < nv; ++v) {
        std::vector<std::vector<Mat>> ni, ne;
        for (const auto& x : is)
            for (const auto& m : monos[v]) {
                auto y = x;
                y.push_back(m);
                ni.push_back(y);
            }
        for (const auto& x : es)
            for (const auto& m : epis[v]) {
                auto y = x;
                y.push_back(m);
                ne.push_back(y);
            }
        is = ni;
        es = ne;
    }
    for (const auto& m : all_reps(q, dm, p))
        for (const auto& i : is)
            for (const auto& e : es) {
                bool ok = true;
                for (int v = 0; v < nv && ok; ++v)
                    for (const auto& row : mul(e[v], i[v], dm[v], du[v], p))
                        for (int x : row) ok = ok && x == 0;
                for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
                    auto [s, t] = q.arrows[a];
                    ok = mul(m[a], i[s], dm[s], du[s], p) == mul(i[t], u[a], du[t], du[s], p) &&
                         mul(w[a], e[s], dw[s], dm[s], p) == mul(e[t], m[a], dm[t], dm[s], p);
                }
                if (ok) pts.push_back({m, i, e});
            }
    // automorphisms of the ends
    std::vector<GroupEl> aut_u, aut_w;
    for (const auto& g : gl_product(du, p))
        if (act(q, du, g, u, p) == u) aut_u.push_back(g);
    for (const auto& g : gl_product(dw, p))
        if (act(q, dw, g, w, p) == w) aut_w.push_back(g);
    auto gm = gl_product(dm, p);
    std::vector<std::pair<int, long long>> out;
    std::vector<char> seen(pts.size(), 0);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (seen[k]) continue;
        long long stab = 0;
        for (const auto& g : gm)
            for (const auto& a : aut_u)
                for (const auto& b : aut_w) {
                    Pt y;
                    y.m = act(q, dm, g, pts[k].m, p);
                    for (int v = 0; v < nv; ++v) {
                        y.i.push_back(mul(mul(g[v], pts[k].i[v], dm[v], du[v], p), inverse(a[v], p), du[v], du[v], p));
                        y.e.push_back(mul(mul(b[v], pts[k].e[v], dw[v], dm[v], p), inverse(g[v], p), dm[v], dm[v], p));
                    }
                    if (y == pts[k]) ++stab;
                    for (std::size_t j = 0; j < pts.size(); ++j)
                        if (!seen[j] && pts[j] == y) seen[j] = 1;
                }
        int cls = -1;
        for (std::size_t c = 0; c < mid.size(); ++c)
            for (const auto& o : mid[c].orbit)
                if (o == pts[k].m) cls = static_cast<int>(c);
        out.emplace_back(cls, stab);
    }
    return out;
}

}  // namespace oracle
