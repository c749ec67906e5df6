#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hallforge/fincat/category.hpp"
#include "hallforge/qlinalg/matrix_group.hpp"

namespace hallforge {

using DimVector = std::vector<std::size_t>;  // one entry per quiver vertex

/// Dimension vectors of the successive subquotients of a flag of length n.
struct Grade {
    std::vector<DimVector> blocks;

    std::size_t length() const { return blocks.size(); }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& b : blocks)
            for (auto d : b) t += d;
        return t;
    }
    DimVector sum(std::size_t from, std::size_t to) const {
        DimVector s(blocks.empty() ? 0 : blocks.front().size(), 0);
        for (std::size_t k = from; k < to; ++k)
            for (std::size_t v = 0; v < s.size(); ++v) s[v] += blocks[k][v];
        return s;
    }

    friend bool operator==(const Grade&, const Grade&) = default;
    friend auto operator<=>(const Grade&, const Grade&) = default;
};

inline std::string dim_vector_label(const DimVector& d) {
    if (d.size() == 1) return std::to_string(d[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/// "[2]" for Vect objects, "[1,1]" for a Vect flag, "[(1,0),(0,1)]" for quiver flags.
inline std::string grade_label(const Grade& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.blocks.size(); ++i) s += (i ? "," : "") + dim_vector_label(g.blocks[i]);
    return s + "]";
}

/// Linear data of a flag of representations in normal form.
struct RepData {
    std::vector<Matrix> arrows;  // D_t x D_s per arrow
    Matrix slice;                // slice_dim x D_0, slice kind only
};

/// Normal form for flags of length n at a fixed grade.
///
/// Every vertex space is F^{D_v} with the standard flag whose k-th subquotient
/// has dimension blocks[k][v].  A flag of representations is then the same as
/// arrow matrices that are block upper triangular (entry (r,c) may be nonzero
/// only when block(r) <= block(c)), plus, in the slice kind, a map to the
/// target that vanishes on every block except the last.  Isomorphisms of flags
/// are the product over vertices of the parabolic subgroups, acting by
/// A -> g_t A g_s^{-1} and phi -> phi g^{-1}.
///
/// Points are numbered by reading the free entries as base-q digits, most
/// significant first, so numeric order is lexicographic order of the data.
class RepShape {
public:
    static constexpr std::size_t max_points = std::size_t{1} << 22;

    RepShape(CategorySpec spec, Grade grade) : spec_(std::move(spec)), grade_(std::move(grade)) {
        const std::size_t nv = spec_.vertex_count();
        for (const auto& b : grade_.blocks)
            if (b.size() != nv) throw usage_error("grade dimension vector has wrong length");
        const std::size_t n = grade_.length();
        dims_.assign(nv, 0);
        block_of_.assign(nv, {});
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < grade_.blocks[k][v]; ++i) {
                    block_of_[v].push_back(k);
                    ++dims_[v];
                }
        offsets_.assign(nv, 0);
        for (std::size_t v = 1; v < nv; ++v) offsets_[v] = offsets_[v - 1] + dims_[v - 1];

        const auto& arrows = spec_.quiver.arrows;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            auto [s, t] = arrows[a];
            for (std::size_t r = 0; r < dims_[t]; ++r)
                for (std::size_t c = 0; c < dims_[s]; ++c)
                    if (block_of_[t][r] <= block_of_[s][c]) slots_.push_back({static_cast<int>(a), r, c});
        }
        if (spec_.is_slice())
            for (std::size_t r = 0; r < spec_.slice_dim; ++r)
                for (std::size_t c = 0; c < dims_[0]; ++c)
                    if (block_of_[0][c] + 1 == n) slots_.push_back({-1, r, c});

        const std::size_t q = static_cast<std::size_t>(spec_.field->order());
        points_ = 1;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (points_ > max_points / q)
                throw bound_exceeded("flag space at grade " + grade_label(grade_) + " has too many points");
            points_ *= q;
        }

        std::vector<GroupPtr> factors;
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<std::size_t> b;
            for (const auto& blk : grade_.blocks) b.push_back(blk[v]);
            factors.push_back(parabolic_group(*spec_.field, b));
        }
        group_ = product_group(spec_.field, factors);
    }

    const CategorySpec& spec() const { return spec_; }
    const Grade& grade() const { return grade_; }
    std::size_t points() const { return points_; }
    std::size_t free_entries() const { return slots_.size(); }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t offset(std::size_t v) const { return offsets_[v]; }
    std::size_t total_dim() const { return offsets_.back() + dims_.back(); }

    /// Offset of block k inside vertex v's space.
    std::size_t block_offset(std::size_t v, std::size_t k) const {
        std::size_t o = 0;
        for (std::size_t j = 0; j < k; ++j) o += grade_.blocks[j][v];
        return o;
    }

    RepData decode(std::size_t index) const {
        RepData d = zero_data();
        const std::size_t q = static_cast<std::size_t>(spec_.field->order());
        for (std::size_t i = slots_.size(); i-- > 0;) {
            auto x = static_cast<Element>(index % q);
            index /= q;
            place(d, slots_[i]) = x;
        }
        return d;
    }

    std::size_t encode(const RepData& d) const {
        const std::size_t q = static_cast<std::size_t>(spec_.field->order());
        std::size_t index = 0;
        for (const auto& s : slots_) index = index * q + read(d, s);
        return index;
    }

    /// Checks the block shape; used to validate data produced elsewhere.
    bool fits(const RepData& d) const {
        RepData masked = decode(encode(d));
        return masked.arrows == d.arrows && (!spec_.is_slice() || masked.slice == d.slice);
    }

    RepData zero_data() const {
        RepData d;
        for (auto [s, t] : spec_.quiver.arrows) d.arrows.emplace_back(spec_.field, dims_[t], dims_[s]);
        if (spec_.is_slice()) d.slice = Matrix(spec_.field, spec_.slice_dim, dims_[0]);
        return d;
    }

    std::string digits(std::size_t index) const {
        static const char* hex = "0123456789abcdef";
        const std::size_t q = static_cast<std::size_t>(spec_.field->order());
        std::string s(slots_.size(), '0');
        for (std::size_t i = slots_.size(); i-- > 0;) {
            s[i] = hex[index % q];
            index /= q;
        }
        return s;
    }

    std::string label(std::size_t index) const {
        std::string s = grade_label(grade_);
        if (!slots_.empty()) s += "{" + digits(index) + "}";
        return s;
    }

    /// The automorphism group of the normal-form flag: block-diagonal over vertices.
    const GroupPtr& group() const { return group_; }

    Matrix vertex_block(const Matrix& g, std::size_t v) const { return g.block(offsets_[v], offsets_[v], dims_[v], dims_[v]); }

    RepData act(const Matrix& g, const Matrix& g_inv, const RepData& d) const {
        RepData out;
        const auto& arrows = spec_.quiver.arrows;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            auto [s, t] = arrows[a];
            out.arrows.push_back(vertex_block(g, t) * d.arrows[a] * vertex_block(g_inv, s));
        }
        if (spec_.is_slice()) out.slice = d.slice * vertex_block(g_inv, 0);
        return out;
    }

    std::size_t act(const Matrix& g, std::size_t index) const {
        if (slots_.empty()) return index;
        return encode(act(g, g.inverse_or_throw(), decode(index)));
    }

private:
    struct Slot {
        int arrow;  // -1 for the slice map
        std::size_t r, c;
    };

    static Element& place(RepData& d, const Slot& s) {
        return s.arrow < 0 ? d.slice.at(s.r, s.c) : d.arrows[static_cast<std::size_t>(s.arrow)].at(s.r, s.c);
    }
    static Element read(const RepData& d, const Slot& s) {
        return s.arrow < 0 ? d.slice(s.r, s.c) : d.arrows[static_cast<std::size_t>(s.arrow)](s.r, s.c);
    }

    CategorySpec spec_;
    Grade grade_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<std::size_t>> block_of_;
    std::vector<Slot> slots_;
    std::size_t points_ = 1;
    GroupPtr group_;
};

/// All grades of flags of length n whose total dimension is at most `bound`.
inline std::vector<Grade> grades_up_to(std::size_t vertices, std::size_t n, std::size_t bound) {
    // all dimension vectors with total <= bound
    std::vector<DimVector> dvs;
    DimVector cur(vertices, 0);
    auto rec = [&](auto&& self, std::size_t v, std::size_t left) -> void {
        if (v == vertices) {
            dvs.push_back(cur);
            return;
        }
        for (std::size_t d = 0; d <= left; ++d) {
            cur[v] = d;
            self(self, v + 1, left - d);
        }
    };
    rec(rec, 0, bound);
    auto total = [](const DimVector& d) {
        std::size_t t = 0;
        for (auto x : d) t += x;
        return t;
    };
    std::vector<Grade> out;
    Grade g;
    auto rec2 = [&](auto&& self, std::size_t k, std::size_t left) -> void {
        if (k == n) {
            out.push_back(g);
            return;
        }
        for (const auto& d : dvs) {
            if (total(d) > left) continue;
            g.blocks.push_back(d);
            self(self, k + 1, left - total(d));
            g.blocks.pop_back();
        }
    };
    rec2(rec2, 0, bound);
    std::sort(out.begin(), out.end(), [&](const Grade& a, const Grade& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

/// Grade of the restriction to the vertices I = {i_0 < ... < i_m} of ordop n:
/// the k-th new subquotient merges the old ones between i_{k-1} and i_k.
inline Grade restrict_grade(const Grade& g, const std::vector<std::size_t>& I) {
    if (I.empty()) throw usage_error("restriction to an empty vertex set");
    for (std::size_t k = 0; k < I.size(); ++k)
        if (I[k] > g.length() || (k && I[k] <= I[k - 1])) throw usage_error("restriction vertices must increase within 0..n");
    Grade r;
    for (std::size_t k = 1; k < I.size(); ++k) r.blocks.push_back(g.sum(I[k - 1], I[k]));
    return r;
}

/// Restriction of normal-form data to the vertices I: the subquotient
/// V_{i_m} / V_{i_0} is the middle sub-block of every vertex space.  In the
/// slice kind the map to the target survives only when i_m = n; when the
/// destination shape is not a slice the map is forgotten.
inline RepData restrict_data(const RepShape& src, const RepShape& dst, const RepData& d, const std::vector<std::size_t>& I) {
    RepData out = dst.zero_data();
    const auto& arrows = src.spec().quiver.arrows;
    const std::size_t i0 = I.front(), im = I.back();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        std::size_t rs = src.block_offset(t, i0), re = src.block_offset(t, im);
        std::size_t cs = src.block_offset(s, i0), ce = src.block_offset(s, im);
        out.arrows[a] = d.arrows[a].block(rs, cs, re - rs, ce - cs);
    }
    if (dst.spec().is_slice() && src.spec().is_slice() && im == src.grade().length()) {
        std::size_t cs = src.block_offset(0, i0);
        out.slice = d.slice.block(0, cs, d.slice.rows(), src.dim(0) - cs);
    }
    return out;
}

/// The matching restriction of a flag automorphism.
inline Matrix restrict_group(const RepShape& src, const Matrix& g, const std::vector<std::size_t>& I) {
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < src.spec().vertex_count(); ++v) {
        std::size_t s = src.block_offset(v, I.front()), e = src.block_offset(v, I.back());
        blocks.push_back(g.block(src.offset(v) + s, src.offset(v) + s, e - s, e - s));
    }
    Matrix r = Matrix::block_diag(blocks);
    if (r.field() == nullptr) r = Matrix(src.spec().field, 0, 0);
    return r;
}

/// Concatenation of flags: (M, N) -> the flag of M + N that runs through M first.
inline Grade concat_grade(const Grade& a, const Grade& b) {
    Grade r = a;
    r.blocks.insert(r.blocks.end(), b.blocks.begin(), b.blocks.end());
    return r;
}

/// Per vertex, the block-diagonal sum of two normal-form data.
inline RepData concat_data(const RepShape& dst, const RepData& x, const RepData& y) {
    if (dst.spec().is_slice()) throw usage_error("direct sums of slice flags are not supported");
    RepData out = dst.zero_data();
    for (std::size_t k = 0; k < out.arrows.size(); ++k) out.arrows[k] = Matrix::block_diag(x.arrows[k], y.arrows[k]);
    return out;
}

inline Matrix concat_group(const RepShape& a, const RepShape& b, const Matrix& g, const Matrix& h) {
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < a.spec().vertex_count(); ++v) {
        blocks.push_back(a.vertex_block(g, v));
        blocks.push_back(b.vertex_block(h, v));
    }
    Matrix r = Matrix::block_diag(blocks);
    if (r.field() == nullptr) r = Matrix(a.spec().field, 0, 0);
    return r;
}

}  // namespace hallforge
