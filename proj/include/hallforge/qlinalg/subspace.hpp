#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/qlinalg/matrix.hpp"

namespace hallforge {

/// A subspace of F^n, stored by its reduced row-echelon basis (one row per basis vector).
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;  // dim x ambient, in rref

    std::size_t dim() const { return basis.rows(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient != b.ambient) return a.ambient < b.ambient;
        return a.basis < b.basis;
    }
};

/// Canonical subspace spanned by the rows of `rows` (which may be dependent).
inline Subspace row_space(const Matrix& rows) {
    Subspace s;
    s.ambient = rows.cols();
    if (rows.rows() == 0) {
        s.basis = Matrix(rows.field(), 0, rows.cols());
        return s;
    }
    std::vector<std::size_t> piv;
    Matrix r = rows.rref(&piv);
    s.basis = r.block(0, 0, piv.size(), rows.cols());
    return s;
}

/// Subspace spanned by the columns of `cols` (the image of a linear map).
inline Subspace column_space(const Matrix& cols) { return row_space(cols.transpose()); }

inline Subspace zero_subspace(const FiniteField& f, std::size_t n) { return {n, Matrix(f, 0, n)}; }
inline Subspace full_subspace(const FiniteField& f, std::size_t n) { return {n, Matrix::identity(f, n)}; }

/// All k-dimensional subspaces of F^n, in lexicographic order of their echelon matrices.
inline std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k, const FiniteField& f) {
    if (k > n) throw usage_error("enumerate_subspaces: k > n");
    if (n > 6) throw bound_exceeded("enumerate_subspaces: ambient dimension above 6");
    std::vector<Subspace> out;
    const int q = f.order();

    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free slots: row i, column j > piv[i], j not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) slots.emplace_back(i, j);
        std::vector<int> digit(slots.size(), 0);
        while (true) {
            Matrix m(f, k, n);
            for (std::size_t i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                m.at(slots[s].first, slots[s].second) = static_cast<Element>(digit[s]);
            out.push_back({n, std::move(m)});
            std::size_t s = 0;
            while (s < digit.size() && ++digit[s] == q) digit[s++] = 0;
            if (s == digit.size()) break;
        }
        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A surjection F^n -> F^{n - dim V} whose kernel is exactly V.
///
/// Coordinates of the quotient are the non-pivot coordinates of V's echelon basis.
inline std::pair<std::size_t, Matrix> quotient_map(const Subspace& v) {
    const std::size_t n = v.ambient;
    const std::size_t d = v.dim();
    const FiniteField* f = v.basis.field();
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v.basis(i, j) != 0) {
                piv.push_back(j);
                break;
            }
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.push_back(j);
    Matrix p(f, n - d, n);
    for (std::size_t r = 0; r < free.size(); ++r) {
        p.at(r, free[r]) = 1;
        for (std::size_t i = 0; i < d; ++i) p.at(r, piv[i]) = f->neg(v.basis(i, free[r]));
    }
    return {n - d, p};
}

inline bool contains(const Subspace& big, const Subspace& small) {
    if (small.dim() == 0) return true;
    return row_space(Matrix::stack(big.basis, small.basis)).dim() == big.dim();
}

}  // namespace hallforge
