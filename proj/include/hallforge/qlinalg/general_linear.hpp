#pragma once

#include <cstddef>
#include <vector>

#include "hallforge/qlinalg/matrix.hpp"
#include "hallforge/qlinalg/qpoly.hpp"

namespace hallforge {

// Largest group we are willing to list element by element.
inline constexpr std::size_t group_element_cap = 25000;

/// |GL_n(F)| = prod_{i<n} (q^n - q^i).
inline BigInt general_linear_order(std::size_t n, const FiniteField& f) {
    BigInt q = f.order();
    BigInt qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    BigInt r = 1;
    BigInt qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

/// Order of the block upper-triangular subgroup of GL_n with the given diagonal block sizes.
inline BigInt parabolic_order(const std::vector<std::size_t>& blocks, const FiniteField& f) {
    BigInt r = 1;
    std::size_t before = 0;
    BigInt q = f.order();
    for (auto d : blocks) {
        r *= general_linear_order(d, f);
        for (std::size_t i = 0; i < before * d; ++i) r *= q;
        before += d;
    }
    return r;
}

/// Every invertible n x n matrix, built row by row (each new row outside the span of the previous).
inline std::vector<Matrix> enumerate_general_linear(std::size_t n, const FiniteField& f) {
    if (general_linear_order(n, f) > group_element_cap)
        throw bound_exceeded("GL_" + std::to_string(n) + "(" + f.name() + ") is too large to enumerate");
    std::vector<Matrix> out;
    const int q = f.order();
    std::size_t vectors = 1;
    for (std::size_t i = 0; i < n; ++i) vectors *= static_cast<std::size_t>(q);

    Matrix cur(f, n, n);
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v < vectors; ++v) {
            std::size_t x = v;
            for (std::size_t j = n; j-- > 0;) {
                cur.at(row, j) = static_cast<Element>(x % static_cast<std::size_t>(q));
                x /= static_cast<std::size_t>(q);
            }
            if (cur.block(0, 0, row + 1, n).rank() == row + 1) self(self, row + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace hallforge
