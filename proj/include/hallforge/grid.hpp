#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hallforge {

/// Coordinates of a correspondence grid, one ternary digit per axis.
enum GridDigit : int { grid_zero = 0, grid_mid = 1, grid_one = 2 };

inline std::size_t grid_index(const std::vector<int>& w) {
    std::size_t k = 0;
    for (std::size_t i = w.size(); i-- > 0;) k = k * 3 + static_cast<std::size_t>(w[i]);
    return k;
}

inline std::vector<int> grid_coords(std::size_t k, std::size_t dim) {
    std::vector<int> w(dim);
    for (std::size_t i = 0; i < dim; ++i, k /= 3) w[i] = static_cast<int>(k % 3);
    return w;
}

inline std::string grid_label(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += std::string(i ? "," : "") + "0M1"[w[i]];
    return s + ")";
}

}  // namespace hallforge
