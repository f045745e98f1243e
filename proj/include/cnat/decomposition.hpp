#pragma once

#include <vector>

#include "cnat/cnat.hpp"

namespace cnat {

/// Result of removing the root of a CNAT of size n >= 2.
///
/// `top` is the flattened subtree hanging off the root's right child; it owns
/// every other vertex of row 1. `left` is the subtree below the root and owns
/// every other vertex of column 1. `rows` and `cols` are the ascending original
/// indices occupied by `top`; `left` fills the complementary rows and columns.
struct Decomposition {
    Cnat top;
    Cnat left;
    std::vector<int> rows;
    std::vector<int> cols;

    int k() const noexcept { return top.size(); }
    int total_size() const noexcept { return top.size() + left.size(); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws std::invalid_argument for n = 1.
Decomposition decompose(const Cnat& c);

/// Inverse of decompose. Throws std::invalid_argument when the row/column sets
/// are malformed: wrong size, unsorted, out of {1..n}, rows missing 1, or cols
/// containing 1.
Cnat compose(const Decomposition& d);

/// Interleaves two CNATs into one of size top.size() + left.size(). `rows` and
/// `cols` follow the Decomposition conventions.
Cnat compose(const Cnat& top, const Cnat& left, const std::vector<int>& rows,
             const std::vector<int>& cols);

}  // namespace cnat
