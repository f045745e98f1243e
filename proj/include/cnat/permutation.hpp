#pragma once

#include <span>
#include <vector>

#include "cnat/cnat.hpp"

namespace cnat {

/// Permutation matrix stored as a row -> column bijection on {1..n}.
class PermutationMatrix {
public:
    /// Throws std::invalid_argument unless map is a bijection onto {1..map.size()}.
    explicit PermutationMatrix(std::vector<int> map);

    static PermutationMatrix identity(int n);

    int size() const noexcept { return static_cast<int>(map_.size()); }
    /// Column of the 1 in the given 1-based row.
    int operator()(int row) const { return map_[static_cast<std::size_t>(row - 1)]; }
    std::span<const int> map() const noexcept { return map_; }

    friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

private:
    std::vector<int> map_;
};

/// (p * q)(i) = p(q(i)); the matrix of the composite is the product of the matrices.
PermutationMatrix compose(const PermutationMatrix& p, const PermutationMatrix& q);

/// Row -> column map of the leaves; one leaf per row and column is a Cnat invariant.
PermutationMatrix leaf_matrix(const Cnat& c);

}  // namespace cnat
