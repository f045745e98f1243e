#include "cnat/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace cnat {

PermutationMatrix::PermutationMatrix(std::vector<int> map) : map_(std::move(map)) {
    if (map_.empty()) throw std::invalid_argument("permutation must have size >= 1");
    const auto n = map_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : map_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("map is not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

PermutationMatrix PermutationMatrix::identity(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 1);
    return PermutationMatrix(std::move(map));
}

PermutationMatrix compose(const PermutationMatrix& p, const PermutationMatrix& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> map(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) map[static_cast<std::size_t>(i - 1)] = p(q(i));
    return PermutationMatrix(std::move(map));
}

PermutationMatrix leaf_matrix(const Cnat& c) {
    std::vector<int> map(static_cast<std::size_t>(c.size()), 0);
    const auto& dots = c.dots();
    for (std::size_t i = 0; i < dots.size(); ++i)
        if (c.roles()[i] == VertexRole::Leaf) map[static_cast<std::size_t>(dots[i].row - 1)] = dots[i].col;
    return PermutationMatrix(std::move(map));
}

}  // namespace cnat
