#include "cnat/linalg.hpp"

#include <stdexcept>

namespace cnat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix must be square");
        int c = 0;
        for (auto v : row) (*this)(r, c++) = v;
        ++r;
    }
}

IntMatrix to_matrix(const Cnat& c) {
    IntMatrix m(c.size());
    for (const auto& d : c.dots()) m(d.row - 1, d.col - 1) = 1;
    return m;
}

IntMatrix to_matrix(const PermutationMatrix& p) {
    IntMatrix m(p.size());
    for (int r = 1; r <= p.size(); ++r) m(r - 1, p(r) - 1) = 1;
    return m;
}

namespace {

std::uint64_t merge_count(std::vector<int>& v, std::vector<int>& tmp, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
    std::size_t i = lo, j = mid, o = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            inv += mid - i;
            tmp[o++] = v[j++];
        } else {
            tmp[o++] = v[i++];
        }
    }
    while (i < mid) tmp[o++] = v[i++];
    while (j < hi) tmp[o++] = v[j++];
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo), tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

}  // namespace

std::uint64_t count_inversions(std::span<const int> map) {
    if (map.size() > 64) {
        std::vector<int> v(map.begin(), map.end()), tmp(map.size());
        return merge_count(v, tmp, 0, v.size());
    }
    std::uint64_t inv = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (map[i] > map[j]) ++inv;
    return inv;
}

Sign perm_sign(const PermutationMatrix& p) {
    return count_inversions(p.map()) % 2 == 0 ? Sign::plus() : Sign::minus();
}

mpz_class det_int(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    std::vector<mpz_class> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto at = [&](int r, int c) -> mpz_class& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
    };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) at(r, c) = static_cast<long>(m(r, c));

    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int swap = k + 1;
            while (swap < n && at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // exact: the Sylvester identity guarantees divisibility
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

Sign cnat_det(const Cnat& c) { return perm_sign(leaf_matrix(c)); }

}  // namespace cnat
