#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cnat/cnat.hpp"
#include "cnat/permutation.hpp"

namespace cnat {

/// Determinant of a permutation matrix or a CNAT: always +1 or -1.
class Sign {
public:
    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }

    constexpr int value() const noexcept { return value_; }
    constexpr Sign operator*(Sign o) const noexcept { return Sign(value_ * o.value_); }
    constexpr Sign operator-() const noexcept { return Sign(-value_); }
    friend constexpr bool operator==(Sign, Sign) = default;

private:
    constexpr explicit Sign(int v) : value_(v) {}
    int value_;
};

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    int size() const noexcept { return n_; }
    std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
    std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

private:
    // 0-based
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
    }
    int n_;
    std::vector<std::int64_t> data_;
};

/// 0/1 matrix of a CNAT: 1 at every dotted cell.
IntMatrix to_matrix(const Cnat& c);
IntMatrix to_matrix(const PermutationMatrix& p);

/// Number of pairs i < j with map[i] > map[j]. Merge-count above 64 entries.
std::uint64_t count_inversions(std::span<const int> map);

/// (-1)^inversions.
Sign perm_sign(const PermutationMatrix& p);

/// Exact determinant by fraction-free (Bareiss) elimination over big integers.
mpz_class det_int(const IntMatrix& m);

/// Sign of the leaf permutation, which equals the determinant of the full
/// 0/1 matrix of the CNAT.
Sign cnat_det(const Cnat& c);

}  // namespace cnat
