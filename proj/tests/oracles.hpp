#pragma once

// Test-only reference computations. Nothing here calls into the library's
// validator, elimination or recurrences.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>;  // (row, col), 1-based

/// Direct reading of the definition: dotted root, every other dot has a dot
/// above XOR a dot to the left, no empty row or column, and the tree built
/// from nearest precursors has 0 or 2 children everywhere. No dot-count check.
inline bool is_cnat(int n, const std::set<Cell>& dots) {
    if (!dots.count({1, 1})) return false;
    std::map<Cell, int> children;
    for (const auto& d : dots) children[d] = 0;
    for (const auto& [r, c] : dots) {
        if (r == 1 && c == 1) continue;
        int up = 0, lf = 0;
        for (int rr = 1; rr < r; ++rr)
            if (dots.count({rr, c})) up = rr;
        for (int cc = 1; cc < c; ++cc)
            if (dots.count({r, cc})) lf = cc;
        if ((up > 0) == (lf > 0)) return false;
        ++children[up > 0 ? Cell{up, c} : Cell{r, lf}];
    }
    for (int i = 1; i <= n; ++i) {
        bool row = false, col = false;
        for (const auto& [r, c] : dots) {
            row |= r == i;
            col |= c == i;
        }
        if (!row || !col) return false;
    }
    return std::all_of(children.begin(), children.end(),
                       [](const auto& kv) { return kv.second == 0 || kv.second == 2; });
}

/// Grid from the low n*n bits of mask, row-major.
inline std::set<Cell> grid_from_mask(int n, std::uint64_t mask) {
    std::set<Cell> dots;
    for (int i = 0; i < n * n; ++i)
        if (mask >> i & 1u) dots.insert({i / n + 1, i % n + 1});
    return dots;
}

/// (even, odd) by walking all 2^n subsets of {1..n}.
inline std::pair<std::int64_t, std::int64_t> subset_parity(int n, int k) {
    std::int64_t even = 0, odd = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) != k) continue;
        int sum = 0;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) sum += i + 1;
        (sum % 2 == 0 ? even : odd)++;
    }
    return {even, odd};
}

/// Leibniz expansion over all permutations; fine for n <= 7.
inline std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& m) {
    const auto n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::int64_t det = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        std::int64_t term = inv % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

/// T_n by the root-removal recurrence in 128-bit arithmetic, binomials from
/// Pascal's triangle. Exact for n <= 20.
inline std::vector<unsigned __int128> t_u128(int max_n) {
    std::vector<std::vector<unsigned __int128>> pascal(static_cast<std::size_t>(max_n) + 1);
    for (int i = 0; i <= max_n; ++i) {
        auto& row = pascal[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(j)] = pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                                               pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::vector<unsigned __int128> t(static_cast<std::size_t>(max_n) + 1, 0);
    t[1] = 1;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k)
            t[static_cast<std::size_t>(n)] += pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] *
                                              pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] *
                                              t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n - k)];
    return t;
}

inline std::string to_decimal(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

}  // namespace oracle
