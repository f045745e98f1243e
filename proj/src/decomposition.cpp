#include "cnat/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnat {

namespace {

void collect_subtree(const Cnat& c, int root, std::vector<CellCoord>& out) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const auto i = static_cast<std::size_t>(stack.back());
        stack.pop_back();
        out.push_back(c.dots()[i]);
        if (c.right_child(i) >= 0) stack.push_back(c.right_child(i));
        if (c.down_child(i) >= 0) stack.push_back(c.down_child(i));
    }
}

// Renumbers the occupied rows and columns of `cells` to 1..k in ascending order.
Cnat flatten(const std::vector<CellCoord>& cells, std::vector<int>& rows, std::vector<int>& cols) {
    rows.clear();
    cols.clear();
    for (const auto& d : cells) {
        rows.push_back(d.row);
        cols.push_back(d.col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (rows.size() != cols.size())
        throw std::logic_error("subtree occupies a non-square set of rows and columns");

    auto rank = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin()) + 1;
    };
    std::vector<CellCoord> flat;
    flat.reserve(cells.size());
    for (const auto& d : cells) flat.push_back({rank(rows, d.row), rank(cols, d.col)});
    return make_cnat(DotGrid(static_cast<int>(rows.size()), std::move(flat)));
}

void check_index_set(const std::vector<int>& s, int k, int n, const char* what) {
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument(std::string(what) + " must have exactly k = " + std::to_string(k) +
                                    " entries");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n)
            throw std::invalid_argument(std::string(what) + " entry out of {1.." + std::to_string(n) + "}");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument(std::string(what) + " must be strictly ascending");
    }
}

}  // namespace

Decomposition decompose(const Cnat& c) {
    if (c.size() < 2) throw std::invalid_argument("a size-1 CNAT has no decomposition");

    // The root is dots()[0]; completeness gives it both children.
    std::vector<CellCoord> top_cells, left_cells;
    collect_subtree(c, c.right_child(0), top_cells);
    collect_subtree(c, c.down_child(0), left_cells);

    std::vector<int> rows, cols, left_rows, left_cols;
    Cnat top = flatten(top_cells, rows, cols);
    Cnat left = flatten(left_cells, left_rows, left_cols);
    return Decomposition{std::move(top), std::move(left), std::move(rows), std::move(cols)};
}

Cnat compose(const Cnat& top, const Cnat& left, const std::vector<int>& rows,
             const std::vector<int>& cols) {
    const int k = top.size();
    const int n = k + left.size();
    check_index_set(rows, k, n, "row set");
    check_index_set(cols, k, n, "column set");
    if (rows.front() != 1) throw std::invalid_argument("row set must contain row 1");
    if (cols.front() == 1) throw std::invalid_argument("column set must not contain column 1");

    std::vector<int> left_rows, left_cols;
    left_rows.reserve(static_cast<std::size_t>(n - k));
    left_cols.reserve(static_cast<std::size_t>(n - k));
    for (int i = 1, r = 0, c = 0; i <= n; ++i) {
        if (r < k && rows[static_cast<std::size_t>(r)] == i) ++r; else left_rows.push_back(i);
        if (c < k && cols[static_cast<std::size_t>(c)] == i) ++c; else left_cols.push_back(i);
    }

    std::vector<CellCoord> dots;
    dots.reserve(static_cast<std::size_t>(2 * n - 1));
    dots.push_back({1, 1});
    for (const auto& d : top.dots())
        dots.push_back({rows[static_cast<std::size_t>(d.row - 1)], cols[static_cast<std::size_t>(d.col - 1)]});
    for (const auto& d : left.dots())
        dots.push_back({left_rows[static_cast<std::size_t>(d.row - 1)],
                        left_cols[static_cast<std::size_t>(d.col - 1)]});
    return make_cnat(DotGrid(n, std::move(dots)));
}

Cnat compose(const Decomposition& d) { return compose(d.top, d.left, d.rows, d.cols); }

}  // namespace cnat
