#include "cnat/grid.hpp"

#include <algorithm>
#include <sstream>

namespace cnat {

std::ostream& operator<<(std::ostream& os, const CellCoord& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

std::string to_string(const CellCoord& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

DotGrid::DotGrid(int n, std::vector<CellCoord> dots) : n_(n), dots_(std::move(dots)) {
    if (n_ < 1) throw std::invalid_argument("grid size must be at least 1");
    for (const auto& d : dots_) {
        if (d.row < 1 || d.row > n_ || d.col < 1 || d.col > n_)
            throw std::invalid_argument("dot " + to_string(d) + " outside " +
                                        std::to_string(n_) + "x" + std::to_string(n_) + " grid");
    }
    std::sort(dots_.begin(), dots_.end());
    auto dup = std::adjacent_find(dots_.begin(), dots_.end());
    if (dup != dots_.end()) throw std::invalid_argument("duplicate dot " + to_string(*dup));
}

bool DotGrid::contains(CellCoord c) const {
    return std::binary_search(dots_.begin(), dots_.end(), c);
}

DotGrid parse_grid(std::string_view text) {
    if (text.empty()) throw GridParseError("empty input", 0);
    if (text.back() == '\n') text.remove_suffix(1);

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (true) {
        auto nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl == std::string_view::npos ? nl : nl - start));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }

    const auto n = static_cast<int>(lines.size());
    std::vector<CellCoord> dots;
    for (int r = 0; r < n; ++r) {
        const auto line = lines[static_cast<std::size_t>(r)];
        if (static_cast<int>(line.size()) != n)
            throw GridParseError("line " + std::to_string(r + 1) + " has " +
                                     std::to_string(line.size()) + " characters, expected " +
                                     std::to_string(n),
                                 r + 1);
        for (int c = 0; c < n; ++c) {
            const char ch = line[static_cast<std::size_t>(c)];
            if (ch == 'X') {
                dots.push_back({r + 1, c + 1});
            } else if (ch != '.') {
                throw GridParseError("illegal character at line " + std::to_string(r + 1) +
                                         ", column " + std::to_string(c + 1),
                                     r + 1);
            }
        }
    }
    return DotGrid(n, std::move(dots));
}

std::string serialize_grid(const DotGrid& g) {
    const auto n = static_cast<std::size_t>(g.size());
    std::string out((n + 1) * n, '.');
    for (std::size_t r = 0; r < n; ++r) out[r * (n + 1) + n] = '\n';
    for (const auto& d : g.dots())
        out[static_cast<std::size_t>(d.row - 1) * (n + 1) + static_cast<std::size_t>(d.col - 1)] = 'X';
    return out;
}

}  // namespace cnat
