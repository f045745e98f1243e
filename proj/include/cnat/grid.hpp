#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cnat {

/// A grid cell, 1-based, row 1 at the top and column 1 at the left.
struct CellCoord {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

std::ostream& operator<<(std::ostream& os, const CellCoord& c);
std::string to_string(const CellCoord& c);

/// Raw n x n filling. Dots are kept sorted in row-major order, so two grids
/// compare equal iff they have the same size and the same dotted cells.
class DotGrid {
public:
    /// Throws std::invalid_argument if n < 1, a dot lies outside the grid,
    /// or a coordinate is repeated.
    DotGrid(int n, std::vector<CellCoord> dots);
    DotGrid(int n, std::initializer_list<CellCoord> dots)
        : DotGrid(n, std::vector<CellCoord>(dots)) {}

    int size() const noexcept { return n_; }
    const std::vector<CellCoord>& dots() const noexcept { return dots_; }
    std::size_t dot_count() const noexcept { return dots_.size(); }
    bool contains(CellCoord c) const;

    friend bool operator==(const DotGrid&, const DotGrid&) = default;

private:
    int n_;
    std::vector<CellCoord> dots_;
};

class GridParseError : public std::runtime_error {
public:
    GridParseError(const std::string& what, int line)
        : std::runtime_error(what), line_(line) {}
    /// 1-based line of the offending input, 0 when not line-specific.
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Parses n lines of exactly n characters from {'X', '.'}, newline separated,
/// with an optional trailing newline.
DotGrid parse_grid(std::string_view text);

/// Canonical text: every line, including the last, ends in '\n'.
std::string serialize_grid(const DotGrid& g);

}  // namespace cnat
