#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cnat/grid.hpp"

namespace cnat {

enum class VertexRole { Leaf, Internal };

/// Axiom violated by a candidate grid, listed in the order they are checked.
enum class ValidationErrorKind {
    Root,
    Ambiguity,
    NoPrecursor,
    NotComplete,
    Minimality,
    WrongDotCount,
};

std::string_view to_string(ValidationErrorKind kind);

struct ValidationError {
    ValidationErrorKind kind;
    /// Offending cell; absent for WrongDotCount and Minimality.
    std::optional<CellCoord> where;
    std::string message;

    friend bool operator==(const ValidationError& a, const ValidationError& b) {
        return a.kind == b.kind && a.where == b.where;
    }
};

/// Thrown by make_cnat when the grid is not a CNAT.
class InvalidCnat : public std::runtime_error {
public:
    explicit InvalidCnat(ValidationError err)
        : std::runtime_error(err.message), error_(std::move(err)) {}
    const ValidationError& error() const noexcept { return error_; }

private:
    ValidationError error_;
};

/// A validated complete non-ambiguous tree. Per-vertex data is stored in
/// vectors aligned with grid().dots(); only validate() constructs one.
class Cnat {
public:
    static constexpr int kNoParent = -1;

    const DotGrid& grid() const noexcept { return grid_; }
    int size() const noexcept { return grid_.size(); }
    const std::vector<CellCoord>& dots() const noexcept { return grid_.dots(); }

    /// Index of the parent of dots()[i], or kNoParent for the root.
    const std::vector<int>& parents() const noexcept { return parent_; }
    const std::vector<VertexRole>& roles() const noexcept { return roles_; }

    std::optional<CellCoord> parent_of(CellCoord c) const;
    VertexRole role_of(CellCoord c) const;

    /// Children of the dot at index i: the one to its right in the same row
    /// and the one below it in the same column; -1 when absent.
    int right_child(std::size_t i) const noexcept { return right_[i]; }
    int down_child(std::size_t i) const noexcept { return down_[i]; }

    std::vector<CellCoord> leaves() const;

    friend bool operator==(const Cnat& a, const Cnat& b) { return a.grid_ == b.grid_; }

private:
    explicit Cnat(DotGrid g) : grid_(std::move(g)) {}
    std::size_t index_of(CellCoord c) const;

    DotGrid grid_;
    std::vector<int> parent_;
    std::vector<int> right_;
    std::vector<int> down_;
    std::vector<VertexRole> roles_;

    friend std::variant<Cnat, ValidationError> validate(const DotGrid& g);
};

/// Checks, in order: dotted root, non-ambiguity, existence of a precursor,
/// completeness (0 or 2 children), minimality, dot count 2n-1. The first
/// failure is reported, at the first offending cell in row-major order.
std::variant<Cnat, ValidationError> validate(const DotGrid& g);

/// validate() that throws InvalidCnat.
Cnat make_cnat(const DotGrid& g);

}  // namespace cnat
