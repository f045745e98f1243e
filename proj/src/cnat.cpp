#include "cnat/cnat.hpp"

#include <algorithm>

namespace cnat {

std::string_view to_string(ValidationErrorKind kind) {
    switch (kind) {
        case ValidationErrorKind::WrongDotCount: return "WrongDotCount";
        case ValidationErrorKind::Root: return "Root";
        case ValidationErrorKind::Ambiguity: return "Ambiguity";
        case ValidationErrorKind::NoPrecursor: return "NoPrecursor";
        case ValidationErrorKind::NotComplete: return "NotComplete";
        case ValidationErrorKind::Minimality: return "Minimality";
    }
    return "Unknown";
}

std::size_t Cnat::index_of(CellCoord c) const {
    const auto& d = grid_.dots();
    auto it = std::lower_bound(d.begin(), d.end(), c);
    if (it == d.end() || *it != c) throw std::out_of_range("no dot at " + to_string(c));
    return static_cast<std::size_t>(it - d.begin());
}

std::optional<CellCoord> Cnat::parent_of(CellCoord c) const {
    const int p = parent_[index_of(c)];
    if (p == kNoParent) return std::nullopt;
    return grid_.dots()[static_cast<std::size_t>(p)];
}

VertexRole Cnat::role_of(CellCoord c) const { return roles_[index_of(c)]; }

std::vector<CellCoord> Cnat::leaves() const {
    std::vector<CellCoord> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] == VertexRole::Leaf) out.push_back(grid_.dots()[i]);
    return out;
}

namespace {

ValidationError make_error(ValidationErrorKind kind, std::optional<CellCoord> where,
                           std::string detail) {
    std::string msg(to_string(kind));
    if (where) msg += " at " + to_string(*where);
    if (!detail.empty()) msg += ": " + detail;
    return {kind, where, std::move(msg)};
}

}  // namespace

std::variant<Cnat, ValidationError> validate(const DotGrid& g) {
    const int n = g.size();
    const auto& dots = g.dots();
    const auto un = static_cast<std::size_t>(n);

    if (dots.empty() || dots.front() != CellCoord{1, 1})
        return make_error(ValidationErrorKind::Root, CellCoord{1, 1}, "top-left cell is empty");

    // cell -> dot index, -1 when empty
    std::vector<int> at(un * un, -1);
    auto cell = [&](int r, int c) -> int& {
        return at[static_cast<std::size_t>(r - 1) * un + static_cast<std::size_t>(c - 1)];
    };
    for (std::size_t i = 0; i < dots.size(); ++i) cell(dots[i].row, dots[i].col) = static_cast<int>(i);

    std::vector<int> above(dots.size(), -1);
    std::vector<int> left(dots.size(), -1);
    for (std::size_t i = 1; i < dots.size(); ++i) {
        const auto [r, c] = dots[i];
        for (int rr = r - 1; rr >= 1 && above[i] < 0; --rr) above[i] = cell(rr, c);
        for (int cc = c - 1; cc >= 1 && left[i] < 0; --cc) left[i] = cell(r, cc);
    }

    for (std::size_t i = 1; i < dots.size(); ++i)
        if (above[i] >= 0 && left[i] >= 0)
            return make_error(ValidationErrorKind::Ambiguity, dots[i],
                              "precursors both above and to the left");
    for (std::size_t i = 1; i < dots.size(); ++i)
        if (above[i] < 0 && left[i] < 0)
            return make_error(ValidationErrorKind::NoPrecursor, dots[i],
                              "no vertex above or to the left");

    Cnat out(g);
    out.parent_.assign(dots.size(), Cnat::kNoParent);
    out.right_.assign(dots.size(), -1);
    out.down_.assign(dots.size(), -1);
    for (std::size_t i = 1; i < dots.size(); ++i) {
        if (left[i] >= 0) {
            out.parent_[i] = left[i];
            out.right_[static_cast<std::size_t>(left[i])] = static_cast<int>(i);
        } else {
            out.parent_[i] = above[i];
            out.down_[static_cast<std::size_t>(above[i])] = static_cast<int>(i);
        }
    }

    for (std::size_t i = 0; i < dots.size(); ++i)
        if ((out.right_[i] < 0) != (out.down_[i] < 0))
            return make_error(ValidationErrorKind::NotComplete, dots[i], "vertex has one child");

    std::vector<bool> row_seen(un + 1, false), col_seen(un + 1, false);
    for (const auto& d : dots) {
        row_seen[static_cast<std::size_t>(d.row)] = true;
        col_seen[static_cast<std::size_t>(d.col)] = true;
    }
    for (int r = 1; r <= n; ++r)
        if (!row_seen[static_cast<std::size_t>(r)])
            return make_error(ValidationErrorKind::Minimality, std::nullopt,
                              "row " + std::to_string(r) + " is empty");
    for (int c = 1; c <= n; ++c)
        if (!col_seen[static_cast<std::size_t>(c)])
            return make_error(ValidationErrorKind::Minimality, std::nullopt,
                              "column " + std::to_string(c) + " is empty");

    // Implied by the axioms plus completeness; kept as a guard.
    if (dots.size() != 2 * un - 1)
        return make_error(ValidationErrorKind::WrongDotCount, std::nullopt,
                          std::to_string(dots.size()) + " dots, expected " +
                              std::to_string(2 * n - 1));

    out.roles_.resize(dots.size());
    for (std::size_t i = 0; i < dots.size(); ++i)
        out.roles_[i] = out.right_[i] < 0 ? VertexRole::Leaf : VertexRole::Internal;
    return out;
}

Cnat make_cnat(const DotGrid& g) {
    auto res = validate(g);
    if (auto* err = std::get_if<ValidationError>(&res)) throw InvalidCnat(std::move(*err));
    return std::get<Cnat>(std::move(res));
}

}  // namespace cnat
