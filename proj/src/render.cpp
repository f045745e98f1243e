#include "cnat/render.hpp"

#include <sstream>

namespace cnat {

std::string render_ascii(const Cnat& c) {
    const int n = c.size();
    std::vector<std::string> cells(static_cast<std::size_t>(n * n), "·");
    const auto& dots = c.dots();
    for (std::size_t i = 0; i < dots.size(); ++i)
        cells[static_cast<std::size_t>((dots[i].row - 1) * n + dots[i].col - 1)] =
            c.roles()[i] == VertexRole::Leaf ? "○" : "●";
    std::string out;
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            if (col > 0) out += ' ';
            out += cells[static_cast<std::size_t>(r * n + col)];
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Cnat& c) {
    constexpr int cell = 40;
    constexpr int margin = 10;
    const int n = c.size();
    const int side = n * cell + 2 * margin;
    auto centre = [&](int idx) { return margin + (idx - 1) * cell + cell / 2; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    for (int i = 0; i <= n; ++i) {
        const int p = margin + i * cell;
        os << "  <line x1=\"" << margin << "\" y1=\"" << p << "\" x2=\"" << side - margin << "\" y2=\"" << p
           << "\" stroke=\"#bbb\"/>\n";
        os << "  <line x1=\"" << p << "\" y1=\"" << margin << "\" x2=\"" << p << "\" y2=\"" << side - margin
           << "\" stroke=\"#bbb\"/>\n";
    }
    const auto& dots = c.dots();
    for (std::size_t i = 0; i < dots.size(); ++i) {
        const int p = c.parents()[i];
        if (p == Cnat::kNoParent) continue;
        const auto& from = dots[static_cast<std::size_t>(p)];
        os << "  <line x1=\"" << centre(from.col) << "\" y1=\"" << centre(from.row) << "\" x2=\""
           << centre(dots[i].col) << "\" y2=\"" << centre(dots[i].row) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < dots.size(); ++i) {
        const bool leaf = c.roles()[i] == VertexRole::Leaf;
        os << "  <circle cx=\"" << centre(dots[i].col) << "\" cy=\"" << centre(dots[i].row) << "\" r=\""
           << cell / 4 << "\" fill=\"" << (leaf ? "#1f6fd0" : "black") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cnat
