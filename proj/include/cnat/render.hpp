#pragma once

#include <string>

#include "cnat/cnat.hpp"

namespace cnat {

/// One text row per grid row: `●` internal vertex, `○` leaf, `·` empty.
std::string render_ascii(const Cnat& c);

/// Standalone SVG: grid cells, parent-child edges, leaves filled blue.
std::string render_svg(const Cnat& c);

}  // namespace cnat
