#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "startorus/coloring.hpp"

namespace startorus {

/// Fill per color id 1..6 (Okabe-Ito, colorblind safe).
inline constexpr std::array<std::string_view, 6> kSvgPalette = {
    "#E69F00", "#56B4E9", "#009E73", "#F0E442", "#0072B2", "#D55E00"};

/// m x n grid, row 0 at the bottom, each cell filled by color and labeled
/// with its id; grid edges as lines, wraparound edges as dashed arcs.
/// Output is a pure function of the input. Throws DomainError when the size
/// does not match or a color id falls outside 1..6.
std::string render_svg(int m, int n, std::span<const Color> colors);

} // namespace startorus
