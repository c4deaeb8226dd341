#pragma once

#include <vector>

#include "startorus/tiles.hpp"

namespace startorus::detail {

std::vector<Tile> figure_tiles();
std::vector<Tile> derived_tiles();

} // namespace startorus::detail
