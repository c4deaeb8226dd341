#include "tile_data.hpp"

namespace startorus::detail {

// Witnesses produced by exists_star_coloring (row-major order, symmetry
// breaking on, single thread) and frozen here. tests/test_tiles.cpp re-derives
// both and checks they still match.
std::vector<Tile> derived_tiles() {
    return {
        {"C3C3-6", 3, 3, 6,
         {
             1, 2, 3,
             2, 4, 5,
             3, 5, 6}},
        {"C11C11-5", 11, 11, 5,
         {
             1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 3,
             3, 4, 5, 1, 4, 1, 5, 1, 4, 1, 5,
             2, 1, 3, 2, 1, 3, 1, 2, 1, 3, 1,
             1, 5, 1, 4, 5, 1, 4, 1, 5, 1, 4,
             3, 1, 2, 1, 3, 2, 1, 3, 1, 2, 1,
             1, 4, 1, 5, 1, 4, 5, 1, 4, 1, 5,
             2, 1, 3, 1, 2, 1, 3, 2, 1, 3, 1,
             1, 5, 1, 4, 1, 5, 1, 4, 5, 1, 4,
             3, 1, 2, 1, 3, 2, 4, 3, 1, 2, 1,
             2, 4, 3, 5, 4, 1, 5, 1, 4, 1, 5,
             3, 5, 4, 2, 5, 3, 4, 2, 5, 3, 4}},
    };
}

} // namespace startorus::detail
