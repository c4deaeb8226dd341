#include "tile_data.hpp"

namespace startorus::detail {

// Node (x, y) is cell (row y, column x); row 0 is the bottom row.
std::vector<Tile> figure_tiles() {
    return {
        {"Fig1", 3, 5, 6,
         {
             5, 3, 1, 6, 3,
             3, 4, 5, 1, 2,
             1, 2, 3, 4, 6}},
        {"Fig2(i)", 3, 4, 5,
         {
             1, 5, 4, 2,
             3, 1, 2, 5,
             4, 2, 3, 1}},
        {"Fig2(ii)", 3, 6, 5,
         {
             1, 5, 4, 1, 3, 4,
             3, 1, 2, 5, 1, 2,
             4, 2, 3, 4, 2, 5}},
        {"Fig2(iii)", 3, 7, 5,
         {
             1, 5, 4, 2, 3, 4, 2,
             3, 1, 2, 5, 4, 1, 5,
             4, 2, 3, 1, 5, 2, 3}},
        {"Fig2(iv)", 3, 9, 5,
         {
             1, 5, 4, 1, 3, 4, 5, 3, 2,
             3, 1, 2, 5, 1, 2, 3, 4, 1,
             4, 2, 3, 4, 2, 5, 1, 2, 5}},
        {"Fig3(i)", 4, 4, 5,
         {
             4, 5, 1, 5,
             2, 3, 4, 3,
             4, 5, 1, 5,
             1, 2, 3, 2}},
        {"Fig3(ii)", 4, 5, 5,
         {
             4, 5, 1, 2, 3,
             2, 3, 4, 5, 1,
             4, 5, 1, 2, 3,
             1, 2, 3, 4, 5}},
        {"Fig3(iii)", 4, 6, 5,
         {
             4, 2, 5, 2, 3, 2,
             5, 1, 3, 1, 4, 1,
             2, 4, 2, 5, 2, 3,
             1, 3, 1, 4, 1, 5}},
        {"Fig3(iv)", 4, 7, 5,
         {
             5, 1, 4, 1, 5, 1, 4,
             1, 3, 1, 2, 1, 3, 2,
             4, 1, 5, 1, 4, 1, 5,
             1, 2, 1, 3, 1, 2, 3}},
        {"Fig3(v)", 4, 11, 5,
         {
             4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5,
             2, 3, 4, 5, 1, 2, 3, 4, 5, 4, 3,
             4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5,
             1, 2, 3, 4, 5, 1, 2, 3, 4, 3, 2}},
        {"Fig4(i)", 5, 4, 5,
         {
             3, 4, 5, 4,
             5, 1, 2, 1,
             2, 3, 4, 3,
             4, 5, 1, 5,
             1, 2, 3, 2}},
        {"Fig4(ii)", 5, 5, 5,
         {
             3, 4, 5, 1, 2,
             5, 1, 2, 3, 4,
             2, 3, 4, 5, 1,
             4, 5, 1, 2, 3,
             1, 2, 3, 4, 5}},
        {"Fig4(iii)", 5, 6, 5,
         {
             2, 5, 2, 3, 2, 4,
             3, 2, 4, 2, 5, 2,
             5, 1, 3, 1, 4, 1,
             2, 4, 2, 5, 2, 3,
             1, 3, 1, 4, 1, 5}},
        {"Fig4(iv)", 5, 7, 5,
         {
             2, 5, 1, 5, 4, 1, 3,
             1, 4, 5, 2, 3, 4, 5,
             4, 2, 3, 1, 5, 2, 3,
             5, 1, 2, 5, 4, 1, 2,
             1, 3, 4, 3, 2, 5, 4}},
        {"Fig4(v)", 5, 11, 5,
         {
             3, 4, 5, 1, 2, 3, 4, 5, 1, 5, 4,
             5, 1, 2, 3, 4, 5, 1, 2, 3, 2, 1,
             2, 3, 4, 5, 1, 2, 3, 4, 5, 4, 3,
             4, 5, 1, 2, 3, 4, 5, 1, 2, 1, 5,
             1, 2, 3, 4, 5, 1, 2, 3, 4, 3, 2}},
        {"Fig5(i)", 7, 3, 5,
         {
             3, 5, 2,
             2, 1, 4,
             5, 4, 3,
             1, 5, 2,
             3, 2, 4,
             2, 1, 5,
             4, 3, 1}},
        {"Fig5(ii)", 7, 4, 5,
         {
             3, 5, 3, 1,
             2, 1, 4, 5,
             5, 4, 2, 3,
             1, 5, 3, 4,
             3, 2, 5, 1,
             2, 1, 4, 5,
             4, 3, 2, 3}},
    };
}

} // namespace startorus::detail
