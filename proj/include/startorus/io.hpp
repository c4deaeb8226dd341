#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "startorus/coloring.hpp"

namespace startorus {

struct Construction;
struct Tile;

/// Coloring interchange document:
///   {"m": int|null, "n": int|null, "k": int, "colors": [int, ...]}
/// colors are row-major for torus colorings (m and n present). Tiles add a
/// "source" string, constructions a "plan" string array.
struct ColoringDocument {
    std::optional<int> m;
    std::optional<int> n;
    int k = 0;
    std::vector<Color> colors;
    std::optional<std::string> source;
    std::vector<std::string> plan;

    bool is_torus() const { return m.has_value() && n.has_value(); }

    static ColoringDocument from(const Tile& tile);
    static ColoringDocument from(const Construction& construction);

    friend bool operator==(const ColoringDocument&, const ColoringDocument&) = default;
};

/// Throws ParseError on malformed JSON, missing or mistyped fields, m/n given
/// without the other, or a colors array whose length is not m * n.
ColoringDocument parse_coloring_json(std::string_view text);

/// Compact JSON with a fixed key order and a trailing newline.
std::string to_json(const ColoringDocument& doc);

/// `s <k>` followed by `v <vertex> <color>` lines, vertices 1-based.
void write_dimacs_col(std::ostream& out, const Coloring& c);

} // namespace startorus
