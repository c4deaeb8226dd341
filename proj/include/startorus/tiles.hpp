#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "startorus/coloring.hpp"
#include "startorus/verify.hpp"

namespace startorus {

/// A complete coloring of the torus C_rows x C_cols used as an assembly block.
///
/// Cells are row-major with row 0 at the bottom and column 0 at the left,
/// so cell (r, c) colors torus vertex r * cols + c.
struct Tile {
    std::string source;
    int rows = 0;
    int cols = 0;
    int palette_size = 5;
    std::vector<Color> cells;

    Color at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }

    /// The tile as a coloring of make_torus(rows, cols).
    Coloring as_coloring() const;

    friend bool operator==(const Tile&, const Tile&) = default;
};

/// Fixed tiles plus the two derived exceptional/gap tiles ("C3C3-6", "C11C11-5").
const std::vector<Tile>& tile_catalog();

/// Catalog lookup by source key; nullptr when absent.
const Tile* find_tile(std::string_view source);

/// verify_star for every catalog tile against its torus.
std::vector<std::pair<std::string, VerifyReport>> validate_catalog();

/// Column-wise concatenation. The result is a candidate only; it has to be
/// verified. Throws DomainError on mixed row counts, empty input or total width < 3.
Tile hconcat(std::span<const Tile> parts);

/// Row-wise concatenation; same caveats as hconcat.
Tile vstack(std::span<const Tile> parts);

/// Swaps rows and columns (a coloring of C_cols x C_rows).
Tile transpose(const Tile& t);

/// Builds a tile from a torus coloring.
Tile tile_from_coloring(std::string source, int rows, int cols, const Coloring& c);

} // namespace startorus
