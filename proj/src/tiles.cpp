#include "startorus/tiles.hpp"

#include <algorithm>

#include "startorus/error.hpp"
#include "tile_data.hpp"

namespace startorus {

namespace {

std::string join_sources(std::string_view op, std::span<const Tile> parts) {
    std::string out(op);
    out += '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += parts[i].source;
    }
    out += ')';
    return out;
}

int max_palette(std::span<const Tile> parts) {
    int k = 0;
    for (const auto& t : parts) {
        k = std::max(k, t.palette_size);
    }
    return k;
}

} // namespace

Coloring Tile::as_coloring() const {
    return Coloring(make_torus(rows, cols), palette_size, cells);
}

const std::vector<Tile>& tile_catalog() {
    static const std::vector<Tile> catalog = [] {
        auto tiles = detail::figure_tiles();
        auto derived = detail::derived_tiles();
        tiles.insert(tiles.end(), derived.begin(), derived.end());
        return tiles;
    }();
    return catalog;
}

const Tile* find_tile(std::string_view source) {
    const auto& catalog = tile_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const Tile& t) { return t.source == source; });
    return it == catalog.end() ? nullptr : &*it;
}

std::vector<std::pair<std::string, VerifyReport>> validate_catalog() {
    std::vector<std::pair<std::string, VerifyReport>> reports;
    for (const auto& tile : tile_catalog()) {
        reports.emplace_back(tile.source, verify_star(make_torus(tile.rows, tile.cols), tile.as_coloring()));
    }
    return reports;
}

Tile hconcat(std::span<const Tile> parts) {
    if (parts.empty()) {
        throw DomainError("hconcat needs at least one tile");
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    const int rows = parts.front().rows;
    int cols = 0;
    for (const auto& t : parts) {
        if (t.rows != rows) {
            throw DomainError("hconcat of tiles with " + std::to_string(rows) + " and " +
                              std::to_string(t.rows) + " rows");
        }
        cols += t.cols;
    }
    if (cols < 3) {
        throw DomainError("hconcat result narrower than 3 columns");
    }
    Tile out{join_sources("concat", parts), rows, cols, max_palette(parts), {}};
    out.cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (const auto& t : parts) {
            auto row = std::span(t.cells).subspan(static_cast<std::size_t>(r) * t.cols, t.cols);
            out.cells.insert(out.cells.end(), row.begin(), row.end());
        }
    }
    return out;
}

Tile vstack(std::span<const Tile> parts) {
    if (parts.empty()) {
        throw DomainError("vstack needs at least one tile");
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    const int cols = parts.front().cols;
    int rows = 0;
    for (const auto& t : parts) {
        if (t.cols != cols) {
            throw DomainError("vstack of tiles with " + std::to_string(cols) + " and " +
                              std::to_string(t.cols) + " columns");
        }
        rows += t.rows;
    }
    if (rows < 3) {
        throw DomainError("vstack result shorter than 3 rows");
    }
    Tile out{join_sources("stack", parts), rows, cols, max_palette(parts), {}};
    out.cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& t : parts) {
        out.cells.insert(out.cells.end(), t.cells.begin(), t.cells.end());
    }
    return out;
}

Tile transpose(const Tile& t) {
    Tile out{t.source + "^T", t.cols, t.rows, t.palette_size, {}};
    out.cells.resize(t.cells.size());
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
            out.cells[static_cast<std::size_t>(c) * t.rows + r] = t.at(r, c);
        }
    }
    return out;
}

Tile tile_from_coloring(std::string source, int rows, int cols, const Coloring& c) {
    if (rows < 1 || cols < 1 || c.size() != static_cast<std::size_t>(rows) * cols) {
        throw DomainError("coloring size does not match a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " tile");
    }
    return Tile{std::move(source), rows, cols, c.palette_size(),
                std::vector<Color>(c.colors().begin(), c.colors().end())};
}

} // namespace startorus
