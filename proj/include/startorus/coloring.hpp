#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "startorus/graph.hpp"

namespace startorus {

/// Color ids are 1-based; 0 is reserved for "uncolored" in partial assignments.
using Color = int;

/// Identifies the graph a coloring belongs to.
struct GraphShape {
    std::size_t vertex_count = 0;
    std::uint64_t hash = 0;

    static GraphShape of(const Graph& g) { return {g.vertex_count(), g.structural_hash()}; }

    friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

/// A complete assignment of colors 1..k to the vertices of one graph.
class Coloring {
  public:
    /// Throws DomainError if the length differs from the vertex count or any
    /// color lies outside [1, palette_size].
    Coloring(const Graph& g, int palette_size, std::vector<Color> colors);
    Coloring(GraphShape shape, int palette_size, std::vector<Color> colors);

    const GraphShape& shape() const noexcept { return shape_; }
    int palette_size() const noexcept { return palette_size_; }
    std::span<const Color> colors() const noexcept { return colors_; }
    Color operator[](Vertex v) const { return colors_[v]; }
    std::size_t size() const noexcept { return colors_.size(); }

    /// Number of distinct ids actually present.
    int colors_used() const;

    bool matches(const Graph& g) const { return shape_ == GraphShape::of(g); }

    /// Same assignment declared against a different palette bound.
    Coloring with_palette(int palette_size) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

  private:
    GraphShape shape_;
    int palette_size_;
    std::vector<Color> colors_;
};

/// Throws DomainError unless `c` was built for `g`.
void require_shape(const Graph& g, const Coloring& c);

} // namespace startorus
