#include "startorus/coloring.hpp"

#include <algorithm>
#include <string>

#include "startorus/error.hpp"

namespace startorus {

Coloring::Coloring(const Graph& g, int palette_size, std::vector<Color> colors)
    : Coloring(GraphShape::of(g), palette_size, std::move(colors)) {}

Coloring::Coloring(GraphShape shape, int palette_size, std::vector<Color> colors)
    : shape_(shape), palette_size_(palette_size), colors_(std::move(colors)) {
    if (palette_size_ < 1) {
        throw DomainError("palette size must be >= 1, got " + std::to_string(palette_size_));
    }
    if (colors_.size() != shape_.vertex_count) {
        throw DomainError("coloring has " + std::to_string(colors_.size()) + " entries for " +
                          std::to_string(shape_.vertex_count) + " vertices");
    }
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1 || colors_[v] > palette_size_) {
            throw DomainError("color " + std::to_string(colors_[v]) + " at vertex " +
                              std::to_string(v) + " outside [1, " + std::to_string(palette_size_) +
                              "]");
        }
    }
}

int Coloring::colors_used() const {
    std::vector<bool> seen(static_cast<std::size_t>(palette_size_) + 1, false);
    int count = 0;
    for (Color c : colors_) {
        if (!seen[c]) {
            seen[c] = true;
            ++count;
        }
    }
    return count;
}

Coloring Coloring::with_palette(int palette_size) const {
    return Coloring(shape_, palette_size, colors_);
}

void require_shape(const Graph& g, const Coloring& c) {
    if (!c.matches(g)) {
        throw DomainError("coloring shape (" + std::to_string(c.shape().vertex_count) +
                          " vertices) does not match the graph (" +
                          std::to_string(g.vertex_count()) + " vertices)");
    }
}

} // namespace startorus
