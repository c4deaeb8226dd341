#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace startorus {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted and deduplicated, so two graphs with the same
/// edge set compare equal regardless of how they were built. Labels are
/// display-only and do not take part in equality or hashing.
class Graph {
  public:
    Graph() = default;

    /// Builds the canonical graph on `vertex_count` vertices. Duplicate edges
    /// (in either orientation) collapse; self-loops and out-of-range ids throw
    /// DomainError.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// FNV-1a over the vertex count and canonical adjacency.
    std::uint64_t structural_hash() const;

    const std::map<Vertex, std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::map<Vertex, std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::map<Vertex, std::string> labels_;
};

/// Position in a torus grid C_m x C_n. Vertex id is row-major: row * n + col.
struct TorusCoord {
    int row = 0;
    int col = 0;

    friend bool operator==(const TorusCoord&, const TorusCoord&) = default;
};

inline Vertex torus_vertex(TorusCoord c, int n) { return static_cast<Vertex>(c.row * n + c.col); }
inline TorusCoord torus_coord(Vertex v, int n) {
    return {static_cast<int>(v) / n, static_cast<int>(v) % n};
}

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_torus(int m, int n);

/// G x H with (a, b) numbered a * |V(H)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Image of `g` under the vertex bijection v -> new_id[v].
Graph relabel(const Graph& g, std::span<const Vertex> new_id);

/// Describes the first violated structural invariant (asymmetry, loop,
/// duplicate or unsorted neighbor), or nullopt when the graph is well formed.
std::optional<std::string> structural_defect(const Graph& g);

} // namespace startorus
