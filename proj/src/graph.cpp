#include "startorus/graph.hpp"

#include <algorithm>
#include <string>

#include "startorus/error.hpp"

namespace startorus {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> lists(vertex_count);
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references a vertex outside [0, " + std::to_string(vertex_count) +
                              ")");
        }
        if (u == v) {
            throw DomainError("self-loop at vertex " + std::to_string(u));
        }
        lists[u].push_back(v);
        lists[v].push_back(u);
    }

    Graph g;
    g.offsets_.reserve(vertex_count + 1);
    g.offsets_.push_back(0);
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
        g.offsets_.push_back(g.adjacency_.size());
    }
    return g;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        return false;
    }
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::uint64_t Graph::structural_hash() const {
    constexpr std::uint64_t kOffset = 1469598103934665603ULL;
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    std::uint64_t h = kOffset;
    auto mix = [&](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xffU;
            h *= kPrime;
        }
    };
    mix(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) {
        mix(degree(v));
        for (Vertex w : neighbors(v)) {
            mix(w);
        }
    }
    return h;
}

Graph Graph::with_labels(std::map<Vertex, std::string> labels) const {
    for (const auto& [v, _] : labels) {
        if (v >= vertex_count()) {
            throw DomainError("label for vertex " + std::to_string(v) + " outside the graph");
        }
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) {
        throw DomainError("cycle requires >= 3 vertices, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
    if (n < 1) {
        throw DomainError("path requires >= 1 vertex, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph make_torus(int m, int n) {
    if (m < 3 || n < 3) {
        throw DomainError("torus requires m, n >= 3, got " + std::to_string(m) + "x" +
                          std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(2 * static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            Vertex v = torus_vertex({i, j}, n);
            edges.emplace_back(v, torus_vertex({(i + 1) % m, j}, n));
            edges.emplace_back(v, torus_vertex({i, (j + 1) % n}, n));
        }
    }
    return Graph::from_edges(static_cast<std::size_t>(m) * n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0) {
        throw DomainError("cartesian product of an empty graph");
    }
    const auto hn = static_cast<Vertex>(h.vertex_count());
    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (const auto& [b, d] : h.edges()) {
            edges.emplace_back(a * hn + b, a * hn + d);
        }
    }
    for (const auto& [a, c] : g.edges()) {
        for (Vertex b = 0; b < hn; ++b) {
            edges.emplace_back(a * hn + b, c * hn + b);
        }
    }
    return Graph::from_edges(g.vertex_count() * h.vertex_count(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> new_id) {
    const std::size_t n = g.vertex_count();
    if (new_id.size() != n) {
        throw DomainError("relabeling size does not match vertex count");
    }
    std::vector<bool> seen(n, false);
    for (Vertex v : new_id) {
        if (v >= n || seen[v]) {
            throw DomainError("relabeling is not a bijection");
        }
        seen[v] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(new_id[u], new_id[v]);
    }
    return Graph::from_edges(n, edges);
}

std::optional<std::string> structural_defect(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Vertex w = nb[i];
            if (w >= g.vertex_count()) {
                return "vertex " + std::to_string(v) + " has out-of-range neighbor";
            }
            if (w == v) {
                return "self-loop at " + std::to_string(v);
            }
            if (i > 0 && nb[i - 1] >= w) {
                return "neighbors of " + std::to_string(v) + " not strictly ascending";
            }
            if (!g.adjacent(w, v)) {
                return "edge " + std::to_string(v) + "-" + std::to_string(w) + " is not symmetric";
            }
        }
    }
    return std::nullopt;
}

} // namespace startorus
