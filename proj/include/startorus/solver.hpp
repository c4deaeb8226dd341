#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "startorus/coloring.hpp"
#include "startorus/graph.hpp"

namespace startorus {

enum class VertexOrder { row_major, degree_descending };

struct SolverConfig {
    int k = 5;
    VertexOrder vertex_order = VertexOrder::row_major;
    /// Colors must be introduced in first-use order (1, then 2, ...).
    bool symmetry_breaking = true;
    /// Maximum number of color assignments; absent means unlimited.
    std::optional<std::uint64_t> node_budget;
    /// Worker threads for subtree splitting; absent or 1 runs sequentially.
    std::optional<unsigned> thread_hint;
};

enum class SearchStatus { satisfiable, unsatisfiable, budget_exhausted };

const char* to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::unsatisfiable;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::size_t kMaxSolverVertices = 4096;
inline constexpr int kMaxSolverPalette = 63;

/// Complete depth-first search for a k-star coloring.
///
/// Each assignment is checked only against P4s and edges through the newly
/// colored vertex. With symmetry breaking the reported witness is the
/// lexicographically smallest first-use-ordered coloring (in vertex order),
/// independent of the thread count.
SearchOutcome exists_star_coloring(const Graph& g, const SolverConfig& cfg);

/// Smallest k <= kmax admitting a star coloring. Throws RangeError if none.
int star_chromatic_number(const Graph& g, int kmax);

struct ChromaticResult {
    /// Set when some k <= kmax was proven satisfiable.
    std::optional<int> chi;
    std::optional<Coloring> witness;
    /// Largest k for which a search ran; equals kmax when everything was UNSAT.
    int k_reached = 0;
    /// budget_exhausted when a search was cut before reaching a verdict.
    SearchStatus last_status = SearchStatus::unsatisfiable;
    std::uint64_t nodes_explored = 0;
};

/// Runs exists_star_coloring for k = 1, 2, ... kmax with `base` (its k is ignored).
ChromaticResult chromatic_search(const Graph& g, int kmax, const SolverConfig& base);

/// Whether giving color `c` to the uncolored vertex `v` keeps the partial
/// coloring free of monochromatic edges and of bicolored P4s whose four
/// vertices are all colored. Entries equal to 0 in `partial` are uncolored.
bool incremental_feasible(const Graph& g, std::span<const Color> partial, Vertex v, Color c);

/// Vertex visiting order used by the solver for a given strategy.
std::vector<Vertex> vertex_order(const Graph& g, VertexOrder order);

} // namespace startorus
