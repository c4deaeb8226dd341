#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "startorus/coloring.hpp"
#include "startorus/tiles.hpp"

namespace startorus {

enum class Strategy { direct_tile, hconcat, vstack_of_hconcats, exceptional_6, fallback_search };

const char* to_string(Strategy s);

/// How a coloring was assembled. `trace` is replayable:
///   "band A+B+..."          one row band, tiles concatenated left to right;
///                           bands are stacked bottom to top
///   "transpose"             swap rows and columns of the assembled grid
///   "search k=K budget=B"   result of search_fallback(m, n, K, B)
/// Tile references are catalog keys, with a "^T" suffix for a transposed tile.
struct ConstructionPlan {
    int m = 0;
    int n = 0;
    Strategy strategy = Strategy::direct_tile;
    std::vector<std::string> trace;

    /// Trace steps joined by ';'.
    std::string summary() const;
};

struct Construction {
    Coloring coloring;
    ConstructionPlan plan;
};

inline constexpr std::uint64_t kDefaultFallbackBudget = 200'000'000;
inline constexpr std::size_t kMaxAssemblyAttempts = 4096;

struct ComposerOptions {
    std::uint64_t fallback_budget = kDefaultFallbackBudget;
    /// Skip the catalog's derived gap tile and reach it through search instead.
    bool use_derived_tiles = true;
};

/// Verified star coloring of C_m x C_n with palette 6 for {3,3} and {3,5}
/// and palette 5 otherwise. Throws DomainError for m or n below 3 and
/// ConstructionError when no assembly or fallback search succeeds.
Construction construct(int m, int n, const ComposerOptions& options = {});

/// Exact search for a k-star coloring of make_torus(m, n) that stops at the
/// first witness. Deterministic for fixed inputs; nullopt if the budget runs
/// out or no coloring exists.
std::optional<Coloring> search_fallback(int m, int n, int k,
                                        std::uint64_t budget = kDefaultFallbackBudget);

/// Rebuilds the grid described by `plan.trace`. Throws DomainError on a
/// malformed trace or unknown tile.
Tile replay_plan(const ConstructionPlan& plan);

} // namespace startorus
