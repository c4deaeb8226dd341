#include "startorus/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "startorus/error.hpp"
#include "startorus/verify.hpp"

namespace startorus {

const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::satisfiable:
        return "satisfiable";
    case SearchStatus::unsatisfiable:
        return "unsatisfiable";
    case SearchStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Color c) { return Mask{1} << c; }

/// Colors that `v` may not take given the colored vertices in `col`
/// (bit c set = color c forbidden). Covers every edge and P4 through v:
/// v as an endpoint (v-b-x-d) and v as an inner vertex (a-v-x-d).
Mask forbidden_colors(const Graph& g, std::span<const Color> col, Vertex v) {
    Mask forbidden = 0;
    const auto nv = g.neighbors(v);
    for (Vertex b : nv) {
        const Color cb = col[b];
        if (cb == 0) {
            continue;
        }
        forbidden |= bit(cb);
        for (Vertex x : g.neighbors(b)) {
            const Color cx = col[x];
            if (x == v || cx == 0 || (forbidden & bit(cx))) {
                continue;
            }
            // v-b-x-d with color(d) = color(b) makes color(x) unusable for v.
            for (Vertex d : g.neighbors(x)) {
                if (d != b && d != v && col[d] == cb) {
                    forbidden |= bit(cx);
                    break;
                }
            }
        }
    }
    // a-v-x-d with color(a) = color(x): v may not repeat any color seen around x.
    for (std::size_t i = 0; i < nv.size(); ++i) {
        const Color ca = col[nv[i]];
        if (ca == 0) {
            continue;
        }
        for (std::size_t j = 0; j < nv.size(); ++j) {
            const Vertex x = nv[j];
            if (i == j || col[x] != ca) {
                continue;
            }
            for (Vertex d : g.neighbors(x)) {
                if (d != v && d != nv[i] && col[d] != 0) {
                    forbidden |= bit(col[d]);
                }
            }
        }
    }
    return forbidden;
}

enum class RunResult { found, exhausted, cut };

/// Sequential DFS over `order` starting from a fixed prefix.
class Engine {
  public:
    Engine(const Graph& g, std::span<const Vertex> order, int k, bool symmetry_breaking)
        : g_(g), order_(order), k_(k), symmetry_breaking_(symmetry_breaking),
          palette_(((Mask{1} << (k + 1)) - 1) & ~Mask{1}) {}

    /// `colors` holds the prefix order[0, start) already assigned; on `found`
    /// it holds a full coloring. `stop` is polled to abandon the subtree.
    /// With `frontier_depth` set, reaching that depth records the prefix and
    /// backtracks instead of descending further.
    template <class Counter, class Stop, class Frontier>
    RunResult run(std::vector<Color>& colors, std::size_t start, Counter&& count_node,
                  Stop&& stop, std::size_t frontier_depth, Frontier&& on_frontier) {
        const std::size_t n = order_.size();
        if (start == n) {
            return RunResult::found;
        }
        remaining_.assign(n + 1, 0);
        used_max_.assign(n + 1, 0);
        Color prefix_max = 0;
        for (std::size_t i = 0; i < start; ++i) {
            prefix_max = std::max(prefix_max, colors[order_[i]]);
        }
        used_max_[start] = prefix_max;

        std::size_t depth = start;
        remaining_[depth] = candidates(colors, depth);
        for (;;) {
            const Vertex v = order_[depth];
            Mask& rem = remaining_[depth];
            if (rem == 0) {
                colors[v] = 0;
                if (depth == start) {
                    return RunResult::exhausted;
                }
                --depth;
                continue;
            }
            const Color c = std::countr_zero(rem);
            rem &= rem - 1;
            colors[v] = c;
            if (!count_node() || stop()) {
                colors[v] = 0;
                return RunResult::cut;
            }
            used_max_[depth + 1] = std::max(used_max_[depth], c);
            if (depth + 1 == n) {
                return RunResult::found;
            }
            if (depth + 1 == frontier_depth) {
                on_frontier(colors);
                continue;
            }
            ++depth;
            remaining_[depth] = candidates(colors, depth);
        }
    }

  private:
    Mask candidates(std::span<const Color> colors, std::size_t depth) const {
        Mask allowed = palette_ & ~forbidden_colors(g_, colors, order_[depth]);
        if (symmetry_breaking_) {
            const Color limit = std::min<Color>(k_, used_max_[depth] + 1);
            allowed &= (Mask{1} << (limit + 1)) - 1;
        }
        return allowed;
    }

    const Graph& g_;
    std::span<const Vertex> order_;
    int k_;
    bool symmetry_breaking_;
    Mask palette_;
    std::vector<Mask> remaining_;
    std::vector<Color> used_max_;
};

void check_solver_input(const Graph& g, int k) {
    if (g.vertex_count() > kMaxSolverVertices) {
        throw DomainError("exact search limited to " + std::to_string(kMaxSolverVertices) +
                          " vertices, got " + std::to_string(g.vertex_count()));
    }
    if (k < 1 || k > kMaxSolverPalette) {
        throw DomainError("palette size must lie in [1, " + std::to_string(kMaxSolverPalette) +
                          "], got " + std::to_string(k));
    }
}

SearchOutcome run_sequential(const Graph& g, const SolverConfig& cfg,
                             std::span<const Vertex> order) {
    SearchOutcome out;
    std::vector<Color> colors(g.vertex_count(), 0);
    Engine engine(g, order, cfg.k, cfg.symmetry_breaking);
    const std::uint64_t budget = cfg.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
    std::uint64_t nodes = 0;
    auto result = engine.run(
        colors, 0, [&] { return ++nodes <= budget; }, [] { return false; },
        std::numeric_limits<std::size_t>::max(), [](const auto&) {});
    out.nodes_explored = std::min(nodes, budget);
    switch (result) {
    case RunResult::found:
        out.status = SearchStatus::satisfiable;
        out.witness.emplace(g, cfg.k, std::move(colors));
        break;
    case RunResult::exhausted:
        out.status = SearchStatus::unsatisfiable;
        break;
    case RunResult::cut:
        out.status = SearchStatus::budget_exhausted;
        break;
    }
    return out;
}

/// Splits the tree at the shallowest depth giving enough subtrees, then
/// searches them concurrently. Subtrees are ranked in DFS order; the winner is
/// the lowest-ranked satisfiable subtree, which is the sequential answer.
SearchOutcome run_parallel(const Graph& g, const SolverConfig& cfg, std::span<const Vertex> order,
                           unsigned threads) {
    const std::size_t n = order.size();
    const std::uint64_t budget = cfg.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
    std::atomic<std::uint64_t> nodes{0};
    auto count_node = [&] { return nodes.fetch_add(1, std::memory_order_relaxed) + 1 <= budget; };

    std::vector<std::vector<Color>> frontier;
    std::size_t split = 0;
    const std::size_t wanted = 8 * static_cast<std::size_t>(threads);
    for (std::size_t depth = 1; depth < n; ++depth) {
        frontier.clear();
        std::vector<Color> colors(g.vertex_count(), 0);
        Engine engine(g, order, cfg.k, cfg.symmetry_breaking);
        auto result = engine.run(
            colors, 0, count_node, [] { return false; }, depth,
            [&](const std::vector<Color>& prefix) { frontier.push_back(prefix); });
        if (result == RunResult::cut) {
            SearchOutcome out;
            out.status = SearchStatus::budget_exhausted;
            out.nodes_explored = std::min(nodes.load(), budget);
            return out;
        }
        split = depth;
        if (frontier.empty() || frontier.size() >= wanted) {
            break;
        }
    }
    if (frontier.empty()) {
        SearchOutcome out;
        out.status = SearchStatus::unsatisfiable;
        out.nodes_explored = nodes.load();
        return out;
    }

    const std::size_t tasks = frontier.size();
    std::vector<RunResult> results(tasks, RunResult::cut);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{tasks};

    auto worker = [&] {
        for (;;) {
            const std::size_t rank = next.fetch_add(1);
            if (rank >= tasks || rank > best.load()) {
                return;
            }
            Engine engine(g, order, cfg.k, cfg.symmetry_breaking);
            std::uint32_t poll = 0;
            auto stop = [&] { return (++poll & 1023U) == 0 && best.load() < rank; };
            results[rank] = engine.run(
                frontier[rank], split, count_node, stop, std::numeric_limits<std::size_t>::max(),
                [](const auto&) {});
            if (results[rank] == RunResult::found) {
                std::size_t cur = best.load();
                while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();

    SearchOutcome out;
    out.nodes_explored = std::min(nodes.load(), budget);
    const std::size_t winner = best.load();
    bool any_cut = false;
    for (std::size_t rank = 0; rank < std::min(winner, tasks); ++rank) {
        any_cut = any_cut || results[rank] != RunResult::exhausted;
    }
    if (winner < tasks) {
        out.status = SearchStatus::satisfiable;
        out.witness.emplace(g, cfg.k, std::move(frontier[winner]));
    } else {
        out.status = any_cut ? SearchStatus::budget_exhausted : SearchStatus::unsatisfiable;
    }
    return out;
}

} // namespace

std::vector<Vertex> vertex_order(const Graph& g, VertexOrder order) {
    std::vector<Vertex> ids(g.vertex_count());
    std::iota(ids.begin(), ids.end(), Vertex{0});
    if (order == VertexOrder::degree_descending) {
        std::stable_sort(ids.begin(), ids.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }
    return ids;
}

SearchOutcome exists_star_coloring(const Graph& g, const SolverConfig& cfg) {
    check_solver_input(g, cfg.k);
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    if (g.vertex_count() == 0) {
        out.status = SearchStatus::satisfiable;
        out.witness.emplace(g, cfg.k, std::vector<Color>{});
    } else {
        const auto order = vertex_order(g, cfg.vertex_order);
        const unsigned threads = cfg.thread_hint.value_or(1);
        out = threads > 1 && order.size() > 2 ? run_parallel(g, cfg, order, threads) : run_sequential(g, cfg, order);
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

ChromaticResult chromatic_search(const Graph& g, int kmax, const SolverConfig& base) {
    if (kmax < 1) {
        throw DomainError("kmax must be >= 1, got " + std::to_string(kmax));
    }
    ChromaticResult result;
    for (int k = 1; k <= kmax; ++k) {
        SolverConfig cfg = base;
        cfg.k = k;
        auto outcome = exists_star_coloring(g, cfg);
        result.k_reached = k;
        result.last_status = outcome.status;
        result.nodes_explored += outcome.nodes_explored;
        if (outcome.status == SearchStatus::satisfiable) {
            result.chi = k;
            result.witness = std::move(outcome.witness);
            return result;
        }
        if (outcome.status == SearchStatus::budget_exhausted) {
            return result;
        }
    }
    return result;
}

int star_chromatic_number(const Graph& g, int kmax) {
    auto result = chromatic_search(g, kmax, SolverConfig{});
    if (!result.chi) {
        throw RangeError("no star coloring with at most " + std::to_string(kmax) + " colors",
                         kmax);
    }
    return *result.chi;
}

bool incremental_feasible(const Graph& g, std::span<const Color> partial, Vertex v, Color c) {
    if (partial.size() != g.vertex_count() || v >= g.vertex_count()) {
        throw DomainError("partial coloring does not match the graph");
    }
    if (c < 1 || c > kMaxSolverPalette) {
        return false;
    }
    return (forbidden_colors(g, partial, v) & bit(c)) == 0;
}

} // namespace startorus
