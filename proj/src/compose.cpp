#include "startorus/compose.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "startorus/decompose.hpp"
#include "startorus/error.hpp"
#include "startorus/solver.hpp"
#include "startorus/verify.hpp"

namespace startorus {

const char* to_string(Strategy s) {
    switch (s) {
    case Strategy::direct_tile:
        return "direct_tile";
    case Strategy::hconcat:
        return "hconcat";
    case Strategy::vstack_of_hconcats:
        return "vstack_of_hconcats";
    case Strategy::exceptional_6:
        return "exceptional_6";
    case Strategy::fallback_search:
        return "fallback_search";
    }
    return "unknown";
}

std::string ConstructionPlan::summary() const {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i) {
            out += ';';
        }
        out += trace[i];
    }
    return out;
}

namespace {

constexpr int kFivePalette = 5;
constexpr int kSixPalette = 6;

/// A grid of blocks: band heights bottom to top, block widths left to right,
/// and the tile used for each (height, width) cell.
struct Assembly {
    std::vector<int> heights;
    std::vector<int> widths;
    std::map<std::pair<int, int>, std::string> lookup;
};

Tile resolve(const std::string& ref) {
    const bool transposed = ref.ends_with("^T");
    const std::string key = transposed ? ref.substr(0, ref.size() - 2) : ref;
    const Tile* tile = find_tile(key);
    if (!tile) {
        throw DomainError("unknown tile '" + key + "'");
    }
    return transposed ? transpose(*tile) : *tile;
}

std::vector<int> blocks(int large, int small, std::pair<int, int> counts) {
    std::vector<int> out(counts.second, large);
    out.insert(out.end(), counts.first, small);
    return out;
}

/// Sylvester split of t into 4s and 5s, largest blocks first.
std::vector<int> four_five(int t) {
    auto d = sylvester_decompose(t, 4, 5);
    return d ? blocks(5, 4, *d) : std::vector<int>{};
}

/// Single-band assembly for 3, 4, 5 or 7 rows; empty widths when none applies.
Assembly band(int m, int n) {
    Assembly a;
    a.heights = {m};
    switch (m) {
    case 3: {
        a.lookup = {{{3, 4}, "Fig2(i)"}, {{3, 6}, "Fig2(ii)"}, {{3, 7}, "Fig2(iii)"}, {{3, 9}, "Fig2(iv)"}};
        if (a.lookup.contains({3, n})) {
            a.widths = {n};
        } else if (n <= 17) {
            if (auto d = multi_decompose(n, {4, 6, 7})) {
                a.widths = d->blocks();
            }
        } else if (auto d = sylvester_decompose(n, 4, 7)) {
            a.widths = blocks(7, 4, *d);
        }
        break;
    }
    case 4:
    case 5: {
        const std::string fig = m == 4 ? "Fig3" : "Fig4";
        a.lookup = {{{m, 4}, fig + "(i)"},   {{m, 5}, fig + "(ii)"}, {{m, 6}, fig + "(iii)"},
                    {{m, 7}, fig + "(iv)"},  {{m, 11}, fig + "(v)"}};
        a.widths = a.lookup.contains({m, n}) ? std::vector<int>{n} : four_five(n);
        break;
    }
    case 7: {
        a.lookup = {{{7, 3}, "Fig5(i)"}, {{7, 4}, "Fig5(ii)"}};
        if (auto d = multi_decompose(n, {3, 4})) {
            a.widths = d->blocks();
        }
        break;
    }
    default:
        break;
    }
    return a;
}

/// Block layout for m <= n outside the exceptional and derived-tile cases.
Assembly plan_assembly(int m, int n) {
    switch (m) {
    case 3:
    case 4:
    case 5:
    case 7:
        return band(m, n);
    case 6:
    case 8:
    case 9:
    case 10: {
        const int base = m == 8 ? 4 : (m == 10 ? 5 : 3);
        Assembly a = band(base, n);
        a.heights.assign(m / base, base);
        return a;
    }
    case 11: {
        Assembly a;
        a.heights = {11};
        a.widths = four_five(n);
        a.lookup = {{{11, 4}, "Fig3(v)^T"}, {{11, 5}, "Fig4(v)^T"}};
        return a;
    }
    default: {
        Assembly a;
        a.heights = four_five(m);
        a.widths = four_five(n);
        a.lookup = {{{4, 4}, "Fig3(i)"}, {{4, 5}, "Fig3(ii)"}, {{5, 4}, "Fig4(i)"}, {{5, 5}, "Fig4(ii)"}};
        return a;
    }
    }
}

std::vector<std::string> assembly_trace(const Assembly& a) {
    std::vector<std::string> trace;
    for (int h : a.heights) {
        std::string step = "band ";
        for (std::size_t j = 0; j < a.widths.size(); ++j) {
            if (j) {
                step += '+';
            }
            step += a.lookup.at({h, a.widths[j]});
        }
        trace.push_back(std::move(step));
    }
    return trace;
}

Tile build_bands(const std::vector<std::vector<std::string>>& bands) {
    std::vector<Tile> rows;
    for (const auto& refs : bands) {
        std::vector<Tile> parts;
        for (const auto& ref : refs) {
            parts.push_back(resolve(ref));
        }
        rows.push_back(hconcat(parts));
    }
    return vstack(rows);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

struct Candidate {
    Tile grid;
    std::vector<std::string> trace;
};

bool verified(const Tile& grid, int k) {
    if (grid.palette_size > k) {
        return false;
    }
    return verify_star(make_torus(grid.rows, grid.cols), grid.as_coloring()).valid();
}

/// Tries distinct orderings of the band heights and block widths, starting
/// from largest-first, and returns the first assembly that verifies.
std::optional<Candidate> try_assembly(Assembly a) {
    if (a.heights.empty() || a.widths.empty()) {
        return std::nullopt;
    }
    std::sort(a.heights.begin(), a.heights.end(), std::greater<>());
    std::sort(a.widths.begin(), a.widths.end(), std::greater<>());
    std::size_t attempts = 0;
    do {
        auto widths = a.widths;
        do {
            Assembly attempt{a.heights, widths, a.lookup};
            auto trace = assembly_trace(attempt);
            std::vector<std::vector<std::string>> bands;
            for (const auto& step : trace) {
                bands.push_back(split(step.substr(5), '+'));
            }
            Tile grid = build_bands(bands);
            if (verified(grid, kFivePalette)) {
                return Candidate{std::move(grid), std::move(trace)};
            }
            if (++attempts >= kMaxAssemblyAttempts) {
                return std::nullopt;
            }
        } while (std::prev_permutation(widths.begin(), widths.end()));
    } while (std::prev_permutation(a.heights.begin(), a.heights.end()));
    return std::nullopt;
}

const Tile* direct_tile(int m, int n, bool use_derived) {
    for (const auto& t : tile_catalog()) {
        if (t.rows == m && t.cols == n && t.palette_size == kFivePalette &&
            (use_derived || t.source.starts_with("Fig"))) {
            return &t;
        }
    }
    return nullptr;
}

Construction finish(const Tile& grid, ConstructionPlan plan) {
    Coloring coloring = grid.as_coloring();
    const auto report = verify_star(make_torus(plan.m, plan.n), coloring);
    if (!report.valid()) {
        throw ConstructionError("assembled coloring failed verification for " +
                                    std::to_string(plan.m) + "x" + std::to_string(plan.n) + ": " +
                                    report.describe(),
                                plan.m, plan.n);
    }
    return Construction{std::move(coloring), std::move(plan)};
}

Construction construct_normalized(int m, int n, const ComposerOptions& options) {
    if (auto candidate = try_assembly(plan_assembly(m, n))) {
        ConstructionPlan plan{m, n, Strategy::direct_tile, std::move(candidate->trace)};
        plan.strategy = plan.trace.size() > 1 ? Strategy::vstack_of_hconcats
                        : plan.trace.front().find('+') != std::string::npos ? Strategy::hconcat
                                                                             : Strategy::direct_tile;
        return finish(candidate->grid, std::move(plan));
    }
    const std::uint64_t budget = options.fallback_budget;
    if (auto found = search_fallback(m, n, kFivePalette, budget)) {
        ConstructionPlan plan{m, n, Strategy::fallback_search,
                              {"search k=5 budget=" + std::to_string(budget)}};
        return finish(tile_from_coloring("search", m, n, *found), std::move(plan));
    }
    throw ConstructionError("no verified 5-star coloring found for " + std::to_string(m) + "x" +
                                std::to_string(n),
                            m, n);
}

} // namespace

std::optional<Coloring> search_fallback(int m, int n, int k, std::uint64_t budget) {
    if (m < 3 || n < 3 || k < 3) {
        throw DomainError("search_fallback requires m, n, k >= 3");
    }
    const Graph g = make_torus(m, n);
    SolverConfig cfg;
    cfg.k = k;
    cfg.vertex_order = VertexOrder::row_major;
    cfg.symmetry_breaking = true;
    cfg.node_budget = budget;
    auto outcome = exists_star_coloring(g, cfg);
    if (outcome.status != SearchStatus::satisfiable || !verify_star(g, *outcome.witness).valid()) {
        return std::nullopt;
    }
    return outcome.witness;
}

Construction construct(int m, int n, const ComposerOptions& options) {
    if (m < 3 || n < 3) {
        throw DomainError("construct requires m, n >= 3, got " + std::to_string(m) + "x" +
                          std::to_string(n));
    }
    const int lo = std::min(m, n);
    const int hi = std::max(m, n);
    if (lo == 3 && (hi == 3 || hi == 5)) {
        std::string source = hi == 5 ? "Fig1" : "C3C3-6";
        if (hi == 3 && !options.use_derived_tiles) {
            auto found = search_fallback(3, 3, kSixPalette, options.fallback_budget);
            if (!found) {
                throw ConstructionError("no 6-star coloring found for 3x3", m, n);
            }
            ConstructionPlan plan{m, n, Strategy::exceptional_6,
                                  {"search k=6 budget=" + std::to_string(options.fallback_budget)}};
            return finish(tile_from_coloring("search", 3, 3, *found), std::move(plan));
        }
        ConstructionPlan plan{m, n, Strategy::exceptional_6, {"band " + source}};
        Tile grid = *find_tile(source);
        if (m > n) {
            grid = transpose(grid);
            plan.trace.emplace_back("transpose");
        }
        return finish(grid, std::move(plan));
    }
    if (const Tile* tile = direct_tile(m, n, options.use_derived_tiles)) {
        return finish(*tile, {m, n, Strategy::direct_tile, {"band " + tile->source}});
    }
    if (m <= n) {
        return construct_normalized(m, n, options);
    }
    auto base = construct_normalized(n, m, options);
    ConstructionPlan plan = base.plan;
    plan.m = m;
    plan.n = n;
    plan.trace.emplace_back("transpose");
    Tile grid = transpose(tile_from_coloring("base", n, m, base.coloring));
    return finish(grid, std::move(plan));
}

Tile replay_plan(const ConstructionPlan& plan) {
    std::vector<std::vector<std::string>> bands;
    std::optional<Tile> grid;
    const bool transposed =
        std::find(plan.trace.begin(), plan.trace.end(), "transpose") != plan.trace.end();
    for (const auto& step : plan.trace) {
        if (step.starts_with("band ")) {
            bands.push_back(split(step.substr(5), '+'));
        } else if (step == "transpose") {
            continue;
        } else if (step.starts_with("search ")) {
            int k = 0;
            unsigned long long budget = 0;
            if (std::sscanf(step.c_str(), "search k=%d budget=%llu", &k, &budget) != 2) {
                throw DomainError("malformed search step '" + step + "'");
            }
            const int rows = transposed ? plan.n : plan.m;
            const int cols = transposed ? plan.m : plan.n;
            auto found = search_fallback(rows, cols, k, budget);
            if (!found) {
                throw DomainError("search step found no coloring on replay");
            }
            grid = tile_from_coloring("search", rows, cols, *found);
        } else {
            throw DomainError("unknown plan step '" + step + "'");
        }
    }
    if (!grid) {
        if (bands.empty()) {
            throw DomainError("plan has no band or search step");
        }
        grid = build_bands(bands);
    }
    return transposed ? transpose(*grid) : *grid;
}

} // namespace startorus
