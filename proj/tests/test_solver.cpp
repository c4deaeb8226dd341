#include <doctest.h>

#include <numeric>
#include <random>

#include "startorus/error.hpp"
#include "startorus/solver.hpp"
#include "startorus/verify.hpp"
#include "support/oracles.hpp"

using namespace startorus;
using startorus::testing::is_star_coloring_by_definition;
using startorus::testing::small_corpus;
using startorus::testing::star_colorable_by_enumeration;

namespace {

SolverConfig with_k(int k) {
    SolverConfig cfg;
    cfg.k = k;
    return cfg;
}

SearchStatus status(const Graph& g, int k) { return exists_star_coloring(g, with_k(k)).status; }

/// Colored vertices of `partial` plus `v` (colored `c`) as their own graph and coloring.
bool induced_valid(const Graph& g, std::vector<Color> partial, Vertex v, Color c) {
    partial[v] = c;
    std::vector<int> index(g.vertex_count(), -1);
    std::vector<Color> colors;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (partial[u] != 0) {
            index[u] = static_cast<int>(colors.size());
            colors.push_back(partial[u]);
        }
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (index[a] >= 0 && index[b] >= 0) {
            edges.emplace_back(index[a], index[b]);
        }
    }
    return is_star_coloring_by_definition(Graph::from_edges(colors.size(), edges), colors);
}

} // namespace

TEST_CASE("exists_star_coloring on tori") {
    CHECK(status(make_torus(3, 3), 5) == SearchStatus::unsatisfiable);
    CHECK(status(make_torus(3, 3), 6) == SearchStatus::satisfiable);
    CHECK(status(make_torus(3, 5), 5) == SearchStatus::unsatisfiable);
    CHECK(status(make_torus(3, 5), 6) == SearchStatus::satisfiable);
    CHECK(status(make_torus(4, 4), 4) == SearchStatus::unsatisfiable);
    CHECK(status(make_torus(4, 4), 5) == SearchStatus::satisfiable);

    const auto out = exists_star_coloring(make_torus(11, 11), with_k(5));
    REQUIRE(out.status == SearchStatus::satisfiable);
    CHECK(verify_star(make_torus(11, 11), *out.witness).valid());
    CHECK(out.nodes_explored > 0);
}

TEST_CASE("star_chromatic_number") {
    CHECK(star_chromatic_number(make_cycle(3), 6) == 3);
    CHECK(star_chromatic_number(make_cycle(5), 6) == 4);
    CHECK(star_chromatic_number(make_cycle(7), 6) == 3);
    CHECK(star_chromatic_number(make_path(1), 3) == 1);
    CHECK(star_chromatic_number(make_path(3), 3) == 2);
    CHECK(star_chromatic_number(make_path(4), 3) == 3);
    CHECK(star_chromatic_number(make_torus(3, 4), 6) == 5);
    CHECK(star_chromatic_number(make_torus(4, 4), 6) == 5);
    CHECK(star_chromatic_number(make_torus(3, 3), 6) == 6);
    CHECK_THROWS_AS(star_chromatic_number(make_torus(3, 3), 5), RangeError);
    try {
        star_chromatic_number(make_cycle(5), 3);
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(e.kmax() == 3);
    }
    CHECK_THROWS_AS(chromatic_search(make_cycle(5), 0, {}), DomainError);
}

TEST_CASE("chromatic_search reports the witness and the last k") {
    const auto r = chromatic_search(make_cycle(5), 6, {});
    REQUIRE(r.chi.has_value());
    CHECK(*r.chi == 4);
    CHECK(r.k_reached == 4);
    CHECK(r.last_status == SearchStatus::satisfiable);
    CHECK(verify_star(make_cycle(5), *r.witness).valid());

    const auto none = chromatic_search(make_torus(3, 5), 5, {});
    CHECK_FALSE(none.chi.has_value());
    CHECK(none.k_reached == 5);
    CHECK(none.last_status == SearchStatus::unsatisfiable);
}

TEST_CASE("incremental_feasible examples") {
    const auto triangle = make_cycle(3);
    CHECK_FALSE(incremental_feasible(triangle, std::vector<Color>{1, 2, 0}, 2, 1));
    CHECK(incremental_feasible(triangle, std::vector<Color>{1, 2, 0}, 2, 3));

    const auto p4 = make_path(4);
    CHECK_FALSE(incremental_feasible(p4, std::vector<Color>{1, 2, 1, 0}, 3, 2));
    CHECK(incremental_feasible(p4, std::vector<Color>{1, 2, 1, 0}, 3, 3));
    // The path 0-1-2-3 is only checked once all four vertices are colored.
    CHECK(incremental_feasible(p4, std::vector<Color>{1, 2, 0, 0}, 3, 2));

    CHECK_THROWS_AS(incremental_feasible(p4, std::vector<Color>{1, 2}, 3, 2), DomainError);
}

TEST_CASE("incremental_feasible agrees with verification of the colored subgraph") {
    std::mt19937 rng(3);
    int checks = 0;
    for (const auto& g : small_corpus(10)) {
        for (int round = 0; round < 4; ++round) {
            const int k = 4;
            std::vector<Color> partial(g.vertex_count(), 0);
            std::vector<Vertex> order(g.vertex_count());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            const std::size_t keep = g.vertex_count() / 2 + round;
            for (std::size_t i = 0; i < std::min(keep, order.size()); ++i) {
                const Vertex v = order[i];
                const Color c = std::uniform_int_distribution<Color>(1, k)(rng);
                if (induced_valid(g, partial, v, c)) {
                    partial[v] = c;
                }
            }
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (partial[v] != 0) {
                    continue;
                }
                for (Color c = 1; c <= k; ++c) {
                    CHECK(incremental_feasible(g, partial, v, c) == induced_valid(g, partial, v, c));
                    ++checks;
                }
            }
        }
    }
    CHECK(checks > 200);
}

TEST_CASE("solver agrees with exhaustive enumeration on small graphs") {
    for (const auto& g : small_corpus(9)) {
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(g.vertex_count());
            CAPTURE(g.edge_count());
            CAPTURE(k);
            const auto out = exists_star_coloring(g, with_k(k));
            const bool expected = star_colorable_by_enumeration(g, k);
            CHECK((out.status == SearchStatus::satisfiable) == expected);
            if (out.witness) {
                CHECK(is_star_coloring_by_definition(g, out.witness->colors()));
            }
        }
    }
}

TEST_CASE("symmetry breaking and vertex order do not change the verdict") {
    for (const auto& g : small_corpus(12)) {
        for (int k = 2; k <= 5; ++k) {
            CAPTURE(g.vertex_count());
            CAPTURE(k);
            SolverConfig plain = with_k(k);
            SolverConfig free = plain;
            free.symmetry_breaking = false;
            SolverConfig by_degree = plain;
            by_degree.vertex_order = VertexOrder::degree_descending;
            const auto a = exists_star_coloring(g, plain);
            const auto b = exists_star_coloring(g, free);
            const auto c = exists_star_coloring(g, by_degree);
            CHECK(a.status == b.status);
            CHECK(a.status == c.status);
            for (const auto* out : {&a, &b, &c}) {
                if (out->witness) {
                    CHECK(verify_star(g, *out->witness).valid());
                }
            }
        }
    }
}

TEST_CASE("satisfiability is monotone in k") {
    for (const auto& g : small_corpus(10)) {
        bool seen_sat = false;
        for (int k = 1; k <= 6; ++k) {
            const bool sat = status(g, k) == SearchStatus::satisfiable;
            CHECK((!seen_sat || sat));
            seen_sat = seen_sat || sat;
        }
        CHECK(seen_sat);
    }
}

TEST_CASE("results are deterministic and independent of the thread count") {
    for (const auto& [g, k] : {std::pair{make_torus(11, 11), 5}, {make_torus(3, 7), 5}, {make_torus(4, 6), 5},
                               {make_torus(3, 5), 5}, {make_torus(4, 4), 4}, {make_cycle(5), 4}}) {
        const auto base = exists_star_coloring(g, with_k(k));
        const auto again = exists_star_coloring(g, with_k(k));
        CHECK(base.status == again.status);
        CHECK(base.witness == again.witness);
        CHECK(base.nodes_explored == again.nodes_explored);
        for (unsigned threads : {2u, 3u, 4u}) {
            CAPTURE(threads);
            SolverConfig cfg = with_k(k);
            cfg.thread_hint = threads;
            const auto par = exists_star_coloring(g, cfg);
            CHECK(par.status == base.status);
            CHECK(par.witness == base.witness);
        }
    }
}

TEST_CASE("witness is the first-use-ordered minimum") {
    const auto out = exists_star_coloring(make_cycle(4), with_k(3));
    REQUIRE(out.witness.has_value());
    CHECK(std::vector<Color>(out.witness->colors().begin(), out.witness->colors().end()) ==
          std::vector<Color>{1, 2, 1, 3});
}

TEST_CASE("node budget") {
    SolverConfig cfg = with_k(5);
    cfg.node_budget = 100;
    const auto cut = exists_star_coloring(make_torus(10, 10), cfg);
    CHECK(cut.status == SearchStatus::budget_exhausted);
    CHECK_FALSE(cut.witness.has_value());
    CHECK(cut.nodes_explored <= 100);

    cfg.thread_hint = 2;
    CHECK(exists_star_coloring(make_torus(10, 10), cfg).status == SearchStatus::budget_exhausted);

    cfg = with_k(5);
    cfg.node_budget = 1'000'000;
    CHECK(exists_star_coloring(make_torus(3, 3), cfg).status == SearchStatus::unsatisfiable);

    SolverConfig base;
    base.node_budget = 10;
    const auto partial = chromatic_search(make_torus(4, 4), 6, base);
    CHECK_FALSE(partial.chi.has_value());
    CHECK(partial.last_status == SearchStatus::budget_exhausted);
    CHECK(partial.k_reached < 6);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(exists_star_coloring(make_cycle(5), with_k(0)), DomainError);
    CHECK_THROWS_AS(exists_star_coloring(make_cycle(5), with_k(kMaxSolverPalette + 1)), DomainError);
    CHECK_THROWS_AS(exists_star_coloring(make_cycle(kMaxSolverVertices + 1), with_k(3)), DomainError);
    CHECK(exists_star_coloring(Graph{}, with_k(1)).status == SearchStatus::satisfiable);
}

TEST_CASE("vertex_order") {
    const auto star = startorus::testing::star_graph(3);
    CHECK(vertex_order(star, VertexOrder::row_major) == std::vector<Vertex>{0, 1, 2, 3});
    const auto p = make_path(4);
    CHECK(vertex_order(p, VertexOrder::degree_descending) == std::vector<Vertex>{1, 2, 0, 3});
}
