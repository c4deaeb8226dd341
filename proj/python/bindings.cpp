#include <algorithm>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "startorus/compose.hpp"
#include "startorus/decompose.hpp"
#include "startorus/dimacs.hpp"
#include "startorus/error.hpp"
#include "startorus/io.hpp"
#include "startorus/render.hpp"
#include "startorus/solver.hpp"
#include "startorus/tiles.hpp"
#include "startorus/verify.hpp"

namespace py = pybind11;
using namespace startorus;

namespace {

std::vector<Color> to_vector(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

py::object witness_of(const VerifyReport& r) {
    if (const auto* e = std::get_if<Edge>(&r.witness)) {
        return py::make_tuple(e->first, e->second);
    }
    if (const auto* p = std::get_if<Path4>(&r.witness)) {
        return py::make_tuple((*p)[0], (*p)[1], (*p)[2], (*p)[3]);
    }
    return py::none();
}

VertexOrder parse_order(const std::string& name) {
    if (name == "row_major") {
        return VertexOrder::row_major;
    }
    if (name == "degree_descending") {
        return VertexOrder::degree_descending;
    }
    throw DomainError("vertex_order must be 'row_major' or 'degree_descending'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Star colorings of torus grids";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ArithmeticError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
            py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 if (v >= g.vertex_count()) {
                     throw py::index_error("vertex out of range");
                 }
                 const auto ns = g.neighbors(v);
                 return std::vector<Vertex>(ns.begin(), ns.end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("to_dimacs",
             [](const Graph& g) {
                 std::ostringstream out;
                 write_dimacs(out, g);
                 return out.str();
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__hash__", &Graph::structural_hash)
        .def("__repr__", [](const Graph& g) {
            return "<Graph vertices=" + std::to_string(g.vertex_count()) + " edges=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_torus", &make_torus, py::arg("m"), py::arg("n"));
    m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
    m.def("parse_dimacs", py::overload_cast<std::string_view>(&parse_dimacs), py::arg("text"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_property_readonly("verdict", [](const VerifyReport& r) { return std::string(to_string(r.verdict)); })
        .def_property_readonly("witness", &witness_of)
        .def_readonly("colors_used", &VerifyReport::colors_used)
        .def_property_readonly("valid", &VerifyReport::valid)
        .def("__bool__", &VerifyReport::valid)
        .def("__repr__", [](const VerifyReport& r) { return "<VerifyReport " + r.describe() + ">"; });

    m.def(
        "verify_star",
        [](const Graph& g, const std::vector<Color>& colors, std::optional<int> k) {
            const int palette = k ? *k : std::max(1, colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()));
            return verify_star(g, Coloring(g, palette, colors));
        },
        py::arg("graph"), py::arg("colors"), py::arg("k") = py::none());

    py::class_<Tile>(m, "Tile")
        .def_readonly("source", &Tile::source)
        .def_readonly("rows", &Tile::rows)
        .def_readonly("cols", &Tile::cols)
        .def_readonly("palette_size", &Tile::palette_size)
        .def_readonly("cells", &Tile::cells)
        .def("at", &Tile::at, py::arg("row"), py::arg("col"))
        .def("__repr__", [](const Tile& t) {
            return "<Tile " + t.source + " " + std::to_string(t.rows) + "x" + std::to_string(t.cols) + ">";
        });

    m.def("tile_catalog", &tile_catalog);
    m.def(
        "find_tile",
        [](const std::string& source) -> std::optional<Tile> {
            const Tile* t = find_tile(source);
            return t ? std::optional<Tile>(*t) : std::nullopt;
        },
        py::arg("source"));

    py::class_<Construction>(m, "Construction")
        .def_property_readonly("m", [](const Construction& c) { return c.plan.m; })
        .def_property_readonly("n", [](const Construction& c) { return c.plan.n; })
        .def_property_readonly("k", [](const Construction& c) { return c.coloring.palette_size(); })
        .def_property_readonly("colors", [](const Construction& c) { return to_vector(c.coloring); })
        .def_property_readonly("strategy", [](const Construction& c) { return std::string(to_string(c.plan.strategy)); })
        .def_property_readonly("trace", [](const Construction& c) { return c.plan.trace; })
        .def("to_json", [](const Construction& c) { return to_json(ColoringDocument::from(c)); })
        .def("__repr__", [](const Construction& c) {
            return "<Construction " + std::to_string(c.plan.m) + "x" + std::to_string(c.plan.n) +
                   " k=" + std::to_string(c.coloring.palette_size()) + " plan=" + c.plan.summary() + ">";
        });

    m.def(
        "construct",
        [](int rows, int cols, std::uint64_t fallback_budget, bool use_derived_tiles) {
            ComposerOptions opts;
            opts.fallback_budget = fallback_budget;
            opts.use_derived_tiles = use_derived_tiles;
            py::gil_scoped_release release;
            return construct(rows, cols, opts);
        },
        py::arg("m"), py::arg("n"), py::arg("fallback_budget") = kDefaultFallbackBudget,
        py::arg("use_derived_tiles") = true);

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_property_readonly("status", [](const SearchOutcome& o) { return std::string(to_string(o.status)); })
        .def_property_readonly("witness",
                               [](const SearchOutcome& o) -> std::optional<std::vector<Color>> {
                                   if (!o.witness) {
                                       return std::nullopt;
                                   }
                                   return to_vector(*o.witness);
                               })
        .def_readonly("nodes_explored", &SearchOutcome::nodes_explored)
        .def_property_readonly("elapsed_seconds",
                               [](const SearchOutcome& o) { return std::chrono::duration<double>(o.elapsed).count(); })
        .def("__repr__", [](const SearchOutcome& o) {
            return std::string("<SearchOutcome ") + to_string(o.status) + " nodes=" +
                   std::to_string(o.nodes_explored) + ">";
        });

    m.def(
        "exists_star_coloring",
        [](const Graph& g, int k, const std::string& vertex_order, bool symmetry_breaking,
           std::optional<std::uint64_t> node_budget, std::optional<unsigned> threads) {
            SolverConfig cfg;
            cfg.k = k;
            cfg.vertex_order = parse_order(vertex_order);
            cfg.symmetry_breaking = symmetry_breaking;
            cfg.node_budget = node_budget;
            cfg.thread_hint = threads;
            py::gil_scoped_release release;
            return exists_star_coloring(g, cfg);
        },
        py::arg("graph"), py::arg("k"), py::arg("vertex_order") = "row_major",
        py::arg("symmetry_breaking") = true, py::arg("node_budget") = py::none(),
        py::arg("threads") = py::none());

    m.def(
        "star_chromatic_number",
        [](const Graph& g, int kmax) {
            py::gil_scoped_release release;
            return star_chromatic_number(g, kmax);
        },
        py::arg("graph"), py::arg("kmax"));

    m.def("sylvester_decompose", &sylvester_decompose, py::arg("t"), py::arg("r"), py::arg("s"));
    m.def(
        "multi_decompose",
        [](int t, const std::set<int>& sizes) -> std::optional<std::vector<int>> {
            auto d = multi_decompose(t, sizes);
            if (!d) {
                return std::nullopt;
            }
            return d->blocks();
        },
        py::arg("t"), py::arg("sizes"));

    m.def(
        "render_svg",
        [](int rows, int cols, const std::vector<Color>& colors) { return render_svg(rows, cols, colors); },
        py::arg("m"), py::arg("n"), py::arg("colors"));
}
