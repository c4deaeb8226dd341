#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "startorus/compose.hpp"
#include "startorus/dimacs.hpp"
#include "startorus/error.hpp"
#include "startorus/io.hpp"
#include "startorus/render.hpp"
#include "startorus/solver.hpp"
#include "startorus/tiles.hpp"
#include "startorus/verify.hpp"

namespace startorus::cli {

namespace {

/// Bad invocation or unusable input file; maps to kUsage.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
    file << text;
}

struct GraphOptions {
    std::string graph_path;
    std::vector<int> torus;

    void attach(CLI::App* cmd) {
        auto* graph = cmd->add_option("--graph", graph_path, "DIMACS graph file");
        auto* dims = cmd->add_option("--torus", torus, "Torus dimensions M N")->expected(2);
        graph->excludes(dims);
    }

    bool is_torus() const { return !torus.empty(); }
    bool given() const { return !graph_path.empty() || is_torus(); }

    Graph load() const {
        if (is_torus()) {
            return make_torus(torus[0], torus[1]);
        }
        if (!graph_path.empty()) {
            std::ifstream in(graph_path);
            if (!in) {
                throw UsageError("cannot open '" + graph_path + "'");
            }
            return parse_dimacs(in);
        }
        throw UsageError("one of --graph or --torus is required");
    }
};

std::optional<unsigned> threads_from_env() {
    if (const char* env = std::getenv("STAR_TORUS_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

int cmd_construct(int m, int n, const std::string& out_path, const std::string& format,
                  std::uint64_t budget, std::ostream& out, std::ostream& err) {
    ComposerOptions options;
    options.fallback_budget = budget;
    const auto construction = construct(m, n, options);

    std::string text;
    if (format == "json") {
        text = to_json(ColoringDocument::from(construction));
    } else {
        std::ostringstream col;
        write_dimacs_col(col, construction.coloring);
        text = col.str();
    }
    write_output(out_path, text, out);

    std::ostream& summary = out_path.empty() ? err : out;
    summary << m << ' ' << n << ' ' << construction.coloring.palette_size() << " verified plan="
            << construction.plan.summary() << '\n';
    return kOk;
}

int cmd_verify(const GraphOptions& graph_opts, const std::string& coloring_path, std::ostream& out) {
    const auto doc = parse_coloring_json(read_file(coloring_path));
    Graph g;
    if (graph_opts.given()) {
        if (graph_opts.is_torus() && doc.is_torus() &&
            (graph_opts.torus[0] != *doc.m || graph_opts.torus[1] != *doc.n)) {
            throw UsageError("coloring is for a " + std::to_string(*doc.m) + "x" +
                             std::to_string(*doc.n) + " torus");
        }
        g = graph_opts.load();
    } else if (doc.is_torus()) {
        g = make_torus(*doc.m, *doc.n);
    } else {
        throw UsageError("one of --graph or --torus is required for a non-torus coloring");
    }
    const Coloring coloring(g, doc.k, doc.colors);
    const auto report = verify_star(g, coloring);
    out << report.describe() << '\n';
    return report.valid() ? kOk : kNegative;
}

int cmd_chi(const GraphOptions& graph_opts, int kmax, std::optional<std::uint64_t> budget,
            std::optional<unsigned> threads, const std::string& order, const std::string& witness_path,
            std::ostream& out, std::ostream& err) {
    const Graph g = graph_opts.load();
    SolverConfig cfg;
    cfg.node_budget = budget;
    cfg.thread_hint = threads ? threads : threads_from_env();
    if (order.empty()) {
        cfg.vertex_order = graph_opts.is_torus() ? VertexOrder::row_major : VertexOrder::degree_descending;
    } else {
        cfg.vertex_order = order == "row_major" ? VertexOrder::row_major : VertexOrder::degree_descending;
    }

    const auto result = chromatic_search(g, kmax, cfg);
    if (result.chi) {
        out << *result.chi << '\n';
        if (!witness_path.empty()) {
            ColoringDocument doc;
            if (graph_opts.is_torus()) {
                doc.m = graph_opts.torus[0];
                doc.n = graph_opts.torus[1];
            }
            doc.k = *result.chi;
            doc.colors.assign(result.witness->colors().begin(), result.witness->colors().end());
            write_output(witness_path, to_json(doc), out);
            out << "witness: " << witness_path << '\n';
        }
        return kOk;
    }
    if (result.last_status == SearchStatus::budget_exhausted) {
        err << "budget exhausted at k=" << result.k_reached << " after " << result.nodes_explored
            << " nodes\n";
        out << "partial: no star coloring with k <= " << result.k_reached - 1
            << "; k=" << result.k_reached << " undecided\n";
        return kInternal;
    }
    out << "UNSAT up to " << kmax << '\n';
    return kNegative;
}

int cmd_render(const std::string& coloring_path, const std::string& out_path, std::ostream& out) {
    const auto doc = parse_coloring_json(read_file(coloring_path));
    if (!doc.is_torus()) {
        throw UsageError("render needs a torus coloring with m and n");
    }
    write_output(out_path, render_svg(*doc.m, *doc.n, doc.colors), out);
    return kOk;
}

int cmd_tiles_list(std::ostream& out) {
    for (const auto& tile : tile_catalog()) {
        out << tile.source << ' ' << tile.rows << ' ' << tile.cols << ' ' << tile.palette_size << '\n';
    }
    return kOk;
}

int cmd_tiles_dump(const std::string& source, const std::string& out_path, std::ostream& out) {
    const Tile* tile = find_tile(source);
    if (!tile) {
        throw UsageError("unknown tile '" + source + "' (see 'tiles list')");
    }
    write_output(out_path, to_json(ColoringDocument::from(*tile)), out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star colorings of torus grids C_m x C_n", "startorus"};
    app.require_subcommand(1);

    int m = 0;
    int n = 0;
    std::string out_path;
    std::string format = "json";
    std::uint64_t fallback_budget = kDefaultFallbackBudget;
    auto* construct_cmd = app.add_subcommand("construct", "Build and verify a star coloring of C_m x C_n");
    construct_cmd->add_option("m", m, "Rows (cycle length)")->required();
    construct_cmd->add_option("n", n, "Columns (cycle length)")->required();
    construct_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    construct_cmd->add_option("--format", format, "json or dimacs-col")
        ->check(CLI::IsMember({"json", "dimacs-col"}));
    construct_cmd->add_option("--budget", fallback_budget, "Node budget for the search fallback");

    GraphOptions verify_graph;
    std::string coloring_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file for star validity");
    verify_graph.attach(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_path, "Coloring JSON")->required();

    GraphOptions chi_graph;
    int kmax = 0;
    std::optional<std::uint64_t> chi_budget;
    std::optional<unsigned> threads;
    std::string order;
    std::string witness_path;
    auto* chi_cmd = app.add_subcommand("chi", "Exact star chromatic number by exhaustive search");
    chi_graph.attach(chi_cmd);
    chi_cmd->add_option("--kmax", kmax, "Largest palette to try")->required()->check(CLI::PositiveNumber);
    chi_cmd->add_option("--budget", chi_budget, "Node budget per palette size");
    chi_cmd->add_option("--threads", threads, "Worker threads (default: $STAR_TORUS_THREADS or 1)");
    chi_cmd->add_option("--order", order, "Vertex order")
        ->check(CLI::IsMember({"row_major", "degree_descending"}));
    chi_cmd->add_option("--witness-out", witness_path, "Write the optimal coloring as JSON");

    std::string render_input;
    std::string render_out;
    auto* render_cmd = app.add_subcommand("render", "Draw a torus coloring as SVG");
    render_cmd->add_option("--coloring", render_input, "Coloring JSON with m and n")->required();
    render_cmd->add_option("--out", render_out, "SVG file (stdout when omitted)");

    auto* tiles_cmd = app.add_subcommand("tiles", "Inspect the tile catalog");
    tiles_cmd->require_subcommand(1);
    auto* list_cmd = tiles_cmd->add_subcommand("list", "Print source, rows, columns, palette");
    std::string dump_source;
    std::string dump_out;
    std::string dump_format = "json";
    auto* dump_cmd = tiles_cmd->add_subcommand("dump", "Write one tile as coloring JSON");
    dump_cmd->add_option("source", dump_source, "Catalog key, e.g. Fig2(i)")->required();
    dump_cmd->add_option("--format", dump_format, "Output format")->check(CLI::IsMember({"json"}));
    dump_cmd->add_option("--out", dump_out, "Output file (stdout when omitted)");

    std::vector<std::string> owned(args);
    if (owned.empty()) {
        owned.emplace_back("startorus");
    }
    std::vector<char*> argv;
    for (auto& a : owned) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*construct_cmd) {
            if (m < 3 || n < 3) {
                throw UsageError("construct requires m, n >= 3");
            }
            return cmd_construct(m, n, out_path, format, fallback_budget, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_graph, coloring_path, out);
        }
        if (*chi_cmd) {
            return cmd_chi(chi_graph, kmax, chi_budget, threads, order, witness_path, out, err);
        }
        if (*render_cmd) {
            return cmd_render(render_input, render_out, out);
        }
        if (*list_cmd) {
            return cmd_tiles_list(out);
        }
        if (*dump_cmd) {
            return cmd_tiles_dump(dump_source, dump_out, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace startorus::cli
