#include "startorus/dimacs.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "startorus/error.hpp"

namespace startorus {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    bool have_header = false;
    long long declared_vertices = 0;
    std::vector<Edge> edges;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "c") {
            continue;
        }
        if (tag == "p") {
            if (have_header) {
                throw ParseError("duplicate 'p' line", lineno);
            }
            std::string format;
            long long e = 0;
            if (!(fields >> format >> declared_vertices >> e) || (format != "edge" && format != "col")) {
                throw ParseError("expected 'p edge <vertices> <edges>'", lineno);
            }
            if (declared_vertices < 0 || e < 0 ||
                declared_vertices > std::numeric_limits<Vertex>::max()) {
                throw ParseError("negative or oversized counts in 'p' line", lineno);
            }
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) {
                throw ParseError("edge before 'p' line", lineno);
            }
            long long u = 0;
            long long v = 0;
            if (!(fields >> u >> v)) {
                throw ParseError("expected 'e <u> <v>'", lineno);
            }
            if (u < 1 || v < 1 || u > declared_vertices || v > declared_vertices) {
                throw ParseError("vertex id out of range [1, " + std::to_string(declared_vertices) + "]",
                                 lineno);
            }
            if (u == v) {
                throw ParseError("self-loop on vertex " + std::to_string(u), lineno);
            }
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw ParseError("unknown line type '" + tag + "'", lineno);
    }
    if (!have_header) {
        throw ParseError("missing 'p' line", 0);
    }
    return Graph::from_edges(static_cast<std::size_t>(declared_vertices), edges);
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

} // namespace startorus
