#include "startorus/verify.hpp"

#include <sstream>

#include "startorus/error.hpp"

namespace startorus {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::valid:
        return "valid";
    case Verdict::improper:
        return "improper";
    case Verdict::bicolored_p4:
        return "bicolored_p4";
    }
    return "unknown";
}

std::string VerifyReport::describe() const {
    std::ostringstream out;
    out << to_string(verdict);
    if (const auto* e = std::get_if<Edge>(&witness)) {
        out << " edge=(" << e->first << "," << e->second << ")";
    } else if (const auto* p = std::get_if<Path4>(&witness)) {
        out << " path=(" << (*p)[0] << "," << (*p)[1] << "," << (*p)[2] << "," << (*p)[3] << ")";
    }
    out << " colors_used=" << colors_used;
    return out.str();
}

std::optional<Edge> check_proper(const Graph& g, const Coloring& c) {
    require_shape(g, c);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v > u && c[u] == c[v]) {
                return Edge{u, v};
            }
        }
    }
    return std::nullopt;
}

std::optional<Path4> find_bicolored_p4(const Graph& g, const Coloring& c) {
    require_shape(g, c);
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
        const Color cb = c[b];
        for (Vertex mid : g.neighbors(b)) {
            const Color cc = c[mid];
            if (cc == cb) {
                continue;
            }
            for (Vertex a : g.neighbors(b)) {
                if (a == mid || c[a] != cc) {
                    continue;
                }
                for (Vertex d : g.neighbors(mid)) {
                    if (d == b || d == a || c[d] != cb) {
                        continue;
                    }
                    return Path4{a, b, mid, d};
                }
            }
        }
    }
    return std::nullopt;
}

VerifyReport verify_star(const Graph& g, const Coloring& c) {
    VerifyReport report;
    report.colors_used = c.colors_used();
    if (auto bad = check_proper(g, c)) {
        report.verdict = Verdict::improper;
        report.witness = *bad;
        return report;
    }
    if (auto path = find_bicolored_p4(g, c)) {
        report.verdict = Verdict::bicolored_p4;
        report.witness = *path;
    }
    return report;
}

std::vector<Path4> enumerate_p4_bruteforce(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 64) {
        throw DomainError("brute-force P4 enumeration limited to 64 vertices, got " +
                          std::to_string(n));
    }
    std::vector<Path4> out;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b)) {
                continue;
            }
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || !g.adjacent(b, c)) {
                    continue;
                }
                for (Vertex d = a + 1; d < n; ++d) {
                    if (d == b || d == c || !g.adjacent(c, d)) {
                        continue;
                    }
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    return out;
}

} // namespace startorus
