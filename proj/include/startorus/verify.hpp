#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "startorus/coloring.hpp"
#include "startorus/graph.hpp"

namespace startorus {

/// Four distinct vertices a-b-c-d joined by the edges ab, bc, cd.
using Path4 = std::array<Vertex, 4>;

enum class Verdict { valid, improper, bicolored_p4 };

std::string to_string(Verdict v);

struct VerifyReport {
    Verdict verdict = Verdict::valid;
    /// Empty when valid; an Edge when improper; a Path4 when a bicolored P4 exists.
    std::variant<std::monostate, Edge, Path4> witness;
    int colors_used = 0;

    bool valid() const noexcept { return verdict == Verdict::valid; }
    std::string describe() const;
};

/// Lexicographically smallest monochromatic edge (u < v), if any.
std::optional<Edge> check_proper(const Graph& g, const Coloring& c);

/// Finds a path a-b-c-d on distinct vertices with color(a) = color(c) != color(b) = color(d).
///
/// Scans middle edges (b, c) in lexicographic order of the ordered pair, then
/// a over N(b), then d over N(c); the first hit is returned as (a, b, c, d).
/// Cost is the sum over ordered edges of deg(b) * deg(c).
std::optional<Path4> find_bicolored_p4(const Graph& g, const Coloring& c);

/// Properness is checked first; an improper coloring never reports a P4 witness.
VerifyReport verify_star(const Graph& g, const Coloring& c);

/// Every path on four distinct vertices, once per reversal class (first
/// endpoint < last endpoint). Independent of find_bicolored_p4; used as its
/// oracle. Throws DomainError for graphs with more than 64 vertices.
std::vector<Path4> enumerate_p4_bruteforce(const Graph& g);

inline bool is_bicolored(const Path4& p, std::span<const Color> colors) {
    return colors[p[0]] == colors[p[2]] && colors[p[1]] == colors[p[3]] &&
           colors[p[0]] != colors[p[1]];
}

} // namespace startorus
