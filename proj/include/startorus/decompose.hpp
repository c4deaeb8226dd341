#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace startorus {

/// t = sum of block_size * count over `parts`; counts are non-negative.
struct Decomposition {
    int target = 0;
    /// (block_size, count), block sizes in descending order.
    std::vector<std::pair<int, int>> parts;

    int count_of(int block_size) const;
    /// Block sizes with multiplicity, largest first.
    std::vector<int> blocks() const;
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Non-negative (alpha, beta) with alpha * r + beta * s = t, maximizing alpha.
/// Always present for coprime r, s and t >= (r - 1)(s - 1).
/// Throws DomainError when r or s is below 2.
std::optional<std::pair<int, int>> sylvester_decompose(int t, int r, int s);

/// Expresses t over `sizes`, choosing the lexicographically largest count
/// vector when sizes are taken in descending order. Throws DomainError if
/// `sizes` is empty or holds a size below 3.
std::optional<Decomposition> multi_decompose(int t, const std::set<int>& sizes);

} // namespace startorus
