#include "startorus/decompose.hpp"

#include <functional>

#include "startorus/error.hpp"

namespace startorus {

int Decomposition::count_of(int block_size) const {
    for (const auto& [size, count] : parts) {
        if (size == block_size) {
            return count;
        }
    }
    return 0;
}

std::vector<int> Decomposition::blocks() const {
    std::vector<int> out;
    for (const auto& [size, count] : parts) {
        out.insert(out.end(), count, size);
    }
    return out;
}

std::string Decomposition::to_string() const {
    std::string out = std::to_string(target) + " =";
    bool first = true;
    for (const auto& [size, count] : parts) {
        if (count == 0) {
            continue;
        }
        out += first ? " " : " + ";
        out += std::to_string(count) + "x" + std::to_string(size);
        first = false;
    }
    if (first) {
        out += " 0";
    }
    return out;
}

std::optional<std::pair<int, int>> sylvester_decompose(int t, int r, int s) {
    if (r < 2 || s < 2) {
        throw DomainError("block sizes must be >= 2, got " + std::to_string(r) + " and " +
                          std::to_string(s));
    }
    if (t < 0) {
        return std::nullopt;
    }
    for (int alpha = t / r; alpha >= 0; --alpha) {
        const int rest = t - alpha * r;
        if (rest % s == 0) {
            return std::pair{alpha, rest / s};
        }
    }
    return std::nullopt;
}

std::optional<Decomposition> multi_decompose(int t, const std::set<int>& sizes) {
    if (sizes.empty()) {
        throw DomainError("multi_decompose needs at least one block size");
    }
    if (*sizes.begin() < 3) {
        throw DomainError("block sizes must be >= 3, got " + std::to_string(*sizes.begin()));
    }
    if (t < 0) {
        return std::nullopt;
    }
    const std::vector<int> desc(sizes.rbegin(), sizes.rend());
    std::vector<int> counts(desc.size(), 0);

    // Largest count of the largest block first, so the first hit is lexicographically maximal.
    std::function<bool(std::size_t, int)> fill = [&](std::size_t i, int rest) {
        if (i == desc.size()) {
            return rest == 0;
        }
        for (int c = rest / desc[i]; c >= 0; --c) {
            counts[i] = c;
            if (fill(i + 1, rest - c * desc[i])) {
                return true;
            }
        }
        return false;
    };
    if (!fill(0, t)) {
        return std::nullopt;
    }
    Decomposition d{t, {}};
    for (std::size_t i = 0; i < desc.size(); ++i) {
        d.parts.emplace_back(desc[i], counts[i]);
    }
    return d;
}

} // namespace startorus
