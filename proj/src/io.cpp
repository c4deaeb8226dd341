#include "startorus/io.hpp"

#include <ostream>

#include <json.hpp>

#include "startorus/compose.hpp"
#include "startorus/error.hpp"
#include "startorus/tiles.hpp"

namespace startorus {

namespace {

std::optional<int> optional_dimension(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return std::nullopt;
    }
    const auto& value = doc.at(key);
    if (!value.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer or null", 0);
    }
    return value.get<int>();
}

} // namespace

ColoringDocument ColoringDocument::from(const Tile& tile) {
    return ColoringDocument{tile.rows, tile.cols, tile.palette_size, tile.cells, tile.source, {}};
}

ColoringDocument ColoringDocument::from(const Construction& construction) {
    const auto colors = construction.coloring.colors();
    return ColoringDocument{construction.plan.m,
                            construction.plan.n,
                            construction.coloring.palette_size(),
                            {colors.begin(), colors.end()},
                            std::nullopt,
                            construction.plan.trace};
}

ColoringDocument parse_coloring_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!doc.is_object()) {
        throw ParseError("coloring document must be a JSON object", 0);
    }

    ColoringDocument out;
    out.m = optional_dimension(doc, "m");
    out.n = optional_dimension(doc, "n");
    if (out.m.has_value() != out.n.has_value()) {
        throw ParseError("'m' and 'n' must both be present or both be null", 0);
    }
    if (!doc.contains("k") || !doc.at("k").is_number_integer()) {
        throw ParseError("field 'k' must be an integer", 0);
    }
    out.k = doc.at("k").get<int>();
    if (out.k < 1) {
        throw ParseError("field 'k' must be >= 1", 0);
    }
    if (!doc.contains("colors") || !doc.at("colors").is_array()) {
        throw ParseError("field 'colors' must be an array", 0);
    }
    for (const auto& value : doc.at("colors")) {
        if (!value.is_number_integer()) {
            throw ParseError("'colors' entries must be integers", 0);
        }
        out.colors.push_back(value.get<int>());
    }
    if (out.is_torus()) {
        if (*out.m < 1 || *out.n < 1 ||
            out.colors.size() != static_cast<std::size_t>(*out.m) * static_cast<std::size_t>(*out.n)) {
            throw ParseError("'colors' length " + std::to_string(out.colors.size()) +
                                 " does not match m * n",
                             0);
        }
    }
    if (doc.contains("source") && doc.at("source").is_string()) {
        out.source = doc.at("source").get<std::string>();
    }
    if (doc.contains("plan") && doc.at("plan").is_array()) {
        for (const auto& step : doc.at("plan")) {
            if (!step.is_string()) {
                throw ParseError("'plan' entries must be strings", 0);
            }
            out.plan.push_back(step.get<std::string>());
        }
    }
    return out;
}

std::string to_json(const ColoringDocument& doc) {
    nlohmann::ordered_json out;
    out["m"] = doc.m ? nlohmann::ordered_json(*doc.m) : nlohmann::ordered_json(nullptr);
    out["n"] = doc.n ? nlohmann::ordered_json(*doc.n) : nlohmann::ordered_json(nullptr);
    out["k"] = doc.k;
    out["colors"] = doc.colors;
    if (doc.source) {
        out["source"] = *doc.source;
    }
    if (!doc.plan.empty()) {
        out["plan"] = doc.plan;
    }
    return out.dump() + "\n";
}

void write_dimacs_col(std::ostream& out, const Coloring& c) {
    out << "s " << c.palette_size() << '\n';
    for (std::size_t v = 0; v < c.size(); ++v) {
        out << "v " << v + 1 << ' ' << c[static_cast<Vertex>(v)] << '\n';
    }
}

} // namespace startorus
