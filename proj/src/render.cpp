#include "startorus/render.hpp"

#include <sstream>

#include "startorus/error.hpp"

namespace startorus {

namespace {

constexpr int kPitch = 48;
constexpr int kMargin = 36;
constexpr int kRadius = 14;
// Bow of a wraparound arc; stays inside the gap between neighboring rows/columns.
constexpr int kBow = 20;

} // namespace

std::string render_svg(int m, int n, std::span<const Color> colors) {
    if (m < 1 || n < 1 || colors.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n)) {
        throw DomainError("render needs an m x n coloring");
    }
    for (Color c : colors) {
        if (c < 1 || c > static_cast<Color>(kSvgPalette.size())) {
            throw DomainError("render supports color ids 1..6, got " + std::to_string(c));
        }
    }

    const int width = 2 * kMargin + (n - 1) * kPitch;
    const int height = 2 * kMargin + (m - 1) * kPitch;
    auto x = [](int col) { return kMargin + col * kPitch; };
    auto y = [m](int row) { return kMargin + (m - 1 - row) * kPitch; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    svg << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c + 1 < n; ++c) {
            svg << "<line x1=\"" << x(c) << "\" y1=\"" << y(r) << "\" x2=\"" << x(c + 1) << "\" y2=\""
                << y(r) << "\"/>\n";
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r + 1 < m; ++r) {
            svg << "<line x1=\"" << x(c) << "\" y1=\"" << y(r) << "\" x2=\"" << x(c) << "\" y2=\""
                << y(r + 1) << "\"/>\n";
        }
    }
    svg << "</g>\n";

    svg << "<g stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4 3\" fill=\"none\">\n";
    for (int r = 0; r < m; ++r) {
        svg << "<path d=\"M " << x(0) << ' ' << y(r) << " C " << x(0) - kMargin << ' ' << y(r) - kBow
            << ", " << x(n - 1) + kMargin << ' ' << y(r) - kBow << ", " << x(n - 1) << ' ' << y(r)
            << "\"/>\n";
    }
    for (int c = 0; c < n; ++c) {
        svg << "<path d=\"M " << x(c) << ' ' << y(0) << " C " << x(c) + kBow << ' ' << y(0) + kMargin
            << ", " << x(c) + kBow << ' ' << y(m - 1) - kMargin << ", " << x(c) << ' ' << y(m - 1)
            << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"13\" font-weight=\"bold\" text-anchor=\"middle\">\n";
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            const Color color = colors[static_cast<std::size_t>(r) * n + c];
            svg << "<circle cx=\"" << x(c) << "\" cy=\"" << y(r) << "\" r=\"" << kRadius << "\" fill=\""
                << kSvgPalette[color - 1] << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            svg << "<text x=\"" << x(c) << "\" y=\"" << y(r) + 5 << "\">" << color << "</text>\n";
        }
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace startorus
