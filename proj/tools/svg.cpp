#include "cli.hpp"

#include <set>
#include <sstream>

namespace hitchin::cli {

namespace {

constexpr int kScale = 32;
constexpr int kMargin = 48;

}  // namespace

std::string newton_svg(const NewtonPolygon& polygon) {
    const int D = polygon.degree();
    const int amax = polygon.parts() + 1;
    const int width = 2 * kMargin + amax * kScale;
    const int height = 2 * kMargin + D * kScale;
    auto px = [](int alpha) { return kMargin + alpha * kScale; };
    auto py = [D](int beta) { return kMargin + (D - beta) * kScale; };

    const auto edges = polygon.edges();
    std::set<std::pair<int, int>> relevant;
    for (const auto& e : polygon.even_edges()) {
        relevant.insert(e.pairs.begin(), e.pairs.end());
    }

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>Newton polygon, delta = " << to_string(polygon.delta()) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // admissible region: right of the boundary
    s << "<path class=\"region\" fill=\"#d6e6f5\" stroke=\"none\" d=\"M " << px(0) << ' ' << py(D);
    for (const auto& e : edges) {
        s << " L " << px(e.pairs.back().first) << ' ' << py(e.pairs.back().second);
    }
    s << " L " << px(amax) << ' ' << py(0) << " L " << px(amax) << ' ' << py(D) << " Z\"/>\n";

    s << "<g class=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (int a = 0; a <= amax; ++a) {
        s << "<line x1=\"" << px(a) << "\" y1=\"" << py(D) << "\" x2=\"" << px(a) << "\" y2=\"" << py(0) << "\"/>\n";
    }
    for (int b = 0; b <= D; ++b) {
        s << "<line x1=\"" << px(0) << "\" y1=\"" << py(b) << "\" x2=\"" << px(amax) << "\" y2=\"" << py(b) << "\"/>\n";
    }
    s << "</g>\n";

    for (const auto& e : edges) {
        const bool even = e.slope % 2 == 0;
        s << "<line class=\"edge\" data-slope=\"" << e.slope << "\" x1=\"" << px(e.pairs.front().first) << "\" y1=\""
          << py(e.pairs.front().second) << "\" x2=\"" << px(e.pairs.back().first) << "\" y2=\""
          << py(e.pairs.back().second) << "\" stroke=\"" << (even ? "#c0392b" : "black") << "\" stroke-width=\""
          << (even ? 3 : 2) << "\"/>\n";
    }

    for (int b = 0; b <= D; ++b) {
        for (int a = 0; a <= amax; ++a) {
            const bool ok = polygon.allows(a, b);
            s << "<circle class=\"" << (ok ? "admissible" : "excluded") << "\" data-alpha=\"" << a
              << "\" data-beta=\"" << b << "\" cx=\"" << px(a) << "\" cy=\"" << py(b) << "\" r=\"4\" fill=\""
              << (ok ? "#1f5f99" : "white") << "\" stroke=\"#1f5f99\"/>\n";
            if (relevant.count({a, b}) != 0) {
                s << "<circle class=\"relevant\" cx=\"" << px(a) << "\" cy=\"" << py(b)
                  << "\" r=\"8\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
            }
        }
    }

    s << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int a = 0; a <= amax; ++a) {
        s << "<text x=\"" << px(a) << "\" y=\"" << py(0) + 20 << "\">" << a << "</text>\n";
    }
    for (int b = 0; b <= D; ++b) {
        s << "<text x=\"" << px(0) - 20 << "\" y=\"" << py(b) + 4 << "\">" << b << "</text>\n";
    }
    s << "<text x=\"" << width / 2 << "\" y=\"" << height - 8 << "\">alpha (power of t)</text>\n"
      << "<text x=\"14\" y=\"" << height / 2 << "\" transform=\"rotate(-90 14 " << height / 2
      << ")\">beta (power of lambda)</text>\n"
      << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace hitchin::cli
