#include "walks/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace walks {

namespace {

constexpr int unit = 24;

struct Box {
    long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

Box bounds(const std::vector<LatticePoint>& pts) {
    Box b;
    for (const auto& q : pts) {
        b.x0 = std::min(b.x0, q.x);
        b.x1 = std::max(b.x1, q.x);
        b.y0 = std::min(b.y0, q.y);
        b.y1 = std::max(b.y1, q.y);
    }
    return b;
}

}  // namespace

std::string render_svg(const Word& w) {
    const auto pts = prefix_path(w);
    Box b = bounds(pts);
    b.x1 += 1;  // leave a spare cell so the last arrow head stays inside
    b.y1 += 1;
    const long width = (b.x1 - b.x0 + 2) * unit, height = (b.y1 - b.y0 + 2) * unit;
    auto X = [&](long x) { return (x - b.x0 + 1) * unit; };
    auto Y = [&](long y) { return (b.y1 - y + 1) * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
          "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e9c\"/></marker></defs>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
    for (long x = b.x0; x <= b.x1; ++x)
        os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(b.y0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(b.y1) << "\"/>\n";
    for (long y = b.y0; y <= b.y1; ++y)
        os << "<line x1=\"" << X(b.x0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(b.x1) << "\" y2=\"" << Y(y) << "\"/>\n";
    os << "</g>\n";
    os << "<g stroke=\"#606060\" stroke-width=\"1.5\">\n";
    os << "<line x1=\"" << X(b.x0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(b.x1) << "\" y2=\"" << Y(0) << "\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(b.y0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(b.y1) << "\"/>\n";
    os << "</g>\n";
    os << "<g stroke=\"#1f4e9c\" stroke-width=\"2\" marker-end=\"url(#arrow)\">\n";
    for (std::size_t k = 1; k < pts.size(); ++k)
        os << "<line x1=\"" << X(pts[k - 1].x) << "\" y1=\"" << Y(pts[k - 1].y) << "\" x2=\"" << X(pts[k].x)
           << "\" y2=\"" << Y(pts[k].y) << "\"/>\n";
    os << "</g>\n";
    os << "<circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"5\" fill=\"#c0392b\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const Word& w) {
    const auto pts = prefix_path(w);
    const Box b = bounds(pts);
    // Lattice point (x, y) sits at column 2(x - x0), row 2(y1 - y).
    const long cols = 2 * (b.x1 - b.x0) + 1, rows = 2 * (b.y1 - b.y0) + 1;
    std::vector<std::string> g(rows, std::string(cols, ' '));
    for (long r = 0; r < rows; r += 2)
        for (long c = 0; c < cols; c += 2) g[r][c] = '.';
    auto col = [&](long x) { return 2 * (x - b.x0); };
    auto row = [&](long y) { return 2 * (b.y1 - y); };
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const long dx = pts[k].x - pts[k - 1].x, dy = pts[k].y - pts[k - 1].y;
        if (std::labs(dx) > 1 || std::labs(dy) > 1) continue;
        const long c = col(pts[k - 1].x) + dx, r = row(pts[k - 1].y) - dy;
        g[r][c] = dy == 0 ? '-' : dx == 0 ? '|' : (dx == dy ? '/' : '\\');
    }
    for (const auto& q : pts) g[row(q.y)][col(q.x)] = 'o';
    g[row(pts.back().y)][col(pts.back().x)] = 'E';
    g[row(0)][col(0)] = 'S';
    std::string out;
    for (auto& line : g) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace walks
