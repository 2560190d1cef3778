#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

// Static SVG 1.1 rendering: visibility edges as lines, points as circles
// filled by colour class (grey when no colouring is given).
inline void write_svg(std::ostream& out, const PointSet& ps, const VisibilityGraph* g = nullptr,
                      const Colouring* colouring = nullptr, double size = 640.0) {
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    const int n = ps.size();
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    for (int i = 0; i < n; ++i) {
        double x = ps[i].x.get_d(), y = ps[i].y.get_d();
        if (i == 0) minx = maxx = x, miny = maxy = y;
        minx = std::min(minx, x), maxx = std::max(maxx, x);
        miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    double margin = 0.05 * size, scale = (size - 2 * margin) / span;
    auto sx = [&](int i) { return margin + (ps[i].x.get_d() - minx) * scale; };
    auto sy = [&](int i) { return size - margin - (ps[i].y.get_d() - miny) * scale; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    if (g)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g->adjacent(i, j))
                    out << "  <line x1=\"" << sx(i) << "\" y1=\"" << sy(i) << "\" x2=\"" << sx(j)
                        << "\" y2=\"" << sy(j) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.6\"/>\n";
    for (int i = 0; i < n; ++i) {
        const char* fill = "#555555";
        if (colouring && i < static_cast<int>(colouring->size()))
            fill = palette[(*colouring)[i] % 8];
        out << "  <circle cx=\"" << sx(i) << "\" cy=\"" << sy(i) << "\" r=\"3.5\" fill=\"" << fill
            << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace pvg
