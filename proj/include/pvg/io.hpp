#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pvg/errors.hpp"
#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

// Point-set format: one "X Y" per line, X and Y integers or num/den rationals;
// blank lines and lines starting with '#' ignored. Vertex index = data-line order.
inline PointSet read_point_set(std::istream& in) {
    PointSet ps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream row(line);
        std::string xs, ys, extra;
        if (!(row >> xs >> ys) || (row >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'X Y'");
        auto x = parse_rational(xs), y = parse_rational(ys);
        if (!x || !y)
            throw ParseError("line " + std::to_string(lineno) + ": bad rational");
        ps.points.push_back(Point{*x, *y});
    }
    ps.require_distinct();
    return ps;
}

inline void write_point_set(std::ostream& out, const PointSet& ps) {
    for (const Point& p : ps.points) out << to_string(p.x) << " " << to_string(p.y) << "\n";
}

// Graph format: "n m" header, then one "i j" per edge with i < j.
inline void write_graph(std::ostream& out, const VisibilityGraph& g) {
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = i + 1; j < g.num_vertices(); ++j)
            if (g.adjacent(i, j)) out << i << " " << j << "\n";
}

inline VisibilityGraph read_graph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("bad graph header");
    VisibilityGraph g(n);
    for (int e = 0; e < m; ++e) {
        int i, j;
        if (!(in >> i >> j)) throw ParseError("truncated edge list");
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
            throw ParseError("bad edge " + std::to_string(i) + " " + std::to_string(j));
        g.add_edge(i, j);
    }
    return g;
}

// Colouring format: one "vertex colour" per line.
inline void write_colouring(std::ostream& out, const Colouring& c) {
    for (size_t v = 0; v < c.size(); ++v) out << v << " " << c[v] << "\n";
}

inline Colouring read_colouring(std::istream& in, int n) {
    Colouring c(n, -1);
    int v, col;
    while (in >> v >> col) {
        if (v < 0 || v >= n || col < 0) throw ParseError("bad colouring line");
        c[v] = col;
    }
    for (int i = 0; i < n; ++i)
        if (c[i] < 0) throw ParseError("vertex " + std::to_string(i) + " uncoloured");
    return c;
}

}  // namespace pvg
