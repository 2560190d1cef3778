#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pvg/errors.hpp"
#include "pvg/graph.hpp"
#include "pvg/rational.hpp"

namespace pvg {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct PointSet {
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[i]; }

    void require_distinct() const {
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw DuplicatePoints("points " + std::to_string(i) + " and " + std::to_string(j) +
                                          " coincide");
    }
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

inline int orientation_sign(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
    int s = orientation_sign(a, b, c);
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

// m strictly inside the open segment (a, b)?
inline bool strictly_between(const Point& a, const Point& m, const Point& b) {
    if (orientation_sign(a, m, b) != 0) return false;
    if (a.x != b.x) return (a.x < m.x && m.x < b.x) || (b.x < m.x && m.x < a.x);
    return (a.y < m.y && m.y < b.y) || (b.y < m.y && m.y < a.y);
}

inline bool visible(const PointSet& ps, int i, int j) {
    for (int k = 0; k < ps.size(); ++k)
        if (k != i && k != j && strictly_between(ps[i], ps[k], ps[j])) return false;
    return true;
}

namespace detail {

// Fast path for integer coordinates: all cross products fit in __int128 when
// coordinates fit in 62 bits; we require 30 bits for comfortable margins.
struct IntPoint {
    int64_t x;
    int64_t y;
};

inline std::optional<std::vector<IntPoint>> as_small_integers(const PointSet& ps) {
    std::vector<IntPoint> out;
    out.reserve(ps.points.size());
    for (const Point& p : ps.points) {
        if (p.x.get_den() != 1 || p.y.get_den() != 1) return std::nullopt;
        if (!p.x.get_num().fits_slong_p() || !p.y.get_num().fits_slong_p()) return std::nullopt;
        long nx = p.x.get_num().get_si(), ny = p.y.get_num().get_si();
        if (std::abs(nx) > (1L << 30) || std::abs(ny) > (1L << 30)) return std::nullopt;
        out.push_back({nx, ny});
    }
    return out;
}

inline bool strictly_between_int(const IntPoint& a, const IntPoint& m, const IntPoint& b) {
    __int128 cross = (__int128)(m.x - a.x) * (b.y - a.y) - (__int128)(m.y - a.y) * (b.x - a.x);
    if (cross != 0) return false;
    if (a.x != b.x) return (a.x < m.x && m.x < b.x) || (b.x < m.x && m.x < a.x);
    return (a.y < m.y && m.y < b.y) || (b.y < m.y && m.y < a.y);
}

inline VisibilityGraph build_pvg_int(const std::vector<IntPoint>& pts) {
    const int n = static_cast<int>(pts.size());
    VisibilityGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool vis = true;
            for (int k = 0; k < n && vis; ++k)
                if (k != i && k != j && strictly_between_int(pts[i], pts[k], pts[j])) vis = false;
            if (vis) g.add_edge(i, j);
        }
    return g;
}

}  // namespace detail

inline VisibilityGraph build_pvg(const PointSet& ps) {
    ps.require_distinct();
    if (auto ints = detail::as_small_integers(ps)) return detail::build_pvg_int(*ints);
    const int n = ps.size();
    VisibilityGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (visible(ps, i, j)) g.add_edge(i, j);
    return g;
}

struct ConvexHull {
    std::vector<int> hull_vertices;  // corners, clockwise
    std::vector<int> hull_points;    // all boundary points (corners included), sorted by index
};

// Monotone chain; corners only on the chains, then boundary points recovered
// by betweenness against hull edges.
inline ConvexHull convex_hull(const PointSet& ps) {
    const int n = ps.size();
    ConvexHull out;
    if (n == 0) return out;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
        return ps[a].y < ps[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return ps[a] == ps[b]; }),
              idx.end());
    if (idx.size() == 1) {
        out.hull_vertices = {idx[0]};
        out.hull_points = {idx[0]};
        return out;
    }

    auto build_chain = [&](bool upper) {
        std::vector<int> chain;
        for (int i : idx) {
            while (chain.size() >= 2) {
                int s = orientation_sign(ps[chain[chain.size() - 2]], ps[chain.back()], ps[i]);
                bool pop = upper ? s >= 0 : s <= 0;  // keep strict turns only
                if (!pop) break;
                chain.pop_back();
            }
            chain.push_back(i);
        }
        return chain;
    };

    std::vector<int> lower = build_chain(false);
    std::vector<int> upper = build_chain(true);

    // all collinear: chains are both just the two extremes
    if (lower.size() == 2 && upper.size() == 2 && lower[0] == upper[0] && lower[1] == upper[1]) {
        out.hull_vertices = {lower[0], lower[1]};
    } else {
        // clockwise: upper chain left-to-right, then lower chain right-to-left
        // with the shared extremes dropped
        out.hull_vertices = upper;
        for (size_t i = lower.size() - 1; i + 1 >= 2; --i) {
            size_t pos = i - 1;
            if (pos == 0) break;
            out.hull_vertices.push_back(lower[pos]);
        }
    }

    const auto& hv = out.hull_vertices;
    const size_t m = hv.size();
    for (int p = 0; p < n; ++p) {
        bool on_boundary = false;
        for (size_t e = 0; e < m && !on_boundary; ++e) {
            int a = hv[e], b = hv[(e + 1) % m];
            if (p == a || p == b || (m >= 2 && strictly_between(ps[a], ps[p], ps[b])))
                on_boundary = true;
        }
        if (on_boundary) out.hull_points.push_back(p);
    }
    return out;
}

struct Ray {
    std::vector<int> pts;  // by increasing distance from apex
    bool big() const { return pts.size() >= 2; }
};

struct RayFan {
    int apex = -1;
    std::vector<Ray> rays;      // clockwise angular order, tangent first
    std::vector<int> frontier;  // first point of each ray

    struct Break {
        int first_small_ray;  // index into rays of the run's first small ray
        int run_length;       // consecutive small rays between two big rays
        bool odd() const { return run_length % 2 == 1; }
    };
    std::vector<Break> breaks;  // maximal small-ray runs strictly between big rays
};

inline RayFan ray_fan(const PointSet& ps, int apex) {
    const int n = ps.size();
    auto hull = convex_hull(ps);
    if (std::find(hull.hull_vertices.begin(), hull.hull_vertices.end(), apex) ==
        hull.hull_vertices.end())
        throw NotHullVertex("vertex " + std::to_string(apex) + " is not a convex hull vertex");

    RayFan fan;
    fan.apex = apex;
    if (n < 2) return fan;

    // group by direction; all directions lie in an open half-plane (wedge < pi)
    // because apex is a hull corner, so the pairwise cross comparator is a
    // strict weak order. u precedes v clockwise iff cross(u, v) < 0.
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != apex) others.push_back(i);

    auto cross = [&](int a, int b) {
        Rational ux = ps[a].x - ps[apex].x, uy = ps[a].y - ps[apex].y;
        Rational vx = ps[b].x - ps[apex].x, vy = ps[b].y - ps[apex].y;
        return sgn(Rational(ux * vy - uy * vx));
    };
    auto dist2_less = [&](int a, int b) {
        Rational da = (ps[a].x - ps[apex].x) * (ps[a].x - ps[apex].x) +
                      (ps[a].y - ps[apex].y) * (ps[a].y - ps[apex].y);
        Rational db = (ps[b].x - ps[apex].x) * (ps[b].x - ps[apex].x) +
                      (ps[b].y - ps[apex].y) * (ps[b].y - ps[apex].y);
        return da < db;
    };

    std::sort(others.begin(), others.end(), [&](int a, int b) {
        int c = cross(a, b);
        if (c != 0) return c < 0;
        return dist2_less(a, b);
    });

    for (int v : others) {
        if (!fan.rays.empty() && cross(fan.rays.back().pts[0], v) == 0)
            fan.rays.back().pts.push_back(v);
        else
            fan.rays.push_back(Ray{{v}});
    }
    for (const Ray& r : fan.rays) fan.frontier.push_back(r.pts[0]);

    int prev_big = -1;
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        if (!fan.rays[i].big()) continue;
        if (prev_big >= 0 && static_cast<int>(i) - prev_big > 1)
            fan.breaks.push_back({prev_big + 1, static_cast<int>(i) - prev_big - 1});
        prev_big = static_cast<int>(i);
    }
    return fan;
}

enum class TripleShape { Convex, Concave, Straight };

// With the fan clockwise as seen from the apex, a triple whose middle point
// lies beyond the chord of its neighbours (clockwise turn) always forms a K4
// with the apex: that is the concave case. A counterclockwise turn is convex;
// there the middle point's ray can carry a blocker hiding the outer pair.
inline std::vector<TripleShape> frontier_triples(const PointSet& ps, const RayFan& fan) {
    std::vector<TripleShape> out;
    const auto& f = fan.frontier;
    for (size_t i = 0; i + 2 < f.size(); ++i) {
        switch (orientation(ps[f[i]], ps[f[i + 1]], ps[f[i + 2]])) {
            case Orientation::Clockwise: out.push_back(TripleShape::Concave); break;
            case Orientation::CounterClockwise: out.push_back(TripleShape::Convex); break;
            case Orientation::Collinear: out.push_back(TripleShape::Straight); break;
        }
    }
    return out;
}

}  // namespace pvg
