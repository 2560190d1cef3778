#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

struct G6Embedding {
    PointSet points;
    std::vector<std::string> role;                  // p1..p10, q1..q4, r1..r10, b1..b9, blocker(u,w)
    std::vector<std::string> line;                  // "l1", "l2" or "l3"
    std::vector<int> rank;                          // position within the line, left to right
    std::vector<int> l1, l2, l3;                    // point indices, left to right
    std::vector<std::pair<int, int>> joins;         // declared cross edges (l1 point, l3 point)
    std::vector<std::pair<int, int>> blocked_pairs; // per l2 point
    Rational l2_y;

    int p(int i) const { return l1[i - 1]; }                        // 1..10
    int q(int i) const { return l3[i - 1]; }                        // 1..4
    int r(int i) const { return l3[4 + 2 * (i - 1)]; }              // 1..10
    int b(int i) const { return l3[5 + 2 * (i - 1)]; }              // 1..9
};

// The embedding with clique number 4 and chromatic number 6: ten points on a
// top line, q/r/b points on a bottom line, and one blocker on a middle line
// for every cross pair that is not a declared join. The blocker line's
// ordinate is chosen so that no two cross segments intersect on it, mirroring
// the scheme used for the SAT reduction.
inline G6Embedding build_g6() {
    G6Embedding e;
    auto add = [&](const std::string& line, const std::string& role, Rational x, Rational y) {
        std::vector<int>& members = line == "l1" ? e.l1 : line == "l3" ? e.l3 : e.l2;
        int idx = e.points.size();
        e.points.points.push_back(Point{x, y});
        e.role.push_back(role);
        e.line.push_back(line);
        e.rank.push_back(static_cast<int>(members.size()));
        members.push_back(idx);
        return idx;
    };
    for (int i = 1; i <= 10; ++i) add("l1", "p" + std::to_string(i), i - 1, 2);
    for (int i = 1; i <= 4; ++i) add("l3", "q" + std::to_string(i), i - 1, 0);
    for (int i = 1; i <= 10; ++i) {
        add("l3", "r" + std::to_string(i), 4 + 2 * (i - 1), 0);
        if (i < 10) add("l3", "b" + std::to_string(i), 5 + 2 * (i - 1), 0);
    }

    const int qpairs[8][2] = {{1, 1}, {1, 4}, {2, 2}, {2, 5}, {3, 6}, {3, 9}, {4, 7}, {4, 10}};
    for (auto [qi, pi] : qpairs) e.joins.push_back({e.p(pi), e.q(qi)});
    for (int i = 1; i <= 5; ++i) {
        e.joins.push_back({e.p(1), e.r(i)});
        e.joins.push_back({e.p(3), e.r(i)});
        e.joins.push_back({e.p(i + 5), e.r(i)});
    }
    for (int i = 6; i <= 10; ++i) {
        e.joins.push_back({e.p(1), e.r(i)});
        e.joins.push_back({e.p(4), e.r(i)});
        e.joins.push_back({e.p(i), e.r(i)});
    }

    // two cross segments (top y=2 to bottom y=0) can only meet at a parameter
    // t whose reduced denominator is at most the x-span; t=(Q-1)/Q avoids all
    long Q = 4L * (static_cast<long>(e.l1.size()) + static_cast<long>(e.l3.size())) + 1;
    Rational t(Q - 1, Q);
    e.l2_y = 2 - 2 * t;

    std::set<std::pair<int, int>> declared(e.joins.begin(), e.joins.end());
    std::vector<std::pair<Rational, std::pair<int, int>>> blockers;
    for (int u : e.l1)
        for (int w : e.l3) {
            if (declared.count({u, w})) continue;
            Rational x = e.points[u].x + t * (e.points[w].x - e.points[u].x);
            blockers.push_back({x, {u, w}});
        }
    std::sort(blockers.begin(), blockers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t k = 0; k < blockers.size(); ++k) {
        if (k > 0 && blockers[k].first == blockers[k - 1].first)
            throw GeometryDegeneracy("two blockers coincide on l2");
        auto [u, w] = blockers[k].second;
        add("l2", "blocker(" + std::to_string(u) + "," + std::to_string(w) + ")",
            blockers[k].first, e.l2_y);
        e.blocked_pairs.push_back({u, w});
    }
    for (int bl : e.l2)
        for (auto [u, w] : e.joins)
            if (strictly_between(e.points[u], e.points[bl], e.points[w]))
                throw GeometryDegeneracy("blocker lies on a declared join");
    return e;
}

struct G6Report {
    bool cross_match = false;       // visible cross pairs == declared joins
    bool l2_complete = false;       // every l2 point sees every l1/l3 point
    bool l2_path = false;
    bool triangle_free_sub = false; // induced l1 u l3 subgraph of the PVG
    bool sub_not_3col = false;
    bool b_separators = false;      // without the b points a triangle appears
    int chi_sub = 0;                // expected 4
    int omega_full = 0;             // exact clique search, expected 4
    int chi_full = 0;               // 2 + chi_sub, expected 6
    Colouring six_colouring;        // over all points
    bool six_valid = false;
};

inline G6Report verify_g6(const G6Embedding& e, std::optional<long long> budget = std::nullopt) {
    G6Report rep;
    const int N = e.points.size();

    // integer rescale (multiply both axes by the t denominator) for fast scans
    mpz_class den = e.l2_y.get_den();
    PointSet scaled;
    for (const Point& p : e.points.points)
        scaled.points.push_back(Point{p.x * Rational(den), p.y * Rational(den)});
    auto g = build_pvg(scaled);

    std::set<std::pair<int, int>> declared(e.joins.begin(), e.joins.end());
    rep.cross_match = true;
    for (int u : e.l1)
        for (int w : e.l3)
            if (g.adjacent(u, w) != (declared.count({u, w}) > 0)) rep.cross_match = false;

    rep.l2_complete = true;
    for (int bl : e.l2) {
        for (int u : e.l1)
            if (!g.adjacent(bl, u)) rep.l2_complete = false;
        for (int w : e.l3)
            if (!g.adjacent(bl, w)) rep.l2_complete = false;
    }
    rep.l2_path = true;
    for (size_t k = 0; k < e.l2.size(); ++k)
        for (size_t j = k + 1; j < e.l2.size(); ++j)
            if (g.adjacent(e.l2[k], e.l2[j]) != (j == k + 1)) rep.l2_path = false;

    std::vector<int> sub = e.l1;
    sub.insert(sub.end(), e.l3.begin(), e.l3.end());
    auto gsub = g.induced(sub);
    rep.triangle_free_sub = triangle_free(gsub);
    rep.sub_not_3col = !k_colourable(gsub, 3, budget).has_value();
    auto four = k_colourable(gsub, 4, budget);
    rep.chi_sub = four && rep.sub_not_3col ? 4 : chromatic_number(gsub, budget);

    // the b points keep consecutive r points apart; with r_i r_{i+1} edges
    // added back, p1 closes a triangle
    std::map<int, int> to_sub;
    for (size_t k = 0; k < sub.size(); ++k) to_sub[sub[k]] = static_cast<int>(k);
    auto gnob = gsub;
    for (int i = 1; i <= 9; ++i) gnob.add_edge(to_sub.at(e.r(i)), to_sub.at(e.r(i + 1)));
    rep.b_separators = !triangle_free(gnob);
    for (int i = 1; i <= 9; ++i)
        if (!strictly_between(e.points[e.r(i)], e.points[e.b(i)], e.points[e.r(i + 1)]))
            rep.b_separators = false;

    rep.omega_full = clique_number(g, budget);
    rep.chi_full = 2 + rep.chi_sub;

    if (four) {
        rep.six_colouring.assign(N, -1);
        for (size_t k = 0; k < sub.size(); ++k) rep.six_colouring[sub[k]] = (*four)[k];
        for (size_t k = 0; k < e.l2.size(); ++k)
            rep.six_colouring[e.l2[k]] = 4 + static_cast<int>(k % 2);
        rep.six_valid = is_valid_colouring(g, rep.six_colouring) &&
                        num_colours_used(rep.six_colouring) == 6;
    }
    return rep;
}

}  // namespace pvg
