#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // signed 1-based literals
};

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    int declared_clauses = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == 'c') continue;
        if (line[start] == 'p') {
            if (declared_clauses >= 0) throw ParseError("duplicate problem line");
            std::istringstream row(line);
            std::string p, cnf;
            if (!(row >> p >> cnf >> f.num_vars >> declared_clauses) || cnf != "cnf" ||
                f.num_vars < 1 || declared_clauses < 0)
                throw ParseError("bad problem line: " + line);
            continue;
        }
        if (declared_clauses < 0) throw ParseError("clause before problem line");
        std::istringstream row(line);
        int lit;
        while (row >> lit) {
            if (lit == 0) {
                if (current.size() != 3) throw NotThreeSat("clause has " + std::to_string(current.size()) + " literals");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                if (std::abs(lit) > f.num_vars) throw ParseError("literal out of range: " + std::to_string(lit));
                if (std::find(current.begin(), current.end(), lit) != current.end())
                    throw NotThreeSat("duplicate literal in clause");
                current.push_back(lit);
            }
        }
        if (!row.eof()) throw ParseError("bad token in clause line: " + line);
    }
    if (!current.empty()) throw ParseError("unterminated clause");
    if (declared_clauses < 0) throw ParseError("missing problem line");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("clause count mismatch");
    return f;
}

inline bool eval_clause(const std::array<int, 3>& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        bool v = assignment[std::abs(lit) - 1];
        if (lit > 0 ? v : !v) return true;
    }
    return false;
}

inline bool brute_force_sat(const CnfFormula& f, std::vector<bool>* model = nullptr) {
    if (f.num_vars > 24) throw Error("brute_force_sat limited to 24 variables");
    for (unsigned long long bits = 0; bits < (1ull << f.num_vars); ++bits) {
        std::vector<bool> a(f.num_vars);
        for (int i = 0; i < f.num_vars; ++i) a[i] = (bits >> i) & 1;
        bool ok = true;
        for (const auto& c : f.clauses)
            if (!eval_clause(c, a)) {
                ok = false;
                break;
            }
        if (ok) {
            if (model) *model = a;
            return true;
        }
    }
    return false;
}

// The gadget graph for 3-colourability of a 3-CNF: one vertex per literal, a
// two-stage OR gadget per clause, plus the global reference points p_r, p_b.
struct XiGraph {
    int num_vars = 0, num_clauses = 0;
    std::vector<std::pair<int, int>> edges;

    int num_vertices() const { return 2 + 2 * num_vars + 6 * num_clauses; }
    static int pr() { return 0; }
    static int pb() { return 1; }
    int var_vertex(int lit) const { return 2 + 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }
    // which in {3,4,5,7,8,9}, the conventional gadget point names
    int clause_vertex(int j, int which) const {
        static const std::map<int, int> offset{{3, 0}, {4, 1}, {5, 2}, {7, 3}, {8, 4}, {9, 5}};
        return 2 + 2 * num_vars + 6 * j + offset.at(which);
    }
    VisibilityGraph graph() const {
        VisibilityGraph g(num_vertices());
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }
};

inline XiGraph build_xi(const CnfFormula& f) {
    XiGraph xi;
    xi.num_vars = f.num_vars;
    xi.num_clauses = static_cast<int>(f.clauses.size());
    auto edge = [&](int a, int b) { xi.edges.emplace_back(std::min(a, b), std::max(a, b)); };
    edge(XiGraph::pr(), XiGraph::pb());
    for (int i = 1; i <= f.num_vars; ++i) {
        edge(XiGraph::pb(), xi.var_vertex(i));
        edge(XiGraph::pb(), xi.var_vertex(-i));
        edge(xi.var_vertex(i), xi.var_vertex(-i));
    }
    for (int j = 0; j < xi.num_clauses; ++j) {
        int p1 = xi.var_vertex(f.clauses[j][0]);
        int p2 = xi.var_vertex(f.clauses[j][1]);
        int p6 = xi.var_vertex(f.clauses[j][2]);
        int p3 = xi.clause_vertex(j, 3), p4 = xi.clause_vertex(j, 4), p5 = xi.clause_vertex(j, 5);
        int p7 = xi.clause_vertex(j, 7), p8 = xi.clause_vertex(j, 8), p9 = xi.clause_vertex(j, 9);
        edge(p1, p3);
        edge(p2, p4);
        edge(p3, p4);
        edge(p3, p5);
        edge(p4, p5);
        edge(p5, p7);
        edge(p6, p8);
        edge(p7, p8);
        edge(p7, p9);
        edge(p8, p9);
        edge(p9, XiGraph::pr());
        edge(p9, XiGraph::pb());
    }
    return xi;
}

struct PointRole {
    std::string line;  // "l1", "l2" or "l3"
    std::string role;
    int rank = 0;  // position within its line, top to bottom
};

struct ZetaEmbedding {
    PointSet points;
    std::vector<PointRole> roles;
    XiGraph xi;
    std::vector<int> xi_to_point;                  // xi vertex -> point index
    std::vector<int> l1, l2, l3;                   // point indices, top to bottom
    Rational l2_x;
    std::vector<std::pair<int, int>> blocked_pairs;  // per l2 point: blocked (l1,l3) point pair
    std::vector<std::pair<int, int>> cross_edges;    // point pairs realizing xi's l1-l3 edges
};

// Realizes xi on two vertical lines with l2 blockers in between. Instead of
// perturbing l1/l3 as in the source construction, the abscissa of l2 is a
// rational (q+1)/q whose denominator exceeds every denominator at which two
// distinct cross segments can intersect, so each blocker lies on exactly one
// cross segment by construction.
inline ZetaEmbedding build_zeta(const CnfFormula& f) {
    ZetaEmbedding z;
    z.xi = build_xi(f);
    const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
    z.xi_to_point.assign(z.xi.num_vertices(), -1);

    auto add = [&](const std::string& line, const std::string& role, long x2, int xi_vertex) {
        std::vector<int>& members = line == "l1" ? z.l1 : z.l3;
        int idx = z.points.size();
        z.points.points.push_back(Point{Rational(x2), Rational(-static_cast<long>(members.size()))});
        z.roles.push_back({line, role, static_cast<int>(members.size())});
        members.push_back(idx);
        if (xi_vertex >= 0) z.xi_to_point[xi_vertex] = idx;
    };

    for (int i = 1; i <= n; ++i) {
        add("l1", "var(" + std::to_string(i) + ",+)", 0, z.xi.var_vertex(i));
        add("l1", "var(" + std::to_string(i) + ",-)", 0, z.xi.var_vertex(-i));
        if (i < n) add("l1", "dummy_l1", 0, -1);
    }
    for (int j = 0; j < m; ++j) {
        add("l1", "dummy_l1", 0, -1);
        add("l1", "clause_l1(" + std::to_string(j + 1) + ",5)", 0, z.xi.clause_vertex(j, 5));
        add("l1", "dummy_l1", 0, -1);
        add("l1", "clause_l1(" + std::to_string(j + 1) + ",9)", 0, z.xi.clause_vertex(j, 9));
    }
    add("l3", "pr", 2, XiGraph::pr());
    add("l3", "pb", 2, XiGraph::pb());
    if (m > 0) add("l3", "dummy_l3", 2, -1);
    for (int j = 0; j < m; ++j) {
        add("l3", "clause_l3(" + std::to_string(j + 1) + ",3)", 2, z.xi.clause_vertex(j, 3));
        add("l3", "clause_l3(" + std::to_string(j + 1) + ",4)", 2, z.xi.clause_vertex(j, 4));
        add("l3", "dummy_l3", 2, -1);
        add("l3", "clause_l3(" + std::to_string(j + 1) + ",7)", 2, z.xi.clause_vertex(j, 7));
        add("l3", "clause_l3(" + std::to_string(j + 1) + ",8)", 2, z.xi.clause_vertex(j, 8));
        if (j < m - 1) add("l3", "dummy_l3", 2, -1);
    }

    // xi edges: same-line ones must be consecutive on their line; the rest
    // become the declared cross edges
    std::set<std::pair<int, int>> cross;
    for (auto [a, b] : z.xi.edges) {
        int pa = z.xi_to_point[a], pb_ = z.xi_to_point[b];
        if (z.roles[pa].line == z.roles[pb_].line) {
            if (std::abs(z.roles[pa].rank - z.roles[pb_].rank) != 1)
                throw InternalInconsistency("same-line xi edge not consecutive");
            continue;
        }
        if (z.roles[pa].line != "l1") std::swap(pa, pb_);
        cross.insert({pa, pb_});
    }
    z.cross_edges.assign(cross.begin(), cross.end());

    // two distinct cross segments between x=0 and x=2 meet at an abscissa
    // whose reduced denominator is at most twice the total y-span
    long q = 4L * (static_cast<long>(z.l1.size()) + static_cast<long>(z.l3.size())) + 1;
    z.l2_x = Rational(q + 1, q);

    std::vector<std::pair<Rational, std::pair<int, int>>> blockers;
    for (int u : z.l1)
        for (int w : z.l3) {
            if (cross.count({u, w})) continue;
            // y on the segment (0,yu)-(2,yw) at x = l2_x
            Rational y = z.points[u].y + z.l2_x / 2 * (z.points[w].y - z.points[u].y);
            blockers.push_back({y, {u, w}});
        }
    std::sort(blockers.begin(), blockers.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t k = 0; k < blockers.size(); ++k) {
        if (k > 0 && blockers[k].first == blockers[k - 1].first)
            throw GeometryDegeneracy("two blockers coincide on l2");
        int idx = z.points.size();
        auto [u, w] = blockers[k].second;
        z.points.points.push_back(Point{z.l2_x, blockers[k].first});
        z.roles.push_back({"l2", "blocker(" + std::to_string(u) + "," + std::to_string(w) + ")",
                           static_cast<int>(k)});
        z.l2.push_back(idx);
        z.blocked_pairs.push_back({u, w});
    }

    // no blocker may sit on a declared cross edge
    for (int b : z.l2)
        for (auto [u, w] : z.cross_edges)
            if (strictly_between(z.points[u], z.points[b], z.points[w]))
                throw GeometryDegeneracy("blocker lies on a declared cross edge");
    return z;
}

struct ReductionReport {
    bool satisfiable = false;
    bool sub3col = false;          // PVG(zeta) induced on l1 u l3 is 3-colourable
    bool cross_edges_match = false;
    bool l2_complete = false;      // every l2 point sees every l1/l3 point
    bool l2_path = false;
    bool full_checked = false;     // full PVG built and cross-checked (small instances)
    bool five_col_valid = false;   // SAT case: explicit 5-colouring validated
    bool equivalent = false;       // satisfiable == sub3col
    std::optional<Colouring> five_colouring;  // over z.points when satisfiable
};

namespace detail {

// integer rescale (x by den, y by 2 den) so the fast integer visibility path applies
inline PointSet scale_zeta(const ZetaEmbedding& z) {
    mpz_class den = z.l2_x.get_den();
    PointSet out;
    for (const Point& p : z.points.points)
        out.points.push_back(Point{p.x * Rational(den), p.y * Rational(2 * den)});
    return out;
}

// proper extension of the fixed colours to the six gadget points of clause j
inline bool colour_gadget(const XiGraph& xi, int j, Colouring& col) {
    std::array<int, 6> vs = {xi.clause_vertex(j, 3), xi.clause_vertex(j, 4),
                             xi.clause_vertex(j, 5), xi.clause_vertex(j, 7),
                             xi.clause_vertex(j, 8), xi.clause_vertex(j, 9)};
    std::vector<std::pair<int, int>> constraints;
    for (auto [a, b] : xi.edges)
        for (int v : vs)
            if (a == v || b == v) {
                constraints.push_back({a, b});
                break;
            }
    std::array<int, 6> pick{};
    for (int code = 0; code < 729; ++code) {
        int c = code;
        for (int k = 0; k < 6; ++k) {
            pick[k] = c % 3;
            c /= 3;
        }
        for (int k = 0; k < 6; ++k) col[vs[k]] = pick[k];
        bool ok = true;
        for (auto [a, b] : constraints)
            if (col[a] >= 0 && col[b] >= 0 && col[a] == col[b]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    for (int v : vs) col[v] = -1;
    return false;
}

}  // namespace detail

// Explicit 5-colouring of zeta from a satisfying assignment: the xi part uses
// colours 0..2 (true literals green=2, p_r red=0, p_b blue=1), line dummies
// take a colour free of their two line neighbours, l2 alternates 3 and 4.
inline Colouring five_colouring_from_model(const ZetaEmbedding& z, const std::vector<bool>& model) {
    Colouring xi_col(z.xi.num_vertices(), -1);
    xi_col[XiGraph::pr()] = 0;
    xi_col[XiGraph::pb()] = 1;
    for (int i = 1; i <= z.xi.num_vars; ++i) {
        xi_col[z.xi.var_vertex(i)] = model[i - 1] ? 2 : 0;
        xi_col[z.xi.var_vertex(-i)] = model[i - 1] ? 0 : 2;
    }
    for (int j = 0; j < z.xi.num_clauses; ++j)
        if (!detail::colour_gadget(z.xi, j, xi_col))
            throw InternalInconsistency("clause gadget not colourable under a satisfying model");

    Colouring col(z.points.size(), -1);
    for (int v = 0; v < z.xi.num_vertices(); ++v) col[z.xi_to_point[v]] = xi_col[v];
    for (const auto& line : {z.l1, z.l3})
        for (size_t k = 0; k < line.size(); ++k) {
            int p = line[k];
            if (col[p] >= 0) continue;
            int prev = k > 0 ? col[line[k - 1]] : -1;
            int next = k + 1 < line.size() ? col[line[k + 1]] : -1;
            for (int c = 0; c < 3; ++c)
                if (c != prev && c != next) {
                    col[p] = c;
                    break;
                }
        }
    for (size_t k = 0; k < z.l2.size(); ++k) col[z.l2[k]] = 3 + static_cast<int>(k % 2);
    return col;
}

inline ReductionReport verify_reduction(const CnfFormula& f, const ZetaEmbedding& z,
                                        std::optional<long long> budget = std::nullopt) {
    ReductionReport rep;
    std::vector<bool> model;
    rep.satisfiable = brute_force_sat(f, &model);

    PointSet scaled = detail::scale_zeta(z);
    const int N = scaled.size();

    // the scaled embedding has small integer coordinates; flatten them so the
    // quadratic scans below stay cheap
    std::vector<long long> xs(N), ys(N);
    for (int i = 0; i < N; ++i) {
        if (scaled[i].x.get_den() != 1 || scaled[i].y.get_den() != 1 ||
            !scaled[i].x.get_num().fits_slong_p() || !scaled[i].y.get_num().fits_slong_p())
            throw InternalInconsistency("scaled embedding is not small-integer");
        xs[i] = scaled[i].x.get_num().get_si();
        ys[i] = scaled[i].y.get_num().get_si();
    }
    auto vis = [&](int i, int j) {
        __int128 dx = xs[j] - xs[i], dy = ys[j] - ys[i];
        for (int k = 0; k < N; ++k) {
            if (k == i || k == j) continue;
            __int128 ex = xs[k] - xs[i], ey = ys[k] - ys[i];
            if (dx * ey != dy * ex) continue;
            __int128 dot = ex * dx + ey * dy;
            if (dot > 0 && dot < dx * dx + dy * dy) return false;
        }
        return true;
    };

    // actual cross visibilities in the full embedding
    std::set<std::pair<int, int>> actual_cross;
    for (int u : z.l1)
        for (int w : z.l3)
            if (vis(u, w)) actual_cross.insert({u, w});
    std::set<std::pair<int, int>> declared(z.cross_edges.begin(), z.cross_edges.end());
    rep.cross_edges_match = actual_cross == declared;

    // l2 is complete to l1 u l3 and induces a path in y-order
    rep.l2_complete = true;
    for (int b : z.l2) {
        for (int u : z.l1)
            if (!vis(b, u)) rep.l2_complete = false;
        for (int w : z.l3)
            if (!vis(b, w)) rep.l2_complete = false;
    }
    rep.l2_path = true;
    for (size_t k = 0; k + 1 < z.l2.size(); ++k)
        if (!vis(z.l2[k], z.l2[k + 1])) rep.l2_path = false;
    for (size_t k = 0; k + 2 < z.l2.size(); ++k)
        if (vis(z.l2[k], z.l2[k + 2])) rep.l2_path = false;

    // induced subgraph of PVG(zeta) on l1 u l3: the two line paths plus the
    // actually visible cross pairs
    std::vector<int> sub = z.l1;
    sub.insert(sub.end(), z.l3.begin(), z.l3.end());
    std::map<int, int> to_sub;
    for (size_t k = 0; k < sub.size(); ++k) to_sub[sub[k]] = static_cast<int>(k);
    VisibilityGraph gsub(static_cast<int>(sub.size()));
    for (size_t k = 0; k + 1 < z.l1.size(); ++k) gsub.add_edge(to_sub[z.l1[k]], to_sub[z.l1[k + 1]]);
    for (size_t k = 0; k + 1 < z.l3.size(); ++k) gsub.add_edge(to_sub[z.l3[k]], to_sub[z.l3[k + 1]]);
    for (auto [u, w] : actual_cross) gsub.add_edge(to_sub[u], to_sub[w]);
    rep.sub3col = k_colourable(gsub, 3, budget).has_value();

    if (rep.satisfiable) {
        Colouring col = five_colouring_from_model(z, model);
        rep.five_col_valid = true;
        // line paths, cross pairs, l2-to-everything and the l2 path cover all
        // edges of PVG(zeta); validate the colouring against each group
        for (const auto& line : {z.l1, z.l3})
            for (size_t k = 0; k + 1 < line.size(); ++k)
                if (col[line[k]] == col[line[k + 1]]) rep.five_col_valid = false;
        for (auto [u, w] : actual_cross)
            if (col[u] == col[w]) rep.five_col_valid = false;
        for (int b : z.l2)
            for (int other : sub)
                if (col[b] == col[other]) rep.five_col_valid = false;
        for (size_t k = 0; k + 1 < z.l2.size(); ++k)
            if (col[z.l2[k]] == col[z.l2[k + 1]]) rep.five_col_valid = false;
        if (num_colours_used(col) > 5) rep.five_col_valid = false;
        rep.five_colouring = col;
    }

    // on small instances, rebuild the whole PVG and re-derive every checked
    // property from it
    if (N <= 300) {
        auto g = build_pvg(scaled);
        rep.full_checked = true;
        for (int u : z.l1)
            for (int w : z.l3)
                if (g.adjacent(u, w) != (actual_cross.count({u, w}) > 0)) rep.full_checked = false;
        for (int b : z.l2)
            for (int other : sub)
                if (!g.adjacent(b, other)) rep.full_checked = false;
        if (rep.five_colouring && !is_valid_colouring(g, *rep.five_colouring))
            rep.full_checked = false;
    }

    rep.equivalent = rep.satisfiable == rep.sub3col;
    return rep;
}

}  // namespace pvg
