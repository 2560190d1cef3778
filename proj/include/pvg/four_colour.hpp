#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"
#include "pvg/three_colour.hpp"

namespace pvg {

struct ReductionTrace {
    struct Deletion {
        int vertex;                  // original index
        std::array<int, 3> witness;  // K3 visible from vertex at deletion time
    };
    PointSet original;
    std::vector<Deletion> deletions;    // in deletion order
    std::vector<int> reduced_indices;   // ascending original indices of the reduced set

    PointSet reduced_set() const {
        PointSet out;
        for (int i : reduced_indices) out.points.push_back(original[i]);
        return out;
    }
};

struct CandidateColouring {
    Colouring assignment;  // over the candidate's local vertex order
    int provenance = -1;   // phase-choice bitmask (eight_candidates) or enumeration rank
};

namespace detail {

// Lexicographically first triangle among v's neighbours restricted to `mask`.
inline std::optional<std::array<int, 3>> witness_k3(const VisibilityGraph& g, int v,
                                                    const std::vector<bool>& mask) {
    std::vector<int> nb;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (u != v && mask[u] && g.adjacent(v, u)) nb.push_back(u);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) {
            if (!g.adjacent(nb[a], nb[b])) continue;
            for (size_t c = b + 1; c < nb.size(); ++c)
                if (g.adjacent(nb[a], nb[c]) && g.adjacent(nb[b], nb[c]))
                    return std::array<int, 3>{nb[a], nb[b], nb[c]};
        }
    return std::nullopt;
}

inline Colouring canon_colours(Colouring c) {
    std::vector<int> remap(16, -1);
    int next = 0;
    for (int& col : c) {
        if (remap[col] < 0) remap[col] = next++;
        col = remap[col];
    }
    return c;
}

}  // namespace detail

// Repeatedly delete the lowest-index convex hull vertex that sees a K3 in the
// rest. A hull vertex is never a blocker, so the PVG is built once and induced.
inline ReductionTrace reduce(const PointSet& ps) {
    ReductionTrace trace;
    trace.original = ps;
    auto g = build_pvg(ps);
    std::vector<bool> alive(ps.size(), true);
    for (;;) {
        PointSet cur;
        std::vector<int> cur_to_orig;
        for (int i = 0; i < ps.size(); ++i)
            if (alive[i]) {
                cur.points.push_back(ps[i]);
                cur_to_orig.push_back(i);
            }
        auto hull = convex_hull(cur);
        std::vector<int> hull_orig;
        for (int h : hull.hull_vertices) hull_orig.push_back(cur_to_orig[h]);
        std::sort(hull_orig.begin(), hull_orig.end());
        bool deleted = false;
        for (int v : hull_orig) {
            std::vector<bool> mask = alive;
            mask[v] = false;
            if (auto w = detail::witness_k3(g, v, mask)) {
                trace.deletions.push_back({v, *w});
                alive[v] = false;
                deleted = true;
                break;
            }
        }
        if (!deleted) break;
    }
    for (int i = 0; i < ps.size(); ++i)
        if (alive[i]) trace.reduced_indices.push_back(i);
    return trace;
}

inline bool reduced_is_reduced(const PointSet& ps) {
    auto g = build_pvg(ps);
    auto hull = convex_hull(ps);
    std::vector<bool> mask(ps.size(), true);
    for (int v : hull.hull_vertices) {
        mask[v] = false;
        bool sees = detail::witness_k3(g, v, mask).has_value();
        mask[v] = true;
        if (sees) return false;
    }
    return true;
}

// All proper 4-colourings of ps_r ∪ {p}, up to colour permutation, by a
// dedicated backtracking pass (independent of the graph_core oracle). The
// structured instance keeps this constant-sized: the off-line vertices see
// every line point, so at most one line point escapes full adjacency to p.
inline std::vector<CandidateColouring> enumerate_reduced_plus_one(const PointSet& ps_r,
                                                                  const Point& p) {
    if (!reduced_is_reduced(ps_r)) throw NotReduced("enumerate_reduced_plus_one needs a reduced set");
    PointSet all = ps_r;
    all.points.push_back(p);
    auto g = build_pvg(all);
    const int n = all.size();

    // order vertices by decreasing degree for cheap propagation
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::set<Colouring> classes;
    Colouring col(n, -1);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            classes.insert(detail::canon_colours(col));
            if (classes.size() > 16)
                throw EnumerationOverflow("more than 16 colour classes for reduced set plus one point");
            return;
        }
        int v = order[depth];
        for (int c = 0; c < 4; ++c) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (col[u] == c && g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            col[v] = c;
            self(self, depth + 1);
            col[v] = -1;
        }
    };
    rec(rec, 0);

    std::vector<CandidateColouring> out;
    int rank = 0;
    for (const auto& c : classes) out.push_back({c, rank++});
    return out;
}

struct StructuralReport {
    int hull_vertex_count = 0;
    bool hull_points_equal_vertices = false;
    bool internal_frontier_points = false;
    bool no_concave_triples = false;
    bool convex_middles_big = false;
    bool two_big_rays_each = false;
};

// Checks the structural invariants of a reduced, non-3-colourable set; throws
// StructuralViolation naming the failed property.
inline StructuralReport hull_structure_checks(const PointSet& ps_r) {
    StructuralReport rep;
    auto hull = convex_hull(ps_r);
    rep.hull_vertex_count = static_cast<int>(hull.hull_vertices.size());
    if (rep.hull_vertex_count != 3)
        throw StructuralViolation("hull must have exactly three vertices");
    rep.hull_points_equal_vertices = hull.hull_points.size() == hull.hull_vertices.size();
    if (!rep.hull_points_equal_vertices)
        throw StructuralViolation("all hull points must be hull vertices");
    rep.internal_frontier_points = rep.no_concave_triples = rep.convex_middles_big =
        rep.two_big_rays_each = true;
    for (int v : hull.hull_vertices) {
        auto fan = ray_fan(ps_r, v);
        if (fan.rays.size() < 3) {
            rep.internal_frontier_points = false;
            throw StructuralViolation("hull vertex lacks an internal frontier point");
        }
        auto triples = frontier_triples(ps_r, fan);
        for (size_t i = 0; i < triples.size(); ++i) {
            if (triples[i] == TripleShape::Concave) {
                rep.no_concave_triples = false;
                throw StructuralViolation("concave frontier triple");
            }
            if (triples[i] == TripleShape::Convex && !fan.rays[i + 1].big()) {
                rep.convex_middles_big = false;
                throw StructuralViolation("convex frontier triple on a small ray");
            }
        }
        int big = 0;
        for (const auto& r : fan.rays) big += r.big();
        if (big < 2) {
            rep.two_big_rays_each = false;
            throw StructuralViolation("hull vertex has fewer than two big rays");
        }
    }
    return rep;
}

// The eight candidate 4-colourings of a reduced non-3-colourable set. Hull
// vertices take colours 0,1,2 clockwise from the lexicographically smallest.
// Per hull vertex, its colour class propagates over the ray fan: the class
// occupies the 2nd, 4th, ... points of every other big ray, and which
// alternation class carries it is a binary phase choice; small rays and big-
// ray first points never receive it. Conflicting claims discard a candidate;
// unclaimed points take the fourth colour; only validated candidates survive.
inline std::vector<CandidateColouring> eight_candidates(const PointSet& ps_r) {
    auto hull = convex_hull(ps_r);
    if (hull.hull_vertices.size() != 3)
        throw StructuralViolation("eight_candidates needs a three-vertex hull");
    std::vector<int> corners = hull.hull_vertices;
    int smallest = 0;
    for (int i = 1; i < 3; ++i) {
        const Point &a = ps_r[corners[i]], &b = ps_r[corners[smallest]];
        if (a.x < b.x || (a.x == b.x && a.y < b.y)) smallest = i;
    }
    std::rotate(corners.begin(), corners.begin() + smallest, corners.end());

    auto g = build_pvg(ps_r);
    const int n = ps_r.size();

    // claims[corner][phase] = vertices carrying that corner's colour
    std::array<std::array<std::vector<int>, 2>, 3> claims;
    for (int ci = 0; ci < 3; ++ci) {
        auto fan = ray_fan(ps_r, corners[ci]);
        std::vector<int> big_rays;
        for (size_t r = 0; r < fan.rays.size(); ++r)
            if (fan.rays[r].big()) big_rays.push_back(static_cast<int>(r));
        for (int phase = 0; phase < 2; ++phase) {
            for (size_t bi = 0; bi < big_rays.size(); ++bi) {
                if (static_cast<int>(bi % 2) != phase) continue;
                const auto& pts = fan.rays[big_rays[bi]].pts;
                for (size_t k = 1; k < pts.size(); k += 2) claims[ci][phase].push_back(pts[k]);
            }
        }
    }

    std::vector<CandidateColouring> out;
    for (int mask = 0; mask < 8; ++mask) {
        Colouring col(n, -1);
        bool ok = true;
        for (int ci = 0; ci < 3 && ok; ++ci) {
            if (col[corners[ci]] != -1) ok = false;
            col[corners[ci]] = ci;
        }
        for (int ci = 0; ci < 3 && ok; ++ci)
            for (int v : claims[ci][(mask >> ci) & 1]) {
                if (col[v] != -1) {
                    ok = false;
                    break;
                }
                col[v] = ci;
            }
        if (!ok) continue;
        for (int v = 0; v < n; ++v)
            if (col[v] == -1) col[v] = 3;
        if (!is_valid_colouring(g, col)) continue;
        out.push_back({col, mask});
    }
    return out;
}

// Adds deleted points back in reverse order; each takes the unique colour its
// witness K3 misses, then is checked against every present point.
// base_vertices: original indices already coloured (the reduced set, possibly
// plus the last-deleted point); base: their colours in the same order.
inline std::optional<Colouring> reinsert(const ReductionTrace& trace,
                                         const std::vector<int>& base_vertices,
                                         const Colouring& base) {
    if (base_vertices.size() != base.size()) throw SizeMismatch("base size mismatch");
    auto g = build_pvg(trace.original);
    const int n = trace.original.size();
    std::vector<int> col(n, -1);
    for (size_t i = 0; i < base_vertices.size(); ++i) col[base_vertices[i]] = base[i];
    for (auto it = trace.deletions.rbegin(); it != trace.deletions.rend(); ++it) {
        if (col[it->vertex] != -1) continue;  // already part of the base
        int ca = col[it->witness[0]], cb = col[it->witness[1]], cc = col[it->witness[2]];
        if (ca < 0 || cb < 0 || cc < 0 || ca == cb || ca == cc || cb == cc)
            throw WitnessNotTricoloured("witness of vertex " + std::to_string(it->vertex));
        int forced = 0 + 1 + 2 + 3 - ca - cb - cc;
        for (int u = 0; u < n; ++u)
            if (col[u] == forced && g.adjacent(u, it->vertex)) return std::nullopt;
        col[it->vertex] = forced;
    }
    for (int v = 0; v < n; ++v)
        if (col[v] < 0) throw InternalInconsistency("vertex left uncoloured after reinsertion");
    return Colouring(col.begin(), col.end());
}

// The full decision pipeline: 3-colourable fast path; otherwise reduce, build the
// constant candidate set for the reduced core, and reinsert.
inline std::optional<Colouring> decide_four_colouring(const PointSet& ps) {
    if (ps.size() == 0) return Colouring{};
    if (auto c3 = three_colourable(ps)) return c3;

    auto trace = reduce(ps);
    PointSet ps_r = trace.reduced_set();
    auto c3r = three_colourable(ps_r);

    std::vector<int> base_vertices = trace.reduced_indices;
    std::vector<CandidateColouring> candidates;
    if (c3r) {
        // the original was not 3-colourable, so at least one deletion happened
        int p_idx = trace.deletions.back().vertex;
        candidates = enumerate_reduced_plus_one(ps_r, trace.original[p_idx]);
        // candidate local order: reduced vertices in ascending order, then p
        base_vertices.push_back(p_idx);
    } else {
        hull_structure_checks(ps_r);
        candidates = eight_candidates(ps_r);
    }

    for (const auto& cand : candidates)
        if (auto full = reinsert(trace, base_vertices, cand.assignment)) return full;
    return std::nullopt;
}

}  // namespace pvg
