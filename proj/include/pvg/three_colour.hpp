#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

enum class FormTag { AllCollinear, OneOffLine, TwoInvisibleOffPath, TwoVisibleOffPath, Octahedron, None };

struct StructuralForm {
    FormTag tag = FormTag::None;
    std::vector<int> witnesses;  // off-line vertices where applicable
};

namespace detail {

inline bool all_collinear(const PointSet& ps) {
    for (int k = 2; k < ps.size(); ++k)
        if (orientation_sign(ps[0], ps[1], ps[k]) != 0) return false;
    return ps.size() >= 1;
}

// All distinct ways to split the set into a line of >= 2 points plus at most
// max_off points off it. Line decompositions are ambiguous (a point can sit
// on several candidate lines), so callers must inspect every split.
inline std::vector<std::vector<int>> off_line_splits(const PointSet& ps, int max_off) {
    const int n = ps.size();
    std::vector<std::vector<int>> out;
    if (n < 3) return out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> off;
            for (int k = 0; k < n; ++k)
                if (orientation_sign(ps[a], ps[b], ps[k]) != 0) off.push_back(k);
            if (static_cast<int>(off.size()) <= max_off && n - static_cast<int>(off.size()) >= 2 &&
                std::find(out.begin(), out.end(), off) == out.end())
                out.push_back(off);
        }
    return out;
}

inline bool is_octahedron(const VisibilityGraph& g) {
    if (g.num_vertices() != 6) return false;
    // K2,2,2: every vertex non-adjacent to exactly one other; non-edges a perfect matching
    std::vector<int> partner(6, -1);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j || g.adjacent(i, j)) continue;
            if (partner[i] != -1) return false;
            partner[i] = j;
        }
        if (partner[i] == -1) return false;
    }
    for (int i = 0; i < 6; ++i)
        if (partner[partner[i]] != i) return false;
    return true;
}

}  // namespace detail

// The 3-colourable structures are searched for before the visible-off-pair
// form is reported: a set can admit several line splits and is 3-colourable
// as soon as one of them is of a 3-colourable kind.
inline StructuralForm classify_form(const PointSet& ps) {
    const int n = ps.size();
    if (n <= 2 || detail::all_collinear(ps)) return {FormTag::AllCollinear, {}};
    for (const auto& off : detail::off_line_splits(ps, 1)) return {FormTag::OneOffLine, off};
    auto splits = detail::off_line_splits(ps, 2);
    for (const auto& off : splits)
        if (!visible(ps, off[0], off[1])) return {FormTag::TwoInvisibleOffPath, off};
    if (detail::is_octahedron(build_pvg(ps))) return {FormTag::Octahedron, {}};
    if (!splits.empty()) return {FormTag::TwoVisibleOffPath, splits.front()};
    return {FormTag::None, {}};
}

namespace detail {

// Alternate 0/1 along a line of points (sorted by position), off-line vertices
// get colour 2.
inline Colouring colour_line_plus(const PointSet& ps, const std::vector<int>& off) {
    const int n = ps.size();
    std::vector<bool> is_off(n, false);
    for (int v : off) is_off[v] = true;
    std::vector<int> line;
    for (int v = 0; v < n; ++v)
        if (!is_off[v]) line.push_back(v);
    std::sort(line.begin(), line.end(), [&](int a, int b) {
        if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
        return ps[a].y < ps[b].y;
    });
    Colouring c(n, 2);
    for (size_t i = 0; i < line.size(); ++i) c[line[i]] = static_cast<int>(i % 2);
    return c;
}

}  // namespace detail

inline std::optional<Colouring> two_colourable(const PointSet& ps) {
    if (ps.size() == 1) return Colouring{0};
    if (!detail::all_collinear(ps)) return std::nullopt;
    Colouring c = detail::colour_line_plus(ps, {});
    return c;
}

inline std::optional<Colouring> three_colourable(const PointSet& ps) {
    const int n = ps.size();
    if (n == 0) return Colouring{};
    auto form = classify_form(ps);
    std::optional<Colouring> out;
    switch (form.tag) {
        case FormTag::AllCollinear:
        case FormTag::OneOffLine:
        case FormTag::TwoInvisibleOffPath:
            out = detail::colour_line_plus(ps, form.witnesses);
            break;
        case FormTag::Octahedron: {
            auto g = build_pvg(ps);
            Colouring c(6, -1);
            int next = 0;
            for (int i = 0; i < 6; ++i) {
                if (c[i] >= 0) continue;
                for (int j = 0; j < 6; ++j)
                    if (j != i && !g.adjacent(i, j)) c[j] = next;
                c[i] = next++;
            }
            out = c;
            break;
        }
        case FormTag::TwoVisibleOffPath:
        case FormTag::None:
            out = std::nullopt;
            break;
    }
    auto g = build_pvg(ps);
    bool k4_absent = !has_k4(g).has_value();
    if (out.has_value() != k4_absent)
        throw InternalInconsistency("structural 3-colourability disagrees with K4 test");
    if (out && !is_valid_colouring(g, *out))
        throw InternalInconsistency("structural 3-colouring invalid");
    return out;
}

// Unique proper 3-colouring of a reduced set, canonicalized to first-seen
// colour order. A reduced set that arose from at least one deletion always
// contains a K3; a collinear input can only reach here when the caller made
// no deletions, and is handed back its (non-unique) alternating colouring.
inline std::optional<Colouring> unique_3colouring_of_reduced(const PointSet& ps) {
    auto g = build_pvg(ps);
    auto hull = convex_hull(ps);
    for (int v : hull.hull_vertices) {
        auto nb = g.neighbours(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                if (!g.adjacent(nb[a], nb[b])) continue;
                for (size_t c = b + 1; c < nb.size(); ++c)
                    if (g.adjacent(nb[a], nb[c]) && g.adjacent(nb[b], nb[c]))
                        throw NotReduced("hull vertex " + std::to_string(v) + " sees a K3");
            }
    }
    auto c = three_colourable(ps);
    if (!c) return std::nullopt;
    // canonicalize colours to first-seen order
    std::vector<int> remap(8, -1);
    int next = 0;
    for (int& col : *c) {
        if (remap[col] < 0) remap[col] = next++;
        col = remap[col];
    }
    return c;
}

}  // namespace pvg
