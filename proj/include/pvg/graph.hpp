#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "pvg/errors.hpp"

namespace pvg {

// Dense symmetric adjacency over vertex indices [0, n).
class VisibilityGraph {
public:
    explicit VisibilityGraph(int n = 0) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_) {}

    int num_vertices() const { return n_; }

    void add_edge(int i, int j) {
        if (i == j) return;
        bits_[row(i) + j / 64] |= uint64_t(1) << (j % 64);
        bits_[row(j) + i / 64] |= uint64_t(1) << (i % 64);
    }

    bool adjacent(int i, int j) const {
        return (bits_[row(i) + j / 64] >> (j % 64)) & 1;
    }

    int degree(int i) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row(i) + w]);
        return d;
    }

    int num_edges() const {
        int total = 0;
        for (int i = 0; i < n_; ++i) total += degree(i);
        return total / 2;
    }

    std::vector<int> neighbours(int i) const {
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j)) out.push_back(j);
        return out;
    }

    // Induced subgraph on `keep` (in the given order); vertex k of the result
    // corresponds to keep[k].
    VisibilityGraph induced(const std::vector<int>& keep) const {
        VisibilityGraph g(static_cast<int>(keep.size()));
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = a + 1; b < keep.size(); ++b)
                if (adjacent(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

private:
    size_t row(int i) const { return static_cast<size_t>(i) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

using Colouring = std::vector<int>;

inline int num_colours_used(const Colouring& c) {
    int k = 0;
    for (int v : c) k = std::max(k, v + 1);
    return k;
}

inline bool is_valid_colouring(const VisibilityGraph& g, const Colouring& c) {
    if (static_cast<int>(c.size()) != g.num_vertices())
        throw SizeMismatch("colouring covers " + std::to_string(c.size()) + " of " +
                           std::to_string(g.num_vertices()) + " vertices");
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = i + 1; j < g.num_vertices(); ++j)
            if (g.adjacent(i, j) && c[i] == c[j]) return false;
    return true;
}

inline bool triangle_free(const VisibilityGraph& g) {
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) return false;
        }
    return true;
}

inline std::optional<std::array<int, 4>> has_k4(const VisibilityGraph& g) {
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d))
                        return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

namespace detail {

// Backtracking k-colouring with forward checking over per-vertex colour-domain
// bitmasks and most-constrained-vertex selection. In decision mode the colour
// palette is canonicalized: a vertex may open at most one fresh colour beyond
// those already in use, which prunes all colour permutations. Enumeration mode
// applies no symmetry breaking and reports every proper colouring.
class ColourSearch {
public:
    ColourSearch(const VisibilityGraph& g, int k, std::optional<long long> budget)
        : g_(g), n_(g.num_vertices()), k_(k), budget_(budget) {}

    std::optional<Colouring> decide() {
        colours_.assign(n_, -1);
        domains_.assign(n_, full_mask());
        std::optional<Colouring> out;
        run(0, 0, [&](const Colouring& c) {
            out = c;
            return true;
        });
        return out;
    }

    template <typename Sink>
    void enumerate(Sink&& sink) {
        colours_.assign(n_, -1);
        domains_.assign(n_, full_mask());
        run(0, k_, std::forward<Sink>(sink));
    }

private:
    uint32_t full_mask() const { return k_ >= 32 ? ~uint32_t(0) : (uint32_t(1) << k_) - 1; }

    // max_used: number of colours already open; cap = max_used+1 in decision
    // mode, k in enumeration mode (passed as initial `used_cap` argument).
    template <typename Sink>
    bool run(int depth, int enumerate_cap, Sink&& sink) {
        if (depth == n_) {
            Colouring snapshot = colours_;
            return sink(snapshot);
        }
        if (budget_ && ++nodes_ > *budget_)
            throw BudgetExceeded("colouring search exceeded " + std::to_string(*budget_) + " nodes");

        // most-constrained uncoloured vertex; ties by degree
        int best = -1, best_dom = 1 << 30;
        for (int v = 0; v < n_; ++v) {
            if (colours_[v] >= 0) continue;
            int dom = std::popcount(domains_[v]);
            if (dom == 0) return false;
            if (dom < best_dom || (dom == best_dom && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_dom = dom;
            }
        }

        int cap = enumerate_cap > 0 ? enumerate_cap : std::min(k_, used_ + 1);
        for (int c = 0; c < cap; ++c) {
            if (!((domains_[best] >> c) & 1)) continue;
            std::vector<std::pair<int, uint32_t>> undo;
            colours_[best] = c;
            int used_before = used_;
            used_ = std::max(used_, c + 1);
            bool dead = false;
            for (int u = 0; u < n_ && !dead; ++u) {
                if (colours_[u] >= 0 || !g_.adjacent(best, u)) continue;
                if ((domains_[u] >> c) & 1) {
                    undo.emplace_back(u, domains_[u]);
                    domains_[u] &= ~(uint32_t(1) << c);
                    if (domains_[u] == 0) dead = true;
                }
            }
            if (!dead && run(depth + 1, enumerate_cap, sink)) return true;
            for (auto& [u, m] : undo) domains_[u] = m;
            colours_[best] = -1;
            used_ = used_before;
        }
        return false;
    }

    const VisibilityGraph& g_;
    int n_;
    int k_;
    std::optional<long long> budget_;
    long long nodes_ = 0;
    int used_ = 0;
    Colouring colours_;
    std::vector<uint32_t> domains_;
};

}  // namespace detail

inline std::optional<Colouring> k_colourable(const VisibilityGraph& g, int k,
                                             std::optional<long long> budget = std::nullopt) {
    if (k < 1) throw Error("k_colourable requires k >= 1");
    if (g.num_vertices() == 0) return Colouring{};
    detail::ColourSearch search(g, std::min(k, g.num_vertices()), budget);
    auto c = search.decide();
    if (c && num_colours_used(*c) > k) throw InternalInconsistency("oracle used too many colours");
    return c;
}

// All proper colourings with colours drawn from [0,k), no symmetry breaking.
// Stops after `cap` results.
inline std::vector<Colouring> enumerate_colourings(const VisibilityGraph& g, int k, size_t cap,
                                                   std::optional<long long> budget = std::nullopt) {
    std::vector<Colouring> out;
    if (g.num_vertices() == 0) return out;
    detail::ColourSearch search(g, k, budget);
    search.enumerate([&](const Colouring& c) {
        out.push_back(c);
        return out.size() >= cap;
    });
    return out;
}

inline int chromatic_number(const VisibilityGraph& g, std::optional<long long> budget = std::nullopt) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colourable(g, k, budget)) return k;
}

namespace detail {

// Tomita-style max clique: greedy colouring bound on a degeneracy-ish order.
class CliqueSearch {
public:
    CliqueSearch(const VisibilityGraph& g, std::optional<long long> budget) : g_(g), budget_(budget) {}

    int run() {
        std::vector<int> cand(g_.num_vertices());
        std::iota(cand.begin(), cand.end(), 0);
        std::sort(cand.begin(), cand.end(),
                  [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        expand(cand, 0);
        return best_;
    }

private:
    void expand(std::vector<int>& cand, int size) {
        if (budget_ && ++nodes_ > *budget_)
            throw BudgetExceeded("clique search exceeded " + std::to_string(*budget_) + " nodes");
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        // greedy colour classes over cand; colour number bounds clique extension
        std::vector<int> colour(cand.size());
        std::vector<std::vector<int>> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool fits = true;
                for (int u : classes[c])
                    if (g_.adjacent(cand[i], u)) {
                        fits = false;
                        break;
                    }
                if (fits) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(cand[i]);
            colour[i] = static_cast<int>(c) + 1;
        }
        // process candidates in increasing colour bound, branching from the back
        std::vector<size_t> order(cand.size());
        std::iota(order.begin(), order.end(), size_t(0));
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return colour[a] < colour[b]; });
        std::vector<int> sorted_cand(cand.size());
        std::vector<int> sorted_colour(cand.size());
        for (size_t i = 0; i < order.size(); ++i) {
            sorted_cand[i] = cand[order[i]];
            sorted_colour[i] = colour[order[i]];
        }
        for (size_t idx = sorted_cand.size(); idx-- > 0;) {
            if (size + sorted_colour[idx] <= best_) return;
            int v = sorted_cand[idx];
            std::vector<int> next;
            for (size_t j = 0; j < idx; ++j)
                if (g_.adjacent(v, sorted_cand[j])) next.push_back(sorted_cand[j]);
            expand(next, size + 1);
        }
    }

    const VisibilityGraph& g_;
    std::optional<long long> budget_;
    long long nodes_ = 0;
    int best_ = 0;
};

}  // namespace detail

inline int clique_number(const VisibilityGraph& g, std::optional<long long> budget = std::nullopt) {
    if (g.num_vertices() == 0) return 0;
    detail::CliqueSearch search(g, budget);
    return search.run();
}

}  // namespace pvg
