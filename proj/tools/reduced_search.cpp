// Search tool: finds point sets that are reduced (no convex hull vertex sees a
// triangle) yet contain a K4, i.e. reduced sets that are not 3-colourable.
// Seeds come from a cevian construction inside a triangle; a best-first repair
// loop inserts blockers at exact line intersections until no hull vertex sees
// a triangle. Output: one set per line, integer coordinates "x0 y0 x1 y1 ...".
//
// Usage: reduced_search [max_hits] [budget_per_seed] [max_points]

#include <cstdio>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

using namespace pvg;

using Pt = Point;

static Pt rp(const Rational& x, const Rational& y) { return Pt{x, y}; }

static Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

static bool line_inter(const Pt& p, const Pt& q, const Pt& r, const Pt& s, Pt& out) {
    Rational d1x = q.x - p.x, d1y = q.y - p.y;
    Rational d2x = s.x - r.x, d2y = s.y - r.y;
    Rational den = d1x * d2y - d1y * d2x;
    if (den == 0) return false;
    Rational t = ((r.x - p.x) * d2y - (r.y - p.y) * d2x) / den;
    out = rp(p.x + t * d1x, p.y + t * d1y);
    return true;
}

static bool on_open_seg(const Pt& p, const Pt& q, const Pt& x) {
    if (cross(p, q, x) != 0) return false;
    if (p.x != q.x) return (p.x < x.x && x.x < q.x) || (q.x < x.x && x.x < p.x);
    return (p.y < x.y && x.y < q.y) || (q.y < x.y && x.y < p.y);
}

// Scale to coprime integer coordinates (for dedup keys and output).
static std::vector<std::pair<mpz_class, mpz_class>> scale_int(const std::vector<Pt>& pts) {
    mpz_class den = 1;
    for (const Pt& p : pts) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.x.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.y.get_den().get_mpz_t());
    }
    std::vector<std::pair<mpz_class, mpz_class>> out;
    mpz_class g = 0;
    for (const Pt& p : pts) {
        mpz_class ix = p.x.get_num() * (den / p.x.get_den());
        mpz_class iy = p.y.get_num() * (den / p.y.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ix.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iy.get_mpz_t());
        out.emplace_back(ix, iy);
    }
    if (g > 1)
        for (auto& [x, y] : out) {
            x /= g;
            y /= g;
        }
    return out;
}

static std::string key_of(const std::vector<Pt>& pts) {
    auto ints = scale_int(pts);
    std::vector<std::string> parts;
    for (auto& [x, y] : ints) parts.push_back(x.get_str() + "," + y.get_str());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& s : parts) key += s + ";";
    return key;
}

// Triangle visible from hull vertex v, or empty.
static std::vector<int> sees_k3(const VisibilityGraph& g, int v) {
    auto nb = g.neighbours(v);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) {
            if (!g.adjacent(nb[a], nb[b])) continue;
            for (size_t c = b + 1; c < nb.size(); ++c)
                if (g.adjacent(nb[a], nb[c]) && g.adjacent(nb[b], nb[c]))
                    return {nb[a], nb[b], nb[c]};
        }
    return {};
}

struct Eval {
    bool usable = false;
    int n = 0;
    std::vector<std::pair<int, std::vector<int>>> bad;  // (hull vertex, triangle)
    bool k4 = false;
    int hull_size = 0;
};

static Eval evaluate(const std::vector<Pt>& pts) {
    Eval e;
    e.n = static_cast<int>(pts.size());
    PointSet ps{pts};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return e;
    auto g = build_pvg(ps);
    e.k4 = has_k4(g).has_value();
    if (!e.k4) return e;
    auto hull = convex_hull(ps);
    e.hull_size = static_cast<int>(hull.hull_vertices.size());
    for (int v : hull.hull_vertices) {
        auto t = sees_k3(g, v);
        if (!t.empty()) e.bad.emplace_back(v, t);
    }
    e.usable = true;
    return e;
}

static std::vector<std::vector<Pt>> expand(const std::vector<Pt>& pts,
                                           const std::pair<int, std::vector<int>>& bad) {
    std::vector<std::vector<Pt>> children;
    int v = bad.first;
    const auto& t = bad.second;
    std::vector<std::pair<int, int>> segs = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]},
                                             {v, t[0]},    {v, t[1]},    {v, t[2]}};
    const int n = static_cast<int>(pts.size());
    std::set<std::string> tried;
    for (auto [a, b] : segs) {
        for (int c = 0; c < n; ++c)
            for (int d = c + 1; d < n; ++d) {
                if (c == a || c == b || d == a || d == b) continue;
                Pt x;
                if (!line_inter(pts[a], pts[b], pts[c], pts[d], x)) continue;
                if (!on_open_seg(pts[a], pts[b], x)) continue;
                bool dup = false;
                for (const Pt& p : pts)
                    if (p == x) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                std::string k = to_string(x.x) + "," + to_string(x.y);
                if (!tried.insert(k).second) continue;
                auto child = pts;
                child.push_back(x);
                children.push_back(std::move(child));
            }
    }
    return children;
}

struct Node {
    int bad_count;
    int n;
    long long order;
    std::vector<Pt> pts;
    std::vector<std::pair<int, std::vector<int>>> bad;
    bool operator>(const Node& o) const {
        if (bad_count != o.bad_count) return bad_count > o.bad_count;
        if (n != o.n) return n > o.n;
        return order > o.order;
    }
};

// Best-first repair from one seed; returns solutions found within budget.
static std::vector<std::vector<Pt>> repair(const std::vector<Pt>& seed, long long budget, int maxn,
                                           std::set<std::string>& seen) {
    std::vector<std::vector<Pt>> found;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    long long order = 0;
    auto push = [&](std::vector<Pt>&& pts) {
        auto key = key_of(pts);
        if (!seen.insert(key).second) return;
        auto e = evaluate(pts);
        if (!e.usable) return;
        if (e.bad.empty()) {
            if (e.hull_size == 3) found.push_back(pts);
            return;
        }
        pq.push(Node{static_cast<int>(e.bad.size()), e.n, order++, std::move(pts), e.bad});
    };
    {
        auto s = seed;
        push(std::move(s));
    }
    long long steps = 0;
    while (!pq.empty() && steps < budget && found.empty()) {
        Node cur = pq.top();
        pq.pop();
        if (cur.n >= maxn) continue;
        for (auto& child : expand(cur.pts, cur.bad[0])) {
            ++steps;
            push(std::move(child));
            if (!found.empty() || steps >= budget) break;
        }
    }
    return found;
}

int main(int argc, char** argv) {
    int max_hits = argc > 1 ? std::atoi(argv[1]) : 5;
    long long budget = argc > 2 ? std::atoll(argv[2]) : 20000;
    int maxn = argc > 3 ? std::atoi(argv[3]) : 13;

    // cevian seeds: triangle A,B,C; cevians AD, BE, CF with feet parametrized
    // by fractions along the opposite sides; x,y,z their pairwise
    // intersections; w the A-line/B-line crossing; v blocks C's view of w.
    Pt A = rp(0, 0), B = rp(1, 0), C = rp(Rational(0), Rational(1));
    std::vector<Rational> fr;
    for (int d = 2; d <= 9; ++d)
        for (int n = 1; n < d; ++n) {
            Rational f(n, d);
            f.canonicalize();
            if (f.get_den() == d) fr.push_back(f);
        }

    auto interior = [&](const Pt& p) {
        return cross(A, B, p) > 0 && cross(B, C, p) > 0 && cross(C, A, p) > 0;
    };

    std::vector<std::vector<Pt>> seeds;
    for (const Rational& al : fr)
        for (const Rational& be : fr)
            for (const Rational& ga : fr) {
                Pt PA = rp(B.x + al * (C.x - B.x), B.y + al * (C.y - B.y));
                Pt PB = rp(C.x + be * (A.x - C.x), C.y + be * (A.y - C.y));
                Pt PC = rp(A.x + ga * (B.x - A.x), A.y + ga * (B.y - A.y));
                Pt x, y, z, w, v;
                if (!line_inter(A, PA, B, PB, x)) continue;
                if (!line_inter(B, PB, C, PC, y)) continue;
                if (!line_inter(C, PC, A, PA, z)) continue;
                if (!line_inter(A, y, B, z, w)) continue;
                if (!interior(w)) continue;
                for (int variant = 0; variant < 2; ++variant) {
                    const Pt& p = variant == 0 ? B : A;
                    const Pt& q = variant == 0 ? PB : PA;
                    if (!line_inter(C, w, p, q, v)) continue;
                    if (!on_open_seg(C, w, v)) continue;
                    if (!interior(v)) continue;
                    seeds.push_back({A, B, C, x, y, z, w, v});
                }
            }
    std::fprintf(stderr, "seeds: %zu\n", seeds.size());

    std::set<std::string> solution_keys;
    std::set<std::string> seen;
    int hits = 0;
    for (size_t i = 0; i < seeds.size() && hits < max_hits; ++i) {
        auto sols = repair(seeds[i], budget, maxn, seen);
        for (auto& sol : sols) {
            auto key = key_of(sol);
            if (!solution_keys.insert(key).second) continue;
            auto ints = scale_int(sol);
            for (auto& [ix, iy] : ints) std::printf("%s %s ", ix.get_str().c_str(), iy.get_str().c_str());
            std::printf("\n");
            std::fflush(stdout);
            ++hits;
        }
        if (i % 25 == 24) std::fprintf(stderr, "  seed %zu/%zu, hits %d\n", i + 1, seeds.size(), hits);
    }
    std::fprintf(stderr, "total hits: %d\n", hits);
    return hits > 0 ? 0 : 1;
}
