#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "pvg/four_colour.hpp"

using namespace pvg;

static Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

static PointSet grid3x3() {
    PointSet ps;
    for (long y = 0; y < 3; ++y)
        for (long x = 0; x < 3; ++x) ps.points.push_back(pt(x, y));
    return ps;
}

static Colouring canon(Colouring c) {
    std::vector<int> remap(16, -1);
    int next = 0;
    for (int& col : c) {
        if (remap[col] < 0) remap[col] = next++;
        col = remap[col];
    }
    return c;
}

// reduced non-3-colourable fixtures found by tools/reduced_search
static std::vector<PointSet> load_fixtures(size_t max_count) {
    std::ifstream in(FIXTURE_FILE);
    REQUIRE(in.good());
    std::vector<PointSet> out;
    std::string line;
    while (out.size() < max_count && std::getline(in, line)) {
        std::istringstream row(line);
        PointSet ps;
        long long x, y;
        while (row >> x >> y) ps.points.push_back(pt(x, y));
        if (ps.size() > 0) out.push_back(std::move(ps));
    }
    return out;
}

TEST_CASE("reduce on the 3x3 grid") {
    auto ps = grid3x3();
    auto trace = reduce(ps);
    auto g = build_pvg(ps);
    CHECK(trace.deletions.size() + trace.reduced_indices.size() == 9);
    for (const auto& d : trace.deletions) {
        for (int a = 0; a < 3; ++a) {
            CHECK(g.adjacent(d.vertex, d.witness[a]));
            for (int b = a + 1; b < 3; ++b) CHECK(g.adjacent(d.witness[a], d.witness[b]));
        }
    }
    CHECK(reduced_is_reduced(trace.reduced_set()));
}

TEST_CASE("reduced_is_reduced") {
    CHECK_FALSE(reduced_is_reduced(grid3x3()));
    PointSet invis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(1, -1)}};
    CHECK(reduced_is_reduced(invis));
}

TEST_CASE("fixture corpus is reduced, K4, hull structure holds") {
    auto fixtures = load_fixtures(40);
    REQUIRE(fixtures.size() == 40);
    for (const auto& ps : fixtures) {
        CAPTURE(ps.size());
        auto g = build_pvg(ps);
        CHECK(has_k4(g).has_value());
        CHECK(reduced_is_reduced(ps));
        CHECK_FALSE(k_colourable(g, 3).has_value());
        auto rep = hull_structure_checks(ps);
        CHECK(rep.hull_vertex_count == 3);
        CHECK(rep.hull_points_equal_vertices);
        CHECK(rep.two_big_rays_each);
    }
}

TEST_CASE("eight_candidates matches exhaustive 4-colouring classes") {
    auto fixtures = load_fixtures(40);
    for (const auto& ps : fixtures) {
        auto g = build_pvg(ps);
        std::set<Colouring> oracle;
        for (const auto& raw : enumerate_colourings(g, 4, 100000)) oracle.insert(canon(raw));
        REQUIRE(!oracle.empty());
        CHECK(oracle.size() <= 8);

        auto cands = eight_candidates(ps);
        CHECK(cands.size() <= 8);
        std::set<Colouring> got;
        for (const auto& c : cands) {
            CHECK(is_valid_colouring(g, c.assignment));
            got.insert(canon(c.assignment));
        }
        CHECK(got == oracle);
    }
}

TEST_CASE("hull_structure_checks rejects a fat hull") {
    PointSet square{{pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(1, 2), pt(2, 1)}};
    CHECK_THROWS_AS(hull_structure_checks(square), StructuralViolation);
}

TEST_CASE("enumerate_reduced_plus_one") {
    // line plus apex is reduced and 3-colourable; the extra point sees the
    // apex and all line points except one, hidden behind the apex
    PointSet ps_r{{pt(1, 0), pt(2, 0), pt(3, 0), pt(4, 0), pt(5, 0), pt(2, 1)}};
    CHECK(reduced_is_reduced(ps_r));
    Point p = pt(0, 2);
    auto cands = enumerate_reduced_plus_one(ps_r, p);
    CHECK(cands.size() == 3);

    PointSet all = ps_r;
    all.points.push_back(p);
    auto g = build_pvg(all);
    std::set<Colouring> oracle;
    for (const auto& raw : enumerate_colourings(g, 4, 100000)) oracle.insert(canon(raw));
    std::set<Colouring> got;
    for (const auto& c : cands) {
        CHECK(is_valid_colouring(g, c.assignment));
        got.insert(canon(c.assignment));
    }
    CHECK(got == oracle);

    CHECK_THROWS_AS(enumerate_reduced_plus_one(grid3x3(), pt(5, 5)), NotReduced);
}

TEST_CASE("decide_four_colouring fixtures") {
    // 3-colourable input returns at most 3 colours
    PointSet invis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(1, -1)}};
    auto c3 = decide_four_colouring(invis);
    REQUIRE(c3.has_value());
    CHECK(num_colours_used(*c3) <= 3);

    auto grid = grid3x3();
    auto c4 = decide_four_colouring(grid);
    REQUIRE(c4.has_value());
    CHECK(is_valid_colouring(build_pvg(grid), *c4));
    CHECK(num_colours_used(*c4) == 4);

    for (const auto& ps : load_fixtures(25)) {
        auto c = decide_four_colouring(ps);
        REQUIRE(c.has_value());
        CHECK(is_valid_colouring(build_pvg(ps), *c));
        CHECK(num_colours_used(*c) == 4);
    }
}

TEST_CASE("decide_four_colouring differential on random lattice sets") {
    std::mt19937 rng(20240818);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        std::set<std::pair<long, long>> used;
        PointSet ps;
        while (static_cast<int>(used.size()) < n) {
            long x = rng() % 6, y = rng() % 6;
            if (used.insert({x, y}).second) ps.points.push_back(pt(x, y));
        }
        auto g = build_pvg(ps);
        auto mine = decide_four_colouring(ps);
        auto oracle = k_colourable(g, 4);
        CAPTURE(trial);
        CHECK(mine.has_value() == oracle.has_value());
        if (mine) {
            CHECK(is_valid_colouring(g, *mine));
            CHECK(num_colours_used(*mine) <= 4);
        }
    }
}
