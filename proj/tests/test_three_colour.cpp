#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pvg/three_colour.hpp"

using namespace pvg;

static Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

TEST_CASE("two_colourable") {
    PointSet line{{pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)}};
    auto c = two_colourable(line);
    REQUIRE(c.has_value());
    CHECK(is_valid_colouring(build_pvg(line), *c));
    CHECK(num_colours_used(*c) == 2);

    PointSet tri{{pt(0, 0), pt(2, 0), pt(1, 2)}};
    CHECK_FALSE(two_colourable(tri).has_value());
}

TEST_CASE("classify_form") {
    PointSet line{{pt(0, 0), pt(1, 0), pt(2, 0)}};
    CHECK(classify_form(line).tag == FormTag::AllCollinear);

    PointSet one_off{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 2)}};
    auto f = classify_form(one_off);
    CHECK(f.tag == FormTag::OneOffLine);
    REQUIRE(f.witnesses.size() == 1);
    CHECK(f.witnesses[0] == 3);

    // two off points blocked from each other by a line point
    PointSet invis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(1, -1)}};
    CHECK(classify_form(invis).tag == FormTag::TwoInvisibleOffPath);

    PointSet vis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1), pt(1, 1)}};
    CHECK(classify_form(vis).tag == FormTag::TwoVisibleOffPath);

    PointSet octa{{pt(0, 0), pt(0, 4), pt(1, 1), pt(2, 2), pt(3, 1), pt(4, 1)}};
    CHECK(classify_form(octa).tag == FormTag::Octahedron);

    PointSet grid;
    for (long y = 0; y < 3; ++y)
        for (long x = 0; x < 3; ++x) grid.points.push_back(pt(x, y));
    CHECK(classify_form(grid).tag == FormTag::None);
}

TEST_CASE("three_colourable fixtures") {
    PointSet invis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(1, -1)}};
    auto c = three_colourable(invis);
    REQUIRE(c.has_value());
    CHECK(is_valid_colouring(build_pvg(invis), *c));
    CHECK(num_colours_used(*c) <= 3);

    PointSet octa{{pt(0, 0), pt(0, 4), pt(1, 1), pt(2, 2), pt(3, 1), pt(4, 1)}};
    auto co = three_colourable(octa);
    REQUIRE(co.has_value());
    CHECK(is_valid_colouring(build_pvg(octa), *co));
    CHECK(num_colours_used(*co) == 3);

    PointSet vis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1), pt(1, 1)}};
    CHECK_FALSE(three_colourable(vis).has_value());

    PointSet grid;
    for (long y = 0; y < 3; ++y)
        for (long x = 0; x < 3; ++x) grid.points.push_back(pt(x, y));
    CHECK_FALSE(three_colourable(grid).has_value());
}

TEST_CASE("differential against search oracle") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::set<std::pair<long, long>> used;
        PointSet ps;
        while (static_cast<int>(used.size()) < n) {
            long x = rng() % 5, y = rng() % 5;
            if (used.insert({x, y}).second) ps.points.push_back(pt(x, y));
        }
        auto g = build_pvg(ps);
        CHECK(two_colourable(ps).has_value() == k_colourable(g, 2).has_value());
        CHECK(three_colourable(ps).has_value() == k_colourable(g, 3).has_value());
    }
}

TEST_CASE("unique_3colouring_of_reduced") {
    PointSet grid;
    for (long y = 0; y < 3; ++y)
        for (long x = 0; x < 3; ++x) grid.points.push_back(pt(x, y));
    CHECK_THROWS_AS(unique_3colouring_of_reduced(grid), NotReduced);

    // reduced, 3-colourable, with a K3: colouring is unique up to renaming
    PointSet invis{{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(1, -1)}};
    auto c = unique_3colouring_of_reduced(invis);
    REQUIRE(c.has_value());
    auto g = build_pvg(invis);
    CHECK(is_valid_colouring(g, *c));
    std::set<Colouring> classes;
    for (Colouring canon : enumerate_colourings(g, 3, 10000)) {
        std::vector<int> remap(8, -1);
        int next = 0;
        for (int& col : canon) {
            if (remap[col] < 0) remap[col] = next++;
            col = remap[col];
        }
        classes.insert(canon);
    }
    CHECK(classes.size() == 1);
    CHECK(*classes.begin() == *c);
}
