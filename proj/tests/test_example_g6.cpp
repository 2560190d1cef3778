#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvg/example_g6.hpp"

using namespace pvg;

TEST_CASE("build_g6 counts and declared joins") {
    auto e = build_g6();
    CHECK(e.l1.size() == 10);
    CHECK(e.l3.size() == 23);
    CHECK(e.joins.size() == 38);
    CHECK(e.l2.size() == 10 * 23 - 38);
    CHECK(e.points.size() == 10 + 23 + 192);

    // r3 is declared adjacent to exactly p1, p3, p8
    std::set<int> r3;
    for (auto [u, w] : e.joins)
        if (w == e.r(3)) r3.insert(u);
    CHECK(r3 == std::set<int>{e.p(1), e.p(3), e.p(8)});

    // b points are never joined
    for (int i = 1; i <= 9; ++i)
        for (auto [u, w] : e.joins) CHECK(w != e.b(i));

    CHECK(e.role[e.p(1)] == "p1");
    CHECK(e.role[e.q(4)] == "q4");
    CHECK(e.role[e.r(10)] == "r10");
    CHECK(e.line[e.l2[0]] == "l2");
}

TEST_CASE("each blocker lies on exactly one cross segment") {
    auto e = build_g6();
    for (size_t k = 0; k < e.l2.size(); ++k) {
        int count = 0;
        std::pair<int, int> hit{-1, -1};
        for (int u : e.l1)
            for (int w : e.l3)
                if (strictly_between(e.points[u], e.points[e.l2[k]], e.points[w])) {
                    ++count;
                    hit = {u, w};
                }
        CHECK(count == 1);
        CHECK(hit == e.blocked_pairs[k]);
    }
}

TEST_CASE("verify_g6 establishes omega 4 and chi 6") {
    auto e = build_g6();
    auto rep = verify_g6(e);
    CHECK(rep.cross_match);
    CHECK(rep.l2_complete);
    CHECK(rep.l2_path);
    CHECK(rep.triangle_free_sub);
    CHECK(rep.sub_not_3col);
    CHECK(rep.b_separators);
    CHECK(rep.chi_sub == 4);
    CHECK(rep.omega_full == 4);
    CHECK(rep.chi_full == 6);
    CHECK(rep.six_valid);
}
