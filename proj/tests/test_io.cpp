#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pvg/io.hpp"

using namespace pvg;

TEST_CASE("point set round trip") {
    std::istringstream in("# header\n0 0\n1/2 3\n\n-2 7/5\n");
    auto ps = read_point_set(in);
    REQUIRE(ps.size() == 3);
    CHECK(ps[1].x == Rational(1, 2));
    CHECK(ps[2].y == Rational(7, 5));

    std::ostringstream out;
    write_point_set(out, ps);
    std::istringstream back(out.str());
    auto ps2 = read_point_set(back);
    REQUIRE(ps2.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(ps[i] == ps2[i]);
}

TEST_CASE("point set errors") {
    std::istringstream bad_arity("1 2 3\n");
    CHECK_THROWS_AS(read_point_set(bad_arity), ParseError);
    std::istringstream bad_number("1 x\n");
    CHECK_THROWS_AS(read_point_set(bad_number), ParseError);
    std::istringstream dup("1 2\n1 2\n");
    CHECK_THROWS_AS(read_point_set(dup), DuplicatePoints);
}

TEST_CASE("graph round trip") {
    VisibilityGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(0, 2);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    auto g2 = read_graph(in);
    CHECK(g2.num_vertices() == 4);
    CHECK(g2.num_edges() == 3);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(g.adjacent(i, j) == g2.adjacent(i, j));
}

TEST_CASE("graph errors") {
    std::istringstream bad_header("x\n");
    CHECK_THROWS_AS(read_graph(bad_header), ParseError);
    std::istringstream bad_edge("2 1\n1 0\n");
    CHECK_THROWS_AS(read_graph(bad_edge), ParseError);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(truncated), ParseError);
}

TEST_CASE("colouring round trip") {
    Colouring c{2, 0, 1, 1};
    std::ostringstream out;
    write_colouring(out, c);
    std::istringstream in(out.str());
    CHECK(read_colouring(in, 4) == c);

    std::istringstream missing("0 1\n2 0\n");
    CHECK_THROWS_AS(read_colouring(missing, 3), ParseError);
}
