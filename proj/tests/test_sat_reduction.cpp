#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pvg/sat_reduction.hpp"

using namespace pvg;

TEST_CASE("parse_dimacs") {
    auto f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::array<int, 3>{1, 2, 3});

    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -1 0\n"), NotThreeSat);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 1 2 0\n"), NotThreeSat);

    auto f2 = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f2.clauses.size() == 2);

    CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 x 0\n"), ParseError);
}

TEST_CASE("brute_force_sat") {
    auto sat = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    std::vector<bool> model;
    CHECK(brute_force_sat(sat, &model));
    CHECK(eval_clause(sat.clauses[0], model));

    std::string all_signs = "p cnf 3 8\n";
    for (int bits = 0; bits < 8; ++bits) {
        for (int i = 0; i < 3; ++i)
            all_signs += std::to_string(((bits >> i) & 1) ? -(i + 1) : (i + 1)) + " ";
        all_signs += "0\n";
    }
    CHECK_FALSE(brute_force_sat(parse_dimacs(all_signs)));
}

TEST_CASE("build_xi counts and wiring") {
    auto f0 = parse_dimacs("p cnf 1 0\n");
    auto xi0 = build_xi(f0);
    CHECK(xi0.num_vertices() == 4);
    CHECK(xi0.edges.size() == 4);  // pr-pb, pb-x1, pb-~x1, x1-~x1

    auto f1 = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    auto xi1 = build_xi(f1);
    CHECK(xi1.num_vertices() == 14);
    auto g = xi1.graph();
    CHECK(g.adjacent(XiGraph::pb(), XiGraph::pr()));
    for (int i = 1; i <= 3; ++i) {
        CHECK(g.adjacent(XiGraph::pb(), xi1.var_vertex(i)));
        CHECK(g.adjacent(xi1.var_vertex(i), xi1.var_vertex(-i)));
    }
    CHECK(g.adjacent(xi1.clause_vertex(0, 9), XiGraph::pr()));
    CHECK(g.adjacent(xi1.clause_vertex(0, 9), XiGraph::pb()));
    CHECK(g.adjacent(xi1.var_vertex(1), xi1.clause_vertex(0, 3)));
    CHECK(g.adjacent(xi1.var_vertex(3), xi1.clause_vertex(0, 8)));
}

TEST_CASE("clause gadget behaves as an OR") {
    // pin the inputs red or green; the gadget extends to a proper 3-colouring
    // (p9 necessarily green, being adjacent to pr and pb) iff an input is green
    auto f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    auto xi = build_xi(f);
    for (int bits = 0; bits < 8; ++bits) {
        Colouring col(xi.num_vertices(), -1);
        col[XiGraph::pr()] = 0;
        col[XiGraph::pb()] = 1;
        bool any_green = false;
        for (int i = 1; i <= 3; ++i) {
            bool green = (bits >> (i - 1)) & 1;
            any_green |= green;
            col[xi.var_vertex(i)] = green ? 2 : 0;
            col[xi.var_vertex(-i)] = green ? 0 : 2;
        }
        CAPTURE(bits);
        CHECK(detail::colour_gadget(xi, 0, col) == any_green);
        if (any_green) CHECK(col[xi.clause_vertex(0, 9)] == 2);
    }
}

TEST_CASE("build_zeta counts") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            std::string text = "p cnf " + std::to_string(std::max(n, 3)) + " " + std::to_string(m) + "\n";
            int nv = std::max(n, 3);
            for (int j = 0; j < m; ++j) {
                std::set<int> vars;
                while (vars.size() < 3) vars.insert(1 + static_cast<int>(rng() % nv));
                for (int v : vars) text += std::to_string(rng() % 2 ? v : -v) + " ";
                text += "0\n";
            }
            auto f = parse_dimacs(text);
            auto z = build_zeta(f);
            CAPTURE(nv);
            CAPTURE(m);
            CHECK(static_cast<int>(z.l1.size()) == 3 * nv + 4 * m - 1);
            CHECK(static_cast<int>(z.l3.size()) == 6 * m + 2);
            // actual cross edges: 2n + 10m (the source text states 9m + 2n)
            CHECK(static_cast<int>(z.cross_edges.size()) == 2 * nv + 10 * m);
            CHECK(z.l2.size() == z.l1.size() * z.l3.size() - z.cross_edges.size());
            CHECK(z.points.size() == z.l1.size() + z.l2.size() + z.l3.size());
        }
}

TEST_CASE("each blocker lies on exactly one cross segment") {
    auto f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    auto z = build_zeta(f);
    for (size_t k = 0; k < z.l2.size(); ++k) {
        int count = 0;
        std::pair<int, int> hit{-1, -1};
        for (int u : z.l1)
            for (int w : z.l3)
                if (strictly_between(z.points[u], z.points[z.l2[k]], z.points[w])) {
                    ++count;
                    hit = {u, w};
                }
        CHECK(count == 1);
        CHECK(hit == z.blocked_pairs[k]);
    }
}

TEST_CASE("verify_reduction on a satisfiable formula") {
    auto f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    auto z = build_zeta(f);
    auto rep = verify_reduction(f, z);
    CHECK(rep.satisfiable);
    CHECK(rep.sub3col);
    CHECK(rep.cross_edges_match);
    CHECK(rep.l2_complete);
    CHECK(rep.l2_path);
    CHECK(rep.full_checked);
    CHECK(rep.five_col_valid);
    CHECK(rep.equivalent);
    REQUIRE(rep.five_colouring.has_value());
    CHECK(num_colours_used(*rep.five_colouring) == 5);
}

TEST_CASE("verify_reduction equivalence on random formulas") {
    std::mt19937 rng(20240819);
    for (int trial = 0; trial < 6; ++trial) {
        int m = 1 + static_cast<int>(rng() % 3);
        std::string text = "p cnf 3 " + std::to_string(m) + "\n";
        for (int j = 0; j < m; ++j) {
            std::set<int> vars;
            while (vars.size() < 3) vars.insert(1 + static_cast<int>(rng() % 3));
            for (int v : vars) text += std::to_string(rng() % 2 ? v : -v) + " ";
            text += "0\n";
        }
        auto f = parse_dimacs(text);
        auto z = build_zeta(f);
        auto rep = verify_reduction(f, z);
        CAPTURE(text);
        CHECK(rep.equivalent);
        CHECK(rep.cross_edges_match);
        CHECK(rep.l2_complete);
        CHECK(rep.l2_path);
        if (rep.satisfiable) CHECK(rep.five_col_valid);
    }
}

TEST_CASE("verify_reduction on the unsatisfiable all-signs formula") {
    std::string text = "p cnf 3 8\n";
    for (int bits = 0; bits < 8; ++bits) {
        for (int i = 0; i < 3; ++i)
            text += std::to_string(((bits >> i) & 1) ? -(i + 1) : (i + 1)) + " ";
        text += "0\n";
    }
    auto f = parse_dimacs(text);
    auto z = build_zeta(f);
    auto rep = verify_reduction(f, z);
    CHECK_FALSE(rep.satisfiable);
    CHECK_FALSE(rep.sub3col);
    CHECK(rep.cross_edges_match);
    CHECK(rep.l2_complete);
    CHECK(rep.l2_path);
    CHECK(rep.equivalent);
}
