#include "doctest.h"

#include <stdexcept>

#include "scm/antimorphism.hpp"
#include "scm/constructions.hpp"
#include "scm/minors.hpp"

using namespace scm;

TEST_CASE("five_cycle base instances") {
    Construction c5 = five_cycle(Graph(1), 1);
    CHECK(c5.graph == Graph::cycle(5));
    CHECK(verify_antimorphism(c5.graph, c5.sigma));

    Construction p4 = five_cycle(Graph(0), 1);
    CHECK(p4.graph == Graph::path(4));
    CHECK(verify_antimorphism(p4.graph, p4.sigma));
    CHECK(hadwiger_oracle(p4.graph) == 2);

    Construction big = five_cycle(Graph::path(4), 2);
    CHECK(big.graph.order() == 12);
    CHECK(verify_antimorphism(big.graph, big.sigma));
}

TEST_CASE("five_cycle degenerate parameters and errors") {
    Graph x = Graph::cycle(5);
    Construction same = five_cycle(x, 0);
    CHECK(same.graph == x);
    CHECK_THROWS_AS(five_cycle(Graph(0), 0), std::invalid_argument);
    CHECK_THROWS_AS(five_cycle(Graph::complete(3), 1), std::invalid_argument); // X not SC
    CHECK_THROWS_AS(five_cycle(Graph(1), -1), std::invalid_argument);
    // supplied certificate must verify
    CHECK_THROWS_AS(five_cycle(Graph::cycle(5), 1, Antimorphism{{0, 1, 2, 3, 4}}),
                    std::invalid_argument);
}

TEST_CASE("five_cycle block degree formulas") {
    for (auto& [x, q] : std::vector<std::pair<Graph, int>>{{Graph::path(4), 2}, {Graph(1), 3}}) {
        Construction c = five_cycle(x, q);
        const int r = x.order();
        for (int v = c.blocks.e1.begin; v < c.blocks.e1.end; ++v)
            CHECK(c.graph.degree(v) == q + r);
        for (int v = c.blocks.e2.begin; v < c.blocks.e2.end; ++v)
            CHECK(c.graph.degree(v) == q + r);
        for (int v = c.blocks.k1.begin; v < c.blocks.k1.end; ++v)
            CHECK(c.graph.degree(v) == 3 * q - 1);
        for (int v = c.blocks.k2.begin; v < c.blocks.k2.end; ++v)
            CHECK(c.graph.degree(v) == 3 * q - 1);
        for (int v = 0; v < r; ++v)
            CHECK(c.graph.degree(v) == x.degree(v) + 2 * q);
    }
}

TEST_CASE("table1_params") {
    auto r16 = table1_params(16);
    REQUIRE(r16.has_value());
    CHECK(r16->r == 4);
    CHECK(r16->q == 3);
    CHECK(r16->h == 9);

    auto r20 = table1_params(20);
    REQUIRE(r20.has_value());
    CHECK(r20->r == 4);
    CHECK(r20->q == 4);
    CHECK(r20->h == 12);

    CHECK_FALSE(table1_params(12).has_value());
    CHECK_FALSE(table1_params(17).has_value());
    CHECK_FALSE(table1_params(32).has_value());

    CHECK_THROWS_AS(table1_params(6), std::invalid_argument);
    CHECK_THROWS_AS(table1_params(1), std::invalid_argument);
}

TEST_CASE("table 1 tightness arithmetic: 2q + min(q,r) reaches floor(3n/5)") {
    for (int s : {0, 1})
        for (int res : {0, 1, 4, 5, 8, 9, 13, 16}) {
            int n = 20 * s + res;
            if (n < 4)
                continue;
            auto row = table1_params(n);
            REQUIRE(row.has_value());
            CHECK(2 * row->q + std::min(row->q, row->r) == 3 * n / 5);
        }
}

TEST_CASE("floor-gap arithmetic of the inductive step") {
    for (int n = 4; n <= 200; ++n) {
        if (n % 4 != 0 && n % 4 != 1)
            continue;
        CHECK((n + 5) / 2 - (n + 1) / 2 == 2);
        int gap = 3 * (n + 4) / 5 - 3 * n / 5;
        CHECK(gap >= 2);
        CHECK(gap <= 3);
    }
}

TEST_CASE("vertex_added at s = 0") {
    Construction c = vertex_added(0, Graph::path(4));
    CHECK(c.graph.order() == 17);
    REQUIRE(c.blocks.apex.has_value());
    const int a = *c.blocks.apex;
    CHECK(c.graph.degree(a) == 8); // 2 copies of K_3 plus half of X_4
    CHECK(c.sigma.sigma[a] == a);
    CHECK(verify_antimorphism(c.graph, c.sigma));
    CHECK(c.blocks.small_half.count() == 2);
    for (int v : c.blocks.small_half.to_vector())
        CHECK(c.graph.has_edge(a, v));

    // enumerate_sc(4) has exactly one choice of X
    CHECK(enumerate_sc(4).size() == 1);

    CHECK_THROWS_AS(vertex_added(0, Graph::cycle(4)), std::invalid_argument); // not SC
    CHECK_THROWS_AS(vertex_added(0, Graph::cycle(5)), std::invalid_argument); // wrong order
}

TEST_CASE("vertex_added at s = 1 verifies") {
    ScGraph x = generate_sc(8, 0);
    Construction c = vertex_added(1, x.graph, x.sigma);
    CHECK(c.graph.order() == 37);
    CHECK(verify_antimorphism(c.graph, c.sigma));
    CHECK(c.blocks.small_half.count() == 4);
}

TEST_CASE("extend grows by four vertices and preserves self-complementarity") {
    Graph g = Graph::cycle(5);
    for (int round = 0; round < 3; ++round) {
        Construction c = extend(g);
        CHECK(c.graph.order() == g.order() + 4);
        CHECK(verify_antimorphism(c.graph, c.sigma));
        g = c.graph;
    }
}

TEST_CASE("extend raises the Hadwiger number by exactly two on the 5-vertex corpus") {
    CHECK(hadwiger(extend(Graph::path(4)).graph).lower == 4);
    CHECK(hadwiger(extend(Graph::cycle(5)).graph).lower == 5);
    for (const auto& sc : enumerate_sc(5)) {
        int h = hadwiger_oracle(sc.graph);
        auto ext = hadwiger(extend(sc.graph, sc.sigma).graph);
        REQUIRE(ext.exact);
        CHECK(ext.lower == h + 2);
    }
}
