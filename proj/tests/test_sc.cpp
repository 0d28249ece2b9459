#include "doctest.h"

#include <set>
#include <stdexcept>

#include "scm/antimorphism.hpp"
#include "scm/canonical.hpp"
#include "scm/graph6.hpp"
#include "test_helpers.hpp"

using namespace scm;
using testing::brute_isomorphic;
using testing::min_perm_canonical_bits;
using testing::random_graph;

using testing::lexmin_canon;
using testing::raw_sc_candidates;

namespace {

Graph bull() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }

} // namespace

TEST_CASE("verify_antimorphism on hand-checked certificates") {
    // C5 with sigma = (0)(1 2 4 3)
    Antimorphism c5_sigma{{0, 2, 4, 1, 3}};
    CHECK(verify_antimorphism(Graph::cycle(5), c5_sigma));

    // P4 with sigma = (0 1 3 2)
    Antimorphism p4_sigma{{1, 3, 0, 2}};
    CHECK(verify_antimorphism(Graph::path(4), p4_sigma));

    // K4 admits no antimorphism at all
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK_FALSE(verify_antimorphism(Graph::complete(4), Antimorphism{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(verify_antimorphism(Graph::path(4), Antimorphism{{0, 0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_antimorphism(Graph::path(4), Antimorphism{{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("find_antimorphism") {
    auto p4 = find_antimorphism(Graph::path(4));
    REQUIRE(p4.has_value());
    CHECK(verify_antimorphism(Graph::path(4), *p4));

    CHECK_FALSE(find_antimorphism(Graph::complete(3)).has_value());
    CHECK_FALSE(find_antimorphism(Graph::complete(4)).has_value());

    // deterministic for a fixed input
    CHECK(find_antimorphism(Graph::cycle(5))->sigma == find_antimorphism(Graph::cycle(5))->sigma);
}

TEST_CASE("find_antimorphism succeeds exactly when G is isomorphic to its complement") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        Graph g = random_graph(n, 0.5, 7000 + seed);
        bool sc = brute_isomorphic(g, complement(g));
        auto sigma = find_antimorphism(g);
        CHECK(sigma.has_value() == sc);
        if (sigma)
            CHECK(verify_antimorphism(g, *sigma));
    }
    // and on graphs that are SC by construction
    for (int n : {8, 9}) {
        Graph g = generate_sc(n, 17).graph;
        REQUIRE(brute_isomorphic(g, complement(g)));
        CHECK(find_antimorphism(g).has_value());
    }
}

TEST_CASE("the SC graphs on 4 and 5 vertices, by brute force over all labeled graphs") {
    // n = 4: all 64 labeled graphs, P4 is the unique SC graph
    std::set<std::vector<int>> classes4;
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int k = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++k)
                if ((mask >> k) & 1)
                    g.add_edge(u, v);
        if (brute_isomorphic(g, complement(g)))
            classes4.insert(min_perm_canonical_bits(g));
    }
    CHECK(classes4.size() == 1);
    CHECK(classes4.count(min_perm_canonical_bits(Graph::path(4))) == 1);

    // n = 5: all 1024 labeled graphs, exactly C5 and the bull
    std::set<std::vector<int>> classes5;
    for (int mask = 0; mask < 1024; ++mask) {
        Graph g(5);
        int k = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++k)
                if ((mask >> k) & 1)
                    g.add_edge(u, v);
        if (brute_isomorphic(g, complement(g)))
            classes5.insert(min_perm_canonical_bits(g));
    }
    CHECK(classes5.size() == 2);
    CHECK(classes5.count(min_perm_canonical_bits(Graph::cycle(5))) == 1);
    CHECK(classes5.count(min_perm_canonical_bits(bull())) == 1);
}

TEST_CASE("generate_sc") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        ScGraph sc = generate_sc(5, seed);
        CHECK(verify_antimorphism(sc.graph, sc.sigma));
        CHECK((isomorphic(sc.graph, Graph::cycle(5)) || isomorphic(sc.graph, bull())));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(isomorphic(generate_sc(4, seed).graph, Graph::path(4)));

    CHECK_THROWS_AS(generate_sc(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_sc(7, 3), std::invalid_argument);
    CHECK(generate_sc(1, 0).graph.order() == 1);

    // reproducible per (n, seed)
    CHECK(generate_sc(13, 11).graph == generate_sc(13, 11).graph);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (int n : {8, 9, 12, 13}) {
            ScGraph sc = generate_sc(n, seed);
            CHECK(verify_antimorphism(sc.graph, sc.sigma));
            CHECK(valid_antimorphism_cycle_type(sc.sigma.sigma));
        }
    }
}

TEST_CASE("pair orbits alternate and have even length") {
    for (int n : {4, 5, 8, 9, 12}) {
        ScGraph sc = generate_sc(n, 3);
        for (const auto& orbit : pair_orbits(sc.sigma.sigma)) {
            CHECK(orbit.size() % 2 == 0);
            int edges = 0;
            for (auto [u, v] : orbit)
                if (sc.graph.has_edge(u, v))
                    ++edges;
            CHECK(edges * 2 == static_cast<int>(orbit.size()));
        }
    }
}

TEST_CASE("enumerate_sc counts 1, 2, 10, 36 cross-checked by two canonical forms") {
    const std::vector<std::pair<int, std::size_t>> expected{{1, 1}, {4, 1}, {5, 2}, {8, 10}, {9, 36}};
    for (auto [n, count] : expected) {
        auto graphs = enumerate_sc(n);
        CHECK(graphs.size() == count);
        for (const auto& sc : graphs) {
            CHECK(verify_antimorphism(sc.graph, sc.sigma));
            CHECK(valid_antimorphism_cycle_type(sc.sigma.sigma));
        }
        // independent pipeline: rebuild the raw candidate universe and dedupe
        // with the lexicographic-minimization canonical form
        std::set<std::vector<int>> classes;
        for (const Graph& g : raw_sc_candidates(n))
            classes.insert(lexmin_canon(g));
        CHECK(classes.size() == count);
    }
    CHECK_THROWS_AS(enumerate_sc(6), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sc(12), std::invalid_argument); // needs allow_large
}

TEST_CASE("enumerate_sc output is sorted and deduplicated by canonical graph6") {
    auto graphs = enumerate_sc(8);
    std::vector<std::string> keys;
    for (const auto& sc : graphs) {
        CHECK(canonical_g6(sc.graph) == encode_graph6(sc.graph)); // emitted in canonical form
        keys.push_back(canonical_g6(sc.graph));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}
