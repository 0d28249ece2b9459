#include "doctest.h"

#include "scm/canonical.hpp"
#include "scm/graph6.hpp"
#include "test_helpers.hpp"

using namespace scm;
using testing::brute_isomorphic;
using testing::min_perm_canonical_bits;
using testing::random_graph;

TEST_CASE("canonical form classifies exactly like brute-force permutation minimization") {
    // The two canonical forms pick different representatives; what must agree
    // is the partition into isomorphism classes.
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        Graph a = random_graph(n, (seed % 4 + 1) * 0.2, 31 + seed);
        Graph b = random_graph(n, (seed % 4 + 1) * 0.2, 7100 + seed);
        CHECK((canonical_g6(a) == canonical_g6(b)) ==
              (min_perm_canonical_bits(a) == min_perm_canonical_bits(b)));

        CanonicalForm cf = canonical_form(a);
        CHECK(relabel(a, cf.relabeling) == cf.graph);
        CHECK(cf.g6 == encode_graph6(cf.graph));
        // the canonical copy stays in the input's isomorphism class
        CHECK(min_perm_canonical_bits(cf.graph) == min_perm_canonical_bits(a));
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);
        Graph g = random_graph(n, 0.5, 800 + seed);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_g6(g) == canonical_g6(relabel(g, perm)));
    }
}

TEST_CASE("isomorphic agrees with a brute-force isomorphism test") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        Graph a = random_graph(n, 0.5, seed);
        Graph b = random_graph(n, 0.5, seed + 1000);
        CHECK(isomorphic(a, b) == brute_isomorphic(a, b));
    }
    CHECK(isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));
    CHECK_FALSE(isomorphic(Graph::path(4), Graph::cycle(4)));
}
