#include "doctest.h"

#include <stdexcept>

#include "scm/graph6.hpp"
#include "test_helpers.hpp"

using namespace scm;
using testing::random_graph;
using testing::reference_graph6;

TEST_CASE("graph6 hand-computed values") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(Graph::complete(2)) == "A_");
}

TEST_CASE("graph6 agrees with an independent reference encoder") {
    CHECK(encode_graph6(Graph::path(4)) == reference_graph6(Graph::path(4)));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = static_cast<int>(seed % 21);
        Graph g = random_graph(n, (seed % 3 + 1) * 0.25, 5000 + seed);
        CHECK(encode_graph6(g) == reference_graph6(g));
    }
}

TEST_CASE("graph6 round trip") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int n = static_cast<int>(seed % 20) + 1;
        Graph g = random_graph(n, 0.5, 900 + seed);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long form round trips past 62 vertices") {
    Graph g = random_graph(80, 0.1, 424242);
    std::string enc = encode_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(decode_graph6(enc) == g);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6("\x1f"), std::invalid_argument);        // header below offset
    CHECK_THROWS_AS(decode_graph6("D"), std::invalid_argument);           // truncated bit field
    CHECK_THROWS_AS(decode_graph6("Br"), std::invalid_argument);          // nonzero padding
    CHECK_THROWS_AS(decode_graph6(encode_graph6(Graph::complete(4)) + "?"), std::invalid_argument);
    CHECK(decode_graph6("Bw\n") == Graph::complete(3)); // trailing newline accepted
}
