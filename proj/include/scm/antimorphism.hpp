#ifndef SCM_ANTIMORPHISM_HPP
#define SCM_ANTIMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scm/graph.hpp"

namespace scm {

// Complementing permutation: sigma[u]sigma[v] is a non-edge exactly when uv
// is an edge. Its cycle lengths are all divisible by 4, except one fixed
// point when n is odd.
struct Antimorphism {
    std::vector<int> sigma;
    int size() const { return static_cast<int>(sigma.size()); }
    int operator()(int v) const { return sigma[v]; }
};

struct ScGraph {
    Graph graph;
    Antimorphism sigma;
};

// True iff the edge-flip condition holds for every pair. Throws on a size
// mismatch or when sigma is not a permutation.
bool verify_antimorphism(const Graph& g, const Antimorphism& sigma);

// Backtracking map G -> complement(G) with degree pruning; canonical-form
// equality as a pre-filter. Deterministic; absent when G is not
// self-complementary.
std::optional<Antimorphism> find_antimorphism(const Graph& g);

// Seeded Sachs-style generation: fix a permutation with valid cycle type,
// pick one phase bit per pair orbit, emit alternating edges along each
// orbit. Reproducible per (n, seed). Requires n ≡ 0,1 (mod 4), n >= 1.
ScGraph generate_sc(int n, std::uint64_t seed);

// All self-complementary graphs on n vertices up to isomorphism, emitted as
// canonical forms sorted by graph6 bytes, each with a certificate.
// n in {1,4,5,8,9}; {12,13} only with allow_large (minutes of work).
std::vector<ScGraph> enumerate_sc(int n, bool allow_large = false);

// Cycles of a permutation, lowest entry first, cycles sorted by that entry.
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& sigma);
// Whether the cycle type is legal for an antimorphism on n vertices.
bool valid_antimorphism_cycle_type(const std::vector<int>& sigma);

// Orbits of sigma acting on unordered vertex pairs, discovered in ascending
// order of their smallest pair; each orbit lists its pairs in action order.
std::vector<std::vector<std::pair<int, int>>> pair_orbits(const std::vector<int>& sigma);

} // namespace scm

#endif
