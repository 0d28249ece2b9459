#ifndef SCM_CONSTRUCTIONS_HPP
#define SCM_CONSTRUCTIONS_HPP

#include <optional>

#include "scm/antimorphism.hpp"
#include "scm/graph.hpp"

namespace scm {

// Half-open label range [begin, end).
struct Range {
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
    bool contains(int v) const { return v >= begin && v < end; }
    bool operator==(const Range&) const = default;
};

// Named slices of a composed graph's vertex labels. The five-cycle families
// use x/e1/k1/k2/e2; the vertex-added family adds the apex and the
// small-degree half of the X block.
struct BlockLabeling {
    Range x, e1, k1, k2, e2;
    std::optional<int> apex;
    VertexSet small_half;
};

struct Construction {
    Graph graph;
    BlockLabeling blocks;
    Antimorphism sigma; // always verified before returning
};

// Five blocks X, E_q, K_q, K_q, E_q arranged in a cycle of complete joins
// X-E1-K1-K2-E2-X, no other cross edges. X must be self-complementary
// (certificate found if not supplied); q = 0 returns X itself.
Construction five_cycle(const Graph& x, int q,
                        std::optional<Antimorphism> sigma_x = std::nullopt);

struct Table1Row {
    int r = 0;
    int q = 0;
    int h = 0; // floor(3n/5)
};

// The eight residue classes with five-cycle parameters attaining
// floor(3n/5); absent for n ≡ 12, 17 (mod 20). Requires n >= 4, n ≡ 0,1 (mod 4).
std::optional<Table1Row> table1_params(int n);

// n = 20s+17 family: five_cycle(X, 4s+3) plus an apex adjacent to both
// K blocks and to the 2s+2 small-degree vertices of X. |V(X)| must be 4s+4.
Construction vertex_added(int s, const Graph& x,
                          std::optional<Antimorphism> sigma_x = std::nullopt);

// Inductive step: five_cycle(G, 1); adds 4 vertices, raises the Hadwiger
// number by exactly 2.
Construction extend(const Graph& g,
                    std::optional<Antimorphism> sigma_g = std::nullopt);

} // namespace scm

#endif
