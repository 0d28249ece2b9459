#ifndef SCM_MINORS_HPP
#define SCM_MINORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scm/constructions.hpp"
#include "scm/graph.hpp"

namespace scm {

// A K_h minor certificate: h pairwise-disjoint, non-empty, connected branch
// sets with at least one host edge between every pair.
struct MinorWitness {
    std::vector<VertexSet> branch_sets;
    int size() const { return static_cast<int>(branch_sets.size()); }
};

// True iff every MinorWitness invariant holds in g. Throws only on
// out-of-range vertices / universe mismatch.
bool check_witness(const Graph& g, const MinorWitness& w);

// Ordered merge plan in original labels, applied with union-find semantics.
struct ContractionSchedule {
    std::vector<std::pair<int, int>> steps;
};

// Runs the schedule; every step must merge two currently-distinct groups
// joined by at least one host edge (throws otherwise). Returns all groups,
// singletons included, sorted by smallest member.
MinorWitness apply_schedule(const Graph& g, const ContractionSchedule& s);

// The Table 1 contraction: p = min(q,r) triples {x_i, e1_i, e2_i} matched in
// ascending index order, plus all 2q K-block singletons. Checked before
// returning; size is exactly 2q+p.
MinorWitness table1_schedule(const Graph& g, const BlockLabeling& blocks, int q, int r);

// The 20s+17 contraction: 4s+3 triples over the X block minus b, the pair
// {apex, b} (b must lie in the small-degree half), and all 8s+6 K-block
// singletons. Checked; size is exactly 12s+10.
MinorWitness vertex_added_schedule(const Graph& g, const BlockLabeling& blocks, int s, int b);

// Host labeling for the 20s+12 schedule template: four K_{2s+1} blocks
// T1..T4, two copies each of E_s and K_s, and four single vertices a1..a4.
struct TBlockLabeling {
    std::array<Range, 4> t;
    std::array<Range, 2> es;
    std::array<Range, 2> ks;
    std::array<int, 4> a;
};

// The five-bullet merge plan for the 20s+12 family, usable on any compatible
// host: T1/T3 remainders matched to the K_s copies, T2/T4 remainders to the
// E_s copies, then a3a4, a1t1, a1t3, a2t2, a2t4.
ContractionSchedule t_block_schedule(const TBlockLabeling& blocks, int s);

struct Budget {
    double seconds = 60.0;
    std::uint64_t max_nodes = 100'000'000ULL;
};

enum class Feasibility { yes, no, unknown };

struct SearchStats {
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

struct MinorDecision {
    Feasibility kind = Feasibility::unknown;
    std::optional<MinorWitness> witness; // present iff kind == yes
    SearchStats stats;
};

// Decides whether g has a K_h minor. "yes" always carries a witness that
// re-validates through check_witness; "no" only after exhaustive search;
// "unknown" only on budget exhaustion.
MinorDecision has_clique_minor(const Graph& g, int h, const Budget& budget = {});

struct HadwigerResult {
    bool exact = false;
    int lower = 0; // largest h with a verified witness
    int upper = 0; // equals lower when exact; best proven bound otherwise
    std::optional<MinorWitness> witness;
    SearchStats stats;
};

// Exact Hadwiger number (witness at h, exhausted search at h+1), or bounds
// on budget exhaustion.
HadwigerResult hadwiger(const Graph& g, const Budget& budget = {});

// Independent brute-force oracle: enumerates every partition of every vertex
// subset into blocks and keeps the largest family that is connected and
// pairwise adjacent. Shares no search code with hadwiger. n <= 9.
int hadwiger_oracle(const Graph& g);

// Deterministic contraction heuristic; the returned witness always passes
// check_witness. Used as a fast lower-bound filter.
MinorWitness greedy_clique_minor(const Graph& g);

} // namespace scm

#endif
