#ifndef SCM_BOUNDS_HPP
#define SCM_BOUNDS_HPP

#include <optional>
#include <utility>

#include "scm/graph.hpp"
#include "scm/minors.hpp"

namespace scm {

// Attainable Hadwiger range for a self-complementary graph on n vertices:
// (floor((n+1)/2), floor(3n/5)). Requires n >= 4, n ≡ 0,1 (mod 4).
std::pair<int, int> sc_bounds(int n);

// Exact chromatic number by DSATUR-ordered branch and bound with a greedy
// clique lower bound. Guarded at n <= 24 to keep exactness honest.
int chromatic_number(const Graph& g);

// h(G) + h(cG) <= floor(6n/5), decided by exact computation of both sides;
// unknown when either side exhausts its budget.
Feasibility stiebitz_check(const Graph& g, const Budget& budget = {});

struct BoundReport {
    int n = 0;
    int lower = 0; // floor((n+1)/2)
    int upper = 0; // floor(3n/5)
    bool h_exact = false;
    int h_lo = 0;
    int h_hi = 0;
    bool h_complement_exact = false;
    int h_complement_lo = 0;
    int h_complement_hi = 0;
    bool chi_exact = false;
    int chi_lo = 0;
    int chi_hi = 0;
    // Flags are computed, never asserted from theory; absent when the
    // available intervals cannot decide them.
    std::optional<bool> lower_ok;         // floor((n+1)/2) <= h
    std::optional<bool> upper_ok;         // h <= floor(3n/5)
    std::optional<bool> stiebitz_ok;      // h(G) + h(cG) <= floor(6n/5)
    std::optional<bool> ng_ok;            // chi <= floor((n+1)/2)
    std::optional<bool> hadwiger_conj_ok; // chi <= h
};

// Full flag set for a self-complementary graph (throws if it is not).
BoundReport conjecture_report(const Graph& g, const Budget& budget = {});

} // namespace scm

#endif
