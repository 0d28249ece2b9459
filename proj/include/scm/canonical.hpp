#ifndef SCM_CANONICAL_HPP
#define SCM_CANONICAL_HPP

#include <string>
#include <vector>

#include "scm/graph.hpp"

namespace scm {

struct CanonicalForm {
    Graph graph;                 // canonically relabeled copy
    std::vector<int> relabeling; // old label -> canonical label
    std::string g6;              // graph6 bytes of the canonical copy
};

// Deterministic canonical labeling: equitable degree refinement plus
// branching on the first smallest non-singleton cell, taking the minimum
// adjacency bit string over all leaves.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_g6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

} // namespace scm

#endif
