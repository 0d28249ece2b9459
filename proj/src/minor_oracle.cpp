#include "scm/minors.hpp"

#include <stdexcept>
#include <vector>

namespace scm {

// Brute-force reference for the Hadwiger number. Deliberately naive and
// self-contained: enumerate every assignment of vertices to blocks (or to
// none), and at each leaf check connectivity and pairwise adjacency with
// plain loops. No pruning beyond skipping leaves that cannot beat the
// current maximum.
namespace {

struct OracleState {
    int n;
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> blocks;
    int best = 0;

    bool block_connected(const std::vector<int>& block) const {
        std::vector<bool> seen(block.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++reached;
            for (std::size_t j = 0; j < block.size(); ++j) {
                if (!seen[j] && adj[block[i]][block[j]]) {
                    seen[j] = true;
                    stack.push_back(static_cast<int>(j));
                }
            }
        }
        return reached == static_cast<int>(block.size());
    }

    void evaluate() {
        const int k = static_cast<int>(blocks.size());
        if (k <= best)
            return;
        for (const auto& block : blocks)
            if (!block_connected(block))
                return;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                bool cross = false;
                for (int u : blocks[i]) {
                    for (int v : blocks[j]) {
                        if (adj[u][v]) {
                            cross = true;
                            break;
                        }
                    }
                    if (cross)
                        break;
                }
                if (!cross)
                    return;
            }
        }
        best = k;
    }

    void recurse(int v) {
        if (v == n) {
            evaluate();
            return;
        }
        recurse(v + 1); // leave v out
        for (auto& block : blocks) {
            block.push_back(v);
            recurse(v + 1);
            block.pop_back();
        }
        blocks.push_back({v});
        recurse(v + 1);
        blocks.pop_back();
    }
};

} // namespace

int hadwiger_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 9)
        throw std::invalid_argument("hadwiger_oracle: n must be at most 9");
    if (n == 0)
        return 0;
    OracleState st;
    st.n = n;
    st.adj.assign(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            st.adj[u][v] = u != v && g.has_edge(u, v);
    st.recurse(0);
    return st.best;
}

} // namespace scm
