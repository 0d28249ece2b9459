#include "scm/canonical.hpp"

#include <algorithm>
#include <map>

#include "scm/graph6.hpp"

namespace scm {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by the vector of neighbor counts
// into each cell, until stable. Subcell order follows the count signature,
// which is label-independent, so the refined partition is canonical given a
// canonical input partition.
void refine(const Graph& g, Cells& cells) {
    const int n = g.order();
    for (;;) {
        std::vector<int> cell_of(n, 0);
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (int v : cells[ci])
                cell_of[v] = static_cast<int>(ci);
        bool changed = false;
        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int u = 0; u < n; ++u)
                    if (g.has_edge(v, u))
                        ++sig[cell_of[u]];
                split[sig].push_back(v);
            }
            if (split.size() > 1)
                changed = true;
            for (auto& [sig, vs] : split)
                next.push_back(std::move(vs));
        }
        cells = std::move(next);
        if (!changed)
            return;
    }
}

// Adjacency upper triangle (row-major) under the labeling implied by a
// discrete partition, packed big-endian into bytes.
std::string leaf_bits(const Graph& g, const Cells& cells) {
    const int n = g.order();
    std::vector<int> inv(n); // canonical label -> old label
    for (int i = 0; i < n; ++i)
        inv[i] = cells[i][0];
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n) * n / 8 + 1);
    int acc = 0, nb = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.has_edge(inv[i], inv[j]) ? 1 : 0);
            if (++nb == 8) {
                bits.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0)
        bits.push_back(static_cast<char>(acc << (8 - nb)));
    return bits;
}

struct Best {
    std::string bits;
    std::vector<int> perm; // old -> canonical
    bool set = false;
};

void search(const Graph& g, Cells cells, Best& best) {
    refine(g, cells);
    int target = -1;
    std::size_t smallest = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() > 1 && cells[i].size() < smallest) {
            smallest = cells[i].size();
            target = static_cast<int>(i);
        }
    }
    if (target < 0) {
        std::string bits = leaf_bits(g, cells);
        if (!best.set || bits < best.bits) {
            best.set = true;
            best.bits = std::move(bits);
            best.perm.assign(g.order(), 0);
            for (std::size_t i = 0; i < cells.size(); ++i)
                best.perm[cells[i][0]] = static_cast<int>(i);
        }
        return;
    }
    for (int v : cells[target]) {
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (static_cast<int>(i) != target) {
                child.push_back(cells[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[i])
                if (u != v)
                    rest.push_back(u);
            child.push_back(std::move(rest));
        }
        search(g, std::move(child), best);
    }
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    CanonicalForm out;
    if (n == 0) {
        out.graph = g;
        out.g6 = encode_graph6(g);
        return out;
    }
    Cells cells(1);
    for (int v = 0; v < n; ++v)
        cells[0].push_back(v);
    Best best;
    search(g, std::move(cells), best);
    out.relabeling = best.perm;
    out.graph = relabel(g, best.perm);
    out.g6 = encode_graph6(out.graph);
    return out;
}

std::string canonical_g6(const Graph& g) { return canonical_form(g).g6; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return canonical_g6(a) == canonical_g6(b);
}

} // namespace scm
