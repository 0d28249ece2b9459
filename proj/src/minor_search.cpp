#include "scm/minors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace scm {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxFastOrder = 64;

std::vector<std::uint64_t> adjacency_words(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order());
    for (int v = 0; v < g.order(); ++v)
        adj[v] = g.neighbors_word(v);
    return adj;
}

MinorWitness witness_from_masks(int n, const std::vector<std::uint64_t>& masks) {
    MinorWitness w;
    for (auto m : masks) {
        VertexSet s(n);
        std::uint64_t bits = m;
        while (bits) {
            s.add(std::countr_zero(bits));
            bits &= bits - 1;
        }
        w.branch_sets.push_back(std::move(s));
    }
    std::sort(w.branch_sets.begin(), w.branch_sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
    return w;
}

// Decision search for a K_h minor. Vertices are processed one at a time in a
// fixed order (internally degree-descending, which grounds the dense part of
// the host first); each is assigned to an existing branch set, opens a new
// one, or is discarded. Assigning to a not-yet-adjacent set is allowed (the
// connection must come from later vertices), which keeps the search
// exhaustive: the witness sets of any K_h minor, taken in order of their
// smallest members along the processing order, are reachable by exactly one
// assignment path.
struct Engine {
    int n = 0;
    int h = 0;
    std::vector<std::uint64_t> adj;          // internal labels
    std::vector<std::uint64_t> future_from;  // future_from[v] = mask of [v, n)
    std::vector<std::uint64_t> suffix_edges; // edges with an endpoint in [v, n)
    std::vector<int> internal_to_orig;

    struct SetState {
        std::uint64_t members = 0;
        std::uint64_t nbrs = 0; // union of adj over members
    };
    std::array<SetState, kMaxFastOrder> sets{};
    int k = 0;

    std::uint64_t nodes = 0;
    std::uint64_t node_budget = 0;
    Clock::time_point deadline;
    bool aborted = false;
    std::vector<std::uint64_t> found;

    Engine(const Graph& g, int target, const Budget& budget)
        : n(g.order()), h(target), adj(g.order(), 0), future_from(g.order() + 1, 0),
          suffix_edges(g.order() + 1, 0), internal_to_orig(g.order()) {
        for (int i = 0; i < n; ++i)
            internal_to_orig[i] = i;
        std::stable_sort(internal_to_orig.begin(), internal_to_orig.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> to_internal(n);
        for (int i = 0; i < n; ++i)
            to_internal[internal_to_orig[i]] = i;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) {
                    adj[to_internal[u]] |= 1ULL << to_internal[v];
                    adj[to_internal[v]] |= 1ULL << to_internal[u];
                }
        for (int v = n - 1; v >= 0; --v) {
            future_from[v] = future_from[v + 1] | (1ULL << v);
            suffix_edges[v] =
                suffix_edges[v + 1] + std::popcount(adj[v] & ((1ULL << v) - 1));
        }
        node_budget = budget.max_nodes;
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget.seconds));
    }

    std::uint64_t expand(std::uint64_t seed, std::uint64_t allowed) const {
        std::uint64_t comp = seed & allowed;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t nb = 0;
            while (frontier) {
                nb |= adj[std::countr_zero(frontier)];
                frontier &= frontier - 1;
            }
            frontier = nb & allowed & ~comp;
            comp |= frontier;
        }
        return comp;
    }

    bool members_connected(std::uint64_t members) const {
        return expand(members & (~members + 1), members) == members;
    }

    bool dfs(int v) {
        if (aborted)
            return false;
        if ((++nodes & 1023ULL) == 0 && Clock::now() > deadline) {
            aborted = true;
            return false;
        }
        if (nodes > node_budget) {
            aborted = true;
            return false;
        }

        if (k == h) {
            bool done = true;
            for (int i = 0; i < k && done; ++i)
                for (int j = i + 1; j < k && done; ++j)
                    if (!(sets[i].nbrs & sets[j].members))
                        done = false;
            for (int i = 0; i < k && done; ++i)
                if (!members_connected(sets[i].members))
                    done = false;
            if (done) {
                found.resize(k);
                for (int i = 0; i < k; ++i)
                    found[i] = sets[i].members;
                return true;
            }
        }
        if (v == n)
            return false;

        const std::uint64_t future = future_from[v];
        if (k + std::popcount(future) < h)
            return false;

        std::array<std::uint64_t, kMaxFastOrder> reach;
        int disconnected = 0;
        for (int i = 0; i < k; ++i) {
            const std::uint64_t members = sets[i].members;
            const std::uint64_t comp = expand(members & (~members + 1), members | future);
            if ((comp & members) != members)
                return false; // set can never reconnect
            reach[i] = comp;
            if (!members_connected(members))
                ++disconnected;
        }
        // Every still-disconnected set consumes at least one future vertex of
        // its own, as does every branch set still to be opened.
        if (h - k + disconnected > std::popcount(future))
            return false;

        // Pairs without a cross edge need one between their reachable regions.
        std::array<std::uint64_t, kMaxFastOrder> reach_nbrs;
        std::array<bool, kMaxFastOrder> reach_nbrs_ready{};
        auto nbrs_of_reach = [&](int i) {
            if (!reach_nbrs_ready[i]) {
                std::uint64_t nb = 0, bits = reach[i];
                while (bits) {
                    nb |= adj[std::countr_zero(bits)];
                    bits &= bits - 1;
                }
                reach_nbrs[i] = nb;
                reach_nbrs_ready[i] = true;
            }
            return reach_nbrs[i];
        };
        int crossed = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (sets[i].nbrs & sets[j].members) {
                    ++crossed;
                    continue;
                }
                if (!(nbrs_of_reach(i) & reach[j]))
                    return false;
            }
        }
        // Every still-missing cross pair needs its own edge touching [v, n).
        if (static_cast<std::uint64_t>(h * (h - 1) / 2 - crossed) > suffix_edges[v])
            return false;

        const std::uint64_t bit = 1ULL << v;
        for (int i = 0; i < k; ++i) {
            if (sets[i].nbrs & bit) {
                SetState saved = sets[i];
                sets[i].members |= bit;
                sets[i].nbrs |= adj[v];
                if (dfs(v + 1))
                    return true;
                sets[i] = saved;
                if (aborted)
                    return false;
            }
        }
        if (k < h) {
            sets[k] = {bit, adj[v]};
            ++k;
            if (dfs(v + 1))
                return true;
            --k;
            if (aborted)
                return false;
        }
        if (adj[v] & future_from[v + 1]) {
            for (int i = 0; i < k; ++i) {
                if (!(sets[i].nbrs & bit)) {
                    SetState saved = sets[i];
                    sets[i].members |= bit;
                    sets[i].nbrs |= adj[v];
                    if (dfs(v + 1))
                        return true;
                    sets[i] = saved;
                    if (aborted)
                        return false;
                }
            }
        }
        return dfs(v + 1);
    }
};

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

MinorWitness greedy_clique_minor(const Graph& g) {
    const int n = g.order();
    if (n > kMaxFastOrder)
        throw std::invalid_argument("greedy_clique_minor: hosts beyond 64 vertices unsupported");
    if (n == 0)
        return {};

    std::vector<std::uint64_t> members(n), gadj(n);
    const auto adj = adjacency_words(g);
    for (int v = 0; v < n; ++v) {
        members[v] = 1ULL << v;
        gadj[v] = adj[v];
    }
    std::uint64_t alive = n == kMaxFastOrder ? ~0ULL : (1ULL << n) - 1;

    std::vector<std::uint64_t> best;
    for (;;) {
        // Greedy clique over the current group graph, highest degree first.
        std::vector<int> order;
        for (std::uint64_t bits = alive; bits; bits &= bits - 1)
            order.push_back(std::countr_zero(bits));
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(gadj[a] & alive) > std::popcount(gadj[b] & alive);
        });
        std::vector<int> clique;
        std::uint64_t cand = alive;
        for (int gid : order) {
            if (cand & (1ULL << gid)) {
                clique.push_back(gid);
                cand &= gadj[gid];
            }
        }
        if (clique.size() > best.size()) {
            best.clear();
            for (int gid : clique)
                best.push_back(members[gid]);
        }

        // Merge the adjacent pair with the most common group neighbors.
        int bi = -1, bj = -1, bc = -1;
        for (std::uint64_t ib = alive; ib; ib &= ib - 1) {
            int i = std::countr_zero(ib);
            std::uint64_t js = gadj[i] & alive & ~((2ULL << i) - 1);
            for (; js; js &= js - 1) {
                int j = std::countr_zero(js);
                int c = std::popcount(gadj[i] & gadj[j] & alive);
                if (c > bc) {
                    bc = c;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0)
            break; // no adjacent pair left
        members[bi] |= members[bj];
        gadj[bi] = (gadj[bi] | gadj[bj]) & ~(1ULL << bi) & ~(1ULL << bj);
        alive &= ~(1ULL << bj);
        for (std::uint64_t bits = alive; bits; bits &= bits - 1) {
            int gid = std::countr_zero(bits);
            if (gadj[gid] & (1ULL << bj))
                gadj[gid] = (gadj[gid] & ~(1ULL << bj)) | (1ULL << bi);
        }
        if (std::popcount(alive) <= 1)
            break;
    }

    MinorWitness w = witness_from_masks(n, best);
    if (!check_witness(g, w))
        throw std::logic_error("greedy_clique_minor: produced an invalid witness");
    return w;
}

MinorDecision has_clique_minor(const Graph& g, int h, const Budget& budget) {
    if (h < 1)
        throw std::invalid_argument("has_clique_minor: h must be >= 1");
    const int n = g.order();
    const auto t0 = Clock::now();
    MinorDecision d;
    if (h > n) {
        d.kind = Feasibility::no; // h disjoint non-empty branch sets need h <= n
        d.stats.millis = elapsed_ms(t0);
        return d;
    }
    if (n > kMaxFastOrder)
        throw std::invalid_argument("has_clique_minor: hosts beyond 64 vertices unsupported");

    MinorWitness heur = greedy_clique_minor(g);
    if (heur.size() >= h) {
        heur.branch_sets.resize(h);
        if (!check_witness(g, heur))
            throw std::logic_error("has_clique_minor: truncated greedy witness invalid");
        d.kind = Feasibility::yes;
        d.witness = std::move(heur);
        d.stats.millis = elapsed_ms(t0);
        return d;
    }

    Engine engine(g, h, budget);
    const bool hit = engine.dfs(0);
    d.stats.nodes = engine.nodes;
    d.stats.millis = elapsed_ms(t0);
    if (hit) {
        std::vector<std::uint64_t> orig_masks;
        for (std::uint64_t m : engine.found) {
            std::uint64_t om = 0;
            while (m) {
                om |= 1ULL << engine.internal_to_orig[std::countr_zero(m)];
                m &= m - 1;
            }
            orig_masks.push_back(om);
        }
        MinorWitness w = witness_from_masks(n, orig_masks);
        if (!check_witness(g, w))
            throw std::logic_error("has_clique_minor: search returned an invalid witness");
        d.kind = Feasibility::yes;
        d.witness = std::move(w);
    } else if (engine.aborted) {
        d.kind = Feasibility::unknown;
    } else {
        d.kind = Feasibility::no;
    }
    return d;
}

HadwigerResult hadwiger(const Graph& g, const Budget& budget) {
    const auto t0 = Clock::now();
    HadwigerResult r;
    const int n = g.order();
    if (n == 0) {
        r.exact = true;
        r.witness = MinorWitness{};
        r.stats.millis = elapsed_ms(t0);
        return r;
    }
    MinorWitness w = greedy_clique_minor(g);
    int lo = w.size();
    for (;;) {
        if (lo == n) {
            r.exact = true;
            break;
        }
        MinorDecision d = has_clique_minor(g, lo + 1, budget);
        r.stats.nodes += d.stats.nodes;
        if (d.kind == Feasibility::yes) {
            w = std::move(*d.witness);
            lo = w.size();
            continue;
        }
        if (d.kind == Feasibility::no) {
            r.exact = true;
            break;
        }
        r.exact = false;
        break;
    }
    r.lower = lo;
    r.upper = r.exact ? lo : n;
    r.witness = std::move(w);
    r.stats.millis = elapsed_ms(t0);
    return r;
}

} // namespace scm
