#include "scm/minors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scm {

bool check_witness(const Graph& g, const MinorWitness& w) {
    const int n = g.order();
    VertexSet seen(n);
    for (const auto& bs : w.branch_sets) {
        if (bs.universe() != n)
            throw std::invalid_argument("check_witness: branch set universe mismatch");
        if (bs.empty())
            return false;
        if (!seen.disjoint_with(bs))
            return false;
        seen |= bs;
        if (!is_connected(g, bs))
            return false;
    }
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < w.branch_sets.size(); ++j) {
            bool cross = false;
            for (int u : w.branch_sets[i].to_vector()) {
                for (int v : w.branch_sets[j].to_vector()) {
                    if (g.has_edge(u, v)) {
                        cross = true;
                        break;
                    }
                }
                if (cross)
                    break;
            }
            if (!cross)
                return false;
        }
    }
    return true;
}

MinorWitness apply_schedule(const Graph& g, const ContractionSchedule& s) {
    const int n = g.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v)
        members[v] = {v};

    for (auto [u, v] : s.steps) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("apply_schedule: vertex out of range");
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw std::invalid_argument("apply_schedule: step merges a group with itself");
        bool adjacent = false;
        for (int a : members[ru]) {
            for (int b : members[rv]) {
                if (g.has_edge(a, b)) {
                    adjacent = true;
                    break;
                }
            }
            if (adjacent)
                break;
        }
        if (!adjacent)
            throw std::invalid_argument("apply_schedule: step merges non-adjacent groups");
        if (ru > rv)
            std::swap(ru, rv);
        parent[rv] = ru;
        members[ru].insert(members[ru].end(), members[rv].begin(), members[rv].end());
        members[rv].clear();
    }

    MinorWitness w;
    for (int v = 0; v < n; ++v)
        if (find(v) == v)
            w.branch_sets.push_back(VertexSet::from_vertices(n, members[v]));
    std::sort(w.branch_sets.begin(), w.branch_sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
    return w;
}

namespace {

VertexSet group_containing(const MinorWitness& all, int v) {
    for (const auto& bs : all.branch_sets)
        if (bs.contains(v))
            return bs;
    throw std::logic_error("schedule: vertex missing from its own contraction");
}

} // namespace

MinorWitness table1_schedule(const Graph& g, const BlockLabeling& blocks, int q, int r) {
    if (blocks.x.size() != r || blocks.e1.size() != q || blocks.k1.size() != q ||
        blocks.k2.size() != q || blocks.e2.size() != q || blocks.e2.end > g.order())
        throw std::invalid_argument("table1_schedule: blocks missing or sized wrong");
    const int p = std::min(q, r);

    ContractionSchedule sched;
    for (int i = 0; i < p; ++i) {
        sched.steps.emplace_back(blocks.x.begin + i, blocks.e1.begin + i);
        sched.steps.emplace_back(blocks.x.begin + i, blocks.e2.begin + i);
    }
    MinorWitness all = apply_schedule(g, sched);

    MinorWitness w;
    for (int i = 0; i < p; ++i)
        w.branch_sets.push_back(group_containing(all, blocks.x.begin + i));
    for (int v = blocks.k1.begin; v < blocks.k1.end; ++v)
        w.branch_sets.push_back(VertexSet::of(g.order(), {v}));
    for (int v = blocks.k2.begin; v < blocks.k2.end; ++v)
        w.branch_sets.push_back(VertexSet::of(g.order(), {v}));
    if (w.size() != 2 * q + p || !check_witness(g, w))
        throw std::logic_error("table1_schedule: witness failed verification");
    return w;
}

MinorWitness vertex_added_schedule(const Graph& g, const BlockLabeling& blocks, int s, int b) {
    const int q = 4 * s + 3;
    if (!blocks.apex || blocks.x.size() != q + 1 || blocks.e1.size() != q ||
        blocks.e2.size() != q || blocks.k1.size() != q || blocks.k2.size() != q)
        throw std::invalid_argument("vertex_added_schedule: blocks missing or sized wrong");
    if (!blocks.x.contains(b) || !blocks.small_half.contains(b))
        throw std::invalid_argument("vertex_added_schedule: b must lie in the small-degree half of X");

    ContractionSchedule sched;
    int i = 0;
    for (int x = blocks.x.begin; x < blocks.x.end; ++x) {
        if (x == b)
            continue;
        sched.steps.emplace_back(x, blocks.e1.begin + i);
        sched.steps.emplace_back(x, blocks.e2.begin + i);
        ++i;
    }
    sched.steps.emplace_back(*blocks.apex, b);
    MinorWitness all = apply_schedule(g, sched);

    MinorWitness w;
    for (int x = blocks.x.begin; x < blocks.x.end; ++x)
        if (x != b)
            w.branch_sets.push_back(group_containing(all, x));
    w.branch_sets.push_back(group_containing(all, *blocks.apex));
    for (int v = blocks.k1.begin; v < blocks.k1.end; ++v)
        w.branch_sets.push_back(VertexSet::of(g.order(), {v}));
    for (int v = blocks.k2.begin; v < blocks.k2.end; ++v)
        w.branch_sets.push_back(VertexSet::of(g.order(), {v}));
    if (w.size() != 12 * s + 10 || !check_witness(g, w))
        throw std::logic_error("vertex_added_schedule: witness failed verification");
    return w;
}

ContractionSchedule t_block_schedule(const TBlockLabeling& blocks, int s) {
    for (const auto& t : blocks.t)
        if (t.size() != 2 * s + 1)
            throw std::invalid_argument("t_block_schedule: T blocks must have 2s+1 vertices");
    for (const auto& e : blocks.es)
        if (e.size() != s)
            throw std::invalid_argument("t_block_schedule: E blocks must have s vertices");
    for (const auto& k : blocks.ks)
        if (k.size() != s)
            throw std::invalid_argument("t_block_schedule: K blocks must have s vertices");

    // Lowest-index vertex of each T block plays t_i.
    std::array<int, 4> t{blocks.t[0].begin, blocks.t[1].begin, blocks.t[2].begin, blocks.t[3].begin};
    std::vector<int> k_verts, e_verts;
    for (const auto& k : blocks.ks)
        for (int v = k.begin; v < k.end; ++v)
            k_verts.push_back(v);
    for (const auto& e : blocks.es)
        for (int v = e.begin; v < e.end; ++v)
            e_verts.push_back(v);

    ContractionSchedule sched;
    for (int ti : {0, 2})
        for (int j = 0; j < 2 * s; ++j)
            sched.steps.emplace_back(blocks.t[ti].begin + 1 + j, k_verts[j]);
    for (int ti : {1, 3})
        for (int j = 0; j < 2 * s; ++j)
            sched.steps.emplace_back(blocks.t[ti].begin + 1 + j, e_verts[j]);
    sched.steps.emplace_back(blocks.a[2], blocks.a[3]);
    sched.steps.emplace_back(blocks.a[0], t[0]);
    sched.steps.emplace_back(blocks.a[0], t[2]);
    sched.steps.emplace_back(blocks.a[1], t[1]);
    sched.steps.emplace_back(blocks.a[1], t[3]);
    return sched;
}

} // namespace scm
