#include "scm/antimorphism.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "scm/canonical.hpp"

namespace scm {

namespace {

void check_permutation(int n, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("antimorphism: size mismatch");
    std::vector<bool> hit(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("antimorphism: not a permutation");
        hit[v] = true;
    }
}

// Partitions of m into parts divisible by 4, parts descending, partitions in
// lexicographically descending order ([12] before [8,4] before [4,4,4]).
void cycle_partitions(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(m, max_part); part >= 4; part -= 4) {
        cur.push_back(part);
        cycle_partitions(m - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> valid_cycle_types(int n) {
    int m = n - (n % 4 == 1 ? 1 : 0);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cycle_partitions(m, m, cur, out);
    if (out.empty() && m == 0)
        out.push_back({});
    return out;
}

// Permutation made of consecutive cycles of the given lengths, plus a
// trailing fixed point when the lengths do not cover n.
std::vector<int> block_permutation(int n, const std::vector<int>& parts) {
    std::vector<int> sigma(n);
    int base = 0;
    for (int len : parts) {
        for (int i = 0; i < len; ++i)
            sigma[base + i] = base + (i + 1) % len;
        base += len;
    }
    for (; base < n; ++base)
        sigma[base] = base; // fixed point
    return sigma;
}

Graph graph_from_orbits(int n, const std::vector<std::vector<std::pair<int, int>>>& orbits,
                        const std::vector<int>& phases) {
    Graph g(n);
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const auto& orbit = orbits[oi];
        for (std::size_t k = 0; k < orbit.size(); ++k)
            if (static_cast<int>(k % 2) == phases[oi])
                g.add_edge(orbit[k].first, orbit[k].second);
    }
    return g;
}

} // namespace

bool verify_antimorphism(const Graph& g, const Antimorphism& sigma) {
    const int n = g.order();
    check_permutation(n, sigma.sigma);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) == g.has_edge(sigma(u), sigma(v)))
                return false;
    return true;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int v = 0; v < n; ++v) {
        if (seen[v])
            continue;
        std::vector<int> cyc;
        for (int x = v; !seen[x]; x = sigma[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

bool valid_antimorphism_cycle_type(const std::vector<int>& sigma) {
    int fixed = 0;
    for (const auto& cyc : permutation_cycles(sigma)) {
        if (cyc.size() == 1)
            ++fixed;
        else if (cyc.size() % 4 != 0)
            return false;
    }
    const int n = static_cast<int>(sigma.size());
    return fixed == (n % 4 == 1 ? 1 : 0) && (n % 4 == 0 || n % 4 == 1);
}

std::vector<std::vector<std::pair<int, int>>> pair_orbits(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::pair<int, int>>> orbits;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (seen[u][v])
                continue;
            std::vector<std::pair<int, int>> orbit;
            int a = u, b = v;
            while (!seen[std::min(a, b)][std::max(a, b)]) {
                seen[std::min(a, b)][std::max(a, b)] = true;
                orbit.emplace_back(std::min(a, b), std::max(a, b));
                a = sigma[a];
                b = sigma[b];
            }
            orbits.push_back(std::move(orbit));
        }
    }
    return orbits;
}

std::optional<Antimorphism> find_antimorphism(const Graph& g) {
    const int n = g.order();
    if (n % 4 != 0 && n % 4 != 1)
        return std::nullopt;
    if (n <= 1) {
        Antimorphism id;
        for (int v = 0; v < n; ++v)
            id.sigma.push_back(v);
        return id;
    }
    if (g.edge_count() * 4 != static_cast<long>(n) * (n - 1))
        return std::nullopt;
    const Graph cg = complement(g);
    if (canonical_g6(g) != canonical_g6(cg))
        return std::nullopt;

    // Backtracking isomorphism G -> cG. Source vertices are processed in
    // ascending order of candidate-set size (degree class in cG), which keeps
    // the rarest degrees first.
    std::vector<int> deg(n), cdeg_count(n, 0);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        ++cdeg_count[n - 1 - deg[v]];
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cdeg_count[deg[a]] < cdeg_count[deg[b]]; });

    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    auto extend_map = [&](auto&& self, int idx) -> bool {
        if (idx == n)
            return true;
        int v = order[idx];
        for (int x = 0; x < n; ++x) {
            if (used[x] || n - 1 - deg[x] != deg[v])
                continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (g.has_edge(u, v) == g.has_edge(sigma[u], x))
                    ok = false;
            }
            if (!ok)
                continue;
            sigma[v] = x;
            used[x] = true;
            if (self(self, idx + 1))
                return true;
            sigma[v] = -1;
            used[x] = false;
        }
        return false;
    };
    if (!extend_map(extend_map, 0))
        return std::nullopt;
    Antimorphism result{sigma};
    if (!verify_antimorphism(g, result))
        throw std::logic_error("find_antimorphism: produced an invalid map");
    return result;
}

ScGraph generate_sc(int n, std::uint64_t seed) {
    if (n < 1 || (n % 4 != 0 && n % 4 != 1))
        throw std::invalid_argument("generate_sc: n must be positive and 0 or 1 mod 4");
    auto types = valid_cycle_types(n);
    std::seed_seq seq{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    const auto& type = types[rng() % types.size()];
    std::vector<int> sigma = block_permutation(n, type);
    auto orbits = pair_orbits(sigma);
    std::vector<int> phases;
    phases.reserve(orbits.size());
    for (const auto& orbit : orbits) {
        if (orbit.size() % 2 != 0)
            throw std::logic_error("generate_sc: odd pair orbit");
        phases.push_back(static_cast<int>(rng() & 1));
    }
    ScGraph out{graph_from_orbits(n, orbits, phases), Antimorphism{sigma}};
    if (!verify_antimorphism(out.graph, out.sigma))
        throw std::logic_error("generate_sc: certificate failed verification");
    return out;
}

std::vector<ScGraph> enumerate_sc(int n, bool allow_large) {
    const bool small = n == 1 || n == 4 || n == 5 || n == 8 || n == 9;
    const bool large = n == 12 || n == 13;
    if (!small && !(large && allow_large))
        throw std::invalid_argument("enumerate_sc: n out of supported range");

    std::map<std::string, ScGraph> by_canon;
    for (const auto& type : valid_cycle_types(n)) {
        std::vector<int> sigma = block_permutation(n, type);
        auto orbits = pair_orbits(sigma);
        std::vector<int> phases(orbits.size(), 0);
        const std::uint64_t total = 1ULL << orbits.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            for (std::size_t i = 0; i < orbits.size(); ++i)
                phases[i] = static_cast<int>((mask >> i) & 1);
            Graph g = graph_from_orbits(n, orbits, phases);
            CanonicalForm cf = canonical_form(g);
            if (by_canon.count(cf.g6))
                continue;
            // Conjugate the certificate into the canonical labeling.
            Antimorphism cs;
            cs.sigma.assign(n, 0);
            for (int v = 0; v < n; ++v)
                cs.sigma[cf.relabeling[v]] = cf.relabeling[sigma[v]];
            ScGraph entry{cf.graph, cs};
            if (!verify_antimorphism(entry.graph, entry.sigma))
                throw std::logic_error("enumerate_sc: conjugated certificate failed");
            by_canon.emplace(cf.g6, std::move(entry));
        }
    }
    std::vector<ScGraph> out;
    out.reserve(by_canon.size());
    for (auto& [g6, sc] : by_canon)
        out.push_back(std::move(sc));
    return out;
}

} // namespace scm
