#include "scm/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "scm/antimorphism.hpp"

namespace scm {

std::pair<int, int> sc_bounds(int n) {
    if (n < 4 || (n % 4 != 0 && n % 4 != 1))
        throw std::invalid_argument("sc_bounds: n must be >= 4 and 0 or 1 mod 4");
    return {(n + 1) / 2, 3 * n / 5};
}

namespace {

int greedy_clique_size(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v))
                ok = false;
        if (ok)
            clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

struct ColorSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    int best;                     // best full coloring found so far
    std::vector<int> best_color;

    explicit ColorSearch(const Graph& gr) : g(gr), n(gr.order()), color(gr.order(), -1), best(gr.order() + 1) {}

    int saturation(int v) const {
        std::uint64_t used = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] >= 0 && g.has_edge(u, v))
                used |= 1ULL << color[u];
        return std::popcount(used);
    }

    int pick() const {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            int s = saturation(v);
            int d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        return pick;
    }

    void dfs(int colored, int used) {
        if (used >= best)
            return;
        if (colored == n) {
            best = used;
            best_color = color;
            return;
        }
        int v = pick();
        std::uint64_t forbidden = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] >= 0 && g.has_edge(u, v))
                forbidden |= 1ULL << color[u];
        for (int c = 0; c < used; ++c) {
            if (forbidden & (1ULL << c))
                continue;
            color[v] = c;
            dfs(colored + 1, used);
            color[v] = -1;
        }
        if (used + 1 < best) {
            color[v] = used;
            dfs(colored + 1, used + 1);
            color[v] = -1;
        }
    }
};

int dsatur_greedy(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            std::uint64_t used = 0;
            for (int u = 0; u < n; ++u)
                if (color[u] >= 0 && g.has_edge(u, v))
                    used |= 1ULL << color[u];
            int s = std::popcount(used);
            int d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        std::uint64_t used = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] >= 0 && g.has_edge(u, pick))
                used |= 1ULL << color[u];
        int c = 0;
        while (used & (1ULL << c))
            ++c;
        color[pick] = c;
    }
    int k = 0;
    for (int v = 0; v < n; ++v)
        k = std::max(k, color[v] + 1);
    return k;
}

} // namespace

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 24)
        throw std::invalid_argument("chromatic_number: exactness guard allows n <= 24 only");
    if (n == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    const int clique = greedy_clique_size(g);
    const int greedy = dsatur_greedy(g);
    if (clique == greedy)
        return clique;
    ColorSearch search(g);
    search.best = greedy + 1;
    // Lock a greedy clique into distinct colors to break symmetry.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique_vs;
    for (int v : order) {
        bool ok = true;
        for (int u : clique_vs)
            if (!g.has_edge(u, v))
                ok = false;
        if (ok)
            clique_vs.push_back(v);
    }
    for (std::size_t i = 0; i < clique_vs.size(); ++i)
        search.color[clique_vs[i]] = static_cast<int>(i);
    search.dfs(static_cast<int>(clique_vs.size()), static_cast<int>(clique_vs.size()));
    return std::max(search.best, clique);
}

Feasibility stiebitz_check(const Graph& g, const Budget& budget) {
    HadwigerResult hg = hadwiger(g, budget);
    if (!hg.exact)
        return Feasibility::unknown;
    HadwigerResult hc = hadwiger(complement(g), budget);
    if (!hc.exact)
        return Feasibility::unknown;
    const int n = g.order();
    return hg.lower + hc.lower <= 6 * n / 5 ? Feasibility::yes : Feasibility::no;
}

BoundReport conjecture_report(const Graph& g, const Budget& budget) {
    if (!find_antimorphism(g))
        throw std::invalid_argument("conjecture_report: graph is not self-complementary");
    BoundReport rep;
    rep.n = g.order();
    std::tie(rep.lower, rep.upper) = sc_bounds(rep.n);

    HadwigerResult hg = hadwiger(g, budget);
    rep.h_exact = hg.exact;
    rep.h_lo = hg.lower;
    rep.h_hi = hg.upper;
    HadwigerResult hc = hadwiger(complement(g), budget);
    rep.h_complement_exact = hc.exact;
    rep.h_complement_lo = hc.lower;
    rep.h_complement_hi = hc.upper;

    if (rep.n <= 24) {
        rep.chi_exact = true;
        rep.chi_lo = rep.chi_hi = chromatic_number(g);
    } else {
        rep.chi_exact = false;
        rep.chi_lo = greedy_clique_size(g);
        rep.chi_hi = dsatur_greedy(g);
    }

    auto decide = [](bool yes_if, bool no_if) -> std::optional<bool> {
        if (yes_if)
            return true;
        if (no_if)
            return false;
        return std::nullopt;
    };
    rep.lower_ok = decide(rep.h_lo >= rep.lower, rep.h_hi < rep.lower);
    rep.upper_ok = decide(rep.h_hi <= rep.upper, rep.h_lo > rep.upper);
    const int stiebitz = 6 * rep.n / 5;
    rep.stiebitz_ok = decide(rep.h_hi + rep.h_complement_hi <= stiebitz,
                             rep.h_lo + rep.h_complement_lo > stiebitz);
    rep.ng_ok = decide(rep.chi_hi <= rep.lower, rep.chi_lo > rep.lower);
    rep.hadwiger_conj_ok = decide(rep.chi_hi <= rep.h_lo, rep.chi_lo > rep.h_hi);
    return rep;
}

} // namespace scm
