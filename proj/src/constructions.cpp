#include "scm/constructions.hpp"

#include <stdexcept>

namespace scm {

namespace {

Antimorphism require_certificate(const Graph& g, std::optional<Antimorphism> sigma, const char* who) {
    if (sigma) {
        if (!verify_antimorphism(g, *sigma))
            throw std::invalid_argument(std::string(who) + ": supplied certificate does not verify");
        return *sigma;
    }
    auto found = find_antimorphism(g);
    if (!found)
        throw std::invalid_argument(std::string(who) + ": graph is not self-complementary");
    return *found;
}

void add_join(Graph& g, Range a, Range b) {
    for (int u = a.begin; u < a.end; ++u)
        for (int v = b.begin; v < b.end; ++v)
            g.add_edge(u, v);
}

void add_clique(Graph& g, Range a) {
    for (int u = a.begin; u < a.end; ++u)
        for (int v = u + 1; v < a.end; ++v)
            g.add_edge(u, v);
}

} // namespace

Construction five_cycle(const Graph& x, int q, std::optional<Antimorphism> sigma_x) {
    if (q < 0)
        throw std::invalid_argument("five_cycle: q must be non-negative");
    const int r = x.order();
    if (q == 0 && r == 0)
        throw std::invalid_argument("five_cycle: q and r cannot both be zero");
    Antimorphism sx = require_certificate(x, std::move(sigma_x), "five_cycle");

    BlockLabeling blocks;
    blocks.x = {0, r};
    blocks.e1 = {r, r + q};
    blocks.k1 = {r + q, r + 2 * q};
    blocks.k2 = {r + 2 * q, r + 3 * q};
    blocks.e2 = {r + 3 * q, r + 4 * q};

    if (q == 0)
        return {x, blocks, sx};

    const int n = 4 * q + r;
    Graph g(n);
    for (auto [u, v] : x.edges())
        g.add_edge(u, v);
    add_clique(g, blocks.k1);
    add_clique(g, blocks.k2);
    add_join(g, blocks.x, blocks.e1);
    add_join(g, blocks.e1, blocks.k1);
    add_join(g, blocks.k1, blocks.k2);
    add_join(g, blocks.k2, blocks.e2);
    add_join(g, blocks.e2, blocks.x);

    // Block map X->X by X's own antimorphism, E1->K1->E2->K2->E1 with
    // identity on block-internal indices.
    Antimorphism sigma;
    sigma.sigma.assign(n, -1);
    for (int v = 0; v < r; ++v)
        sigma.sigma[v] = sx.sigma[v];
    for (int i = 0; i < q; ++i) {
        sigma.sigma[blocks.e1.begin + i] = blocks.k1.begin + i;
        sigma.sigma[blocks.k1.begin + i] = blocks.e2.begin + i;
        sigma.sigma[blocks.e2.begin + i] = blocks.k2.begin + i;
        sigma.sigma[blocks.k2.begin + i] = blocks.e1.begin + i;
    }
    if (!verify_antimorphism(g, sigma))
        throw std::logic_error("five_cycle: composed certificate failed verification");
    return {std::move(g), blocks, std::move(sigma)};
}

std::optional<Table1Row> table1_params(int n) {
    if (n < 4 || (n % 4 != 0 && n % 4 != 1))
        throw std::invalid_argument("table1_params: n must be >= 4 and 0 or 1 mod 4");
    const int s = n / 20;
    const int h = 3 * n / 5;
    Table1Row row;
    switch (n % 20) {
    case 0: row = {4 * s, 4 * s, h}; break;
    case 1: row = {4 * s + 1, 4 * s, h}; break;
    case 4: row = {4 * s, 4 * s + 1, h}; break;
    case 5: row = {4 * s + 1, 4 * s + 1, h}; break;
    case 8: row = {4 * s, 4 * s + 2, h}; break;
    case 9: row = {4 * s + 1, 4 * s + 2, h}; break;
    case 13: row = {4 * s + 1, 4 * s + 3, h}; break;
    case 16: row = {4 * s + 4, 4 * s + 3, h}; break;
    case 12:
    case 17: return std::nullopt;
    default: throw std::logic_error("table1_params: unreachable residue");
    }
    if (4 * row.q + row.r != n)
        throw std::logic_error("table1_params: row arithmetic broken");
    return row;
}

Construction vertex_added(int s, const Graph& x, std::optional<Antimorphism> sigma_x) {
    if (s < 0)
        throw std::invalid_argument("vertex_added: s must be non-negative");
    const int r = 4 * s + 4;
    if (x.order() != r)
        throw std::invalid_argument("vertex_added: X must have 4s+4 vertices");
    Antimorphism sx = require_certificate(x, std::move(sigma_x), "vertex_added");

    // Exactly half of X's vertices have degree below the average (4s+3)/2.
    VertexSet small(r);
    for (int v = 0; v < r; ++v)
        if (2 * x.degree(v) < 4 * s + 3)
            small.add(v);
    if (small.count() != 2 * s + 2)
        throw std::invalid_argument("vertex_added: degree split violated; X is not a valid SC graph");

    Construction base = five_cycle(x, 4 * s + 3, sx);
    const int n = base.graph.order() + 1;
    const int a = n - 1;
    Graph g(n);
    for (auto [u, v] : base.graph.edges())
        g.add_edge(u, v);
    for (int v = base.blocks.k1.begin; v < base.blocks.k1.end; ++v)
        g.add_edge(a, v);
    for (int v = base.blocks.k2.begin; v < base.blocks.k2.end; ++v)
        g.add_edge(a, v);
    for (int v : small.to_vector())
        g.add_edge(a, v);

    BlockLabeling blocks = base.blocks;
    blocks.apex = a;
    blocks.small_half = VertexSet(n);
    for (int v : small.to_vector())
        blocks.small_half.add(v);

    Antimorphism sigma;
    sigma.sigma = base.sigma.sigma;
    sigma.sigma.push_back(a); // the apex is the fixed point
    if (!verify_antimorphism(g, sigma))
        throw std::logic_error("vertex_added: composed certificate failed verification");
    return {std::move(g), std::move(blocks), std::move(sigma)};
}

Construction extend(const Graph& g, std::optional<Antimorphism> sigma_g) {
    return five_cycle(g, 1, std::move(sigma_g));
}

} // namespace scm
