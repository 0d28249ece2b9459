#include "scm/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace scm {

namespace {
constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {
    if (universe < 0)
        throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs)
        s.add(v);
    return s;
}

VertexSet VertexSet::from_vertices(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs)
        s.add(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < words_for(universe); ++w)
        s.w_[w] = ~0ULL;
    if (universe % kWordBits != 0 && universe > 0)
        s.w_.back() &= (1ULL << (universe % kWordBits)) - 1;
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " not in universe of size " + std::to_string(n_));
}

bool VertexSet::contains(int v) const {
    check(v);
    return (w_[v / kWordBits] >> (v % kWordBits)) & 1ULL;
}

void VertexSet::add(int v) {
    check(v);
    w_[v / kWordBits] |= 1ULL << (v % kWordBits);
}

void VertexSet::remove(int v) {
    check(v);
    w_[v / kWordBits] &= ~(1ULL << (v % kWordBits));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : w_)
        c += std::popcount(w);
    return c;
}

int VertexSet::min() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return static_cast<int>(i) * kWordBits + std::countr_zero(w_[i]);
    return -1;
}

bool VertexSet::disjoint_with(const VertexSet& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i])
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] |= other.w_[i];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(w_.size()); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            out.push_back(i * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 0)
        throw std::invalid_argument("Graph: negative order");
}

void Graph::check(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("Graph::cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

long Graph::edge_count() const {
    long c = 0;
    for (auto w : bits_)
        c += std::popcount(w);
    return c / 2;
}

int Graph::degree(int v) const {
    check(v);
    int c = 0;
    for (int w = 0; w < words_; ++w)
        c += std::popcount(row_word(v, w));
    return c;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return (row_word(u, v / kWordBits) >> (v % kWordBits)) & 1ULL;
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v)
        throw std::invalid_argument("Graph: self-loop rejected");
    bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= 1ULL << (v % kWordBits);
    bits_[static_cast<std::size_t>(v) * words_ + u / kWordBits] |= 1ULL << (u % kWordBits);
}

VertexSet Graph::neighbors(int v) const {
    check(v);
    VertexSet s(n_);
    for (int u = 0; u < n_; ++u)
        if (has_edge(v, u))
            s.add(u);
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::neighbors_word(int v) const {
    check(v);
    if (n_ > kWordBits)
        throw std::logic_error("Graph::neighbors_word: n > 64");
    return n_ == 0 ? 0 : row_word(v, 0);
}

// --------------------------------------------------------------- operations

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

Graph induced(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced: set universe does not match graph order");
    std::vector<int> verts = s.to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph contract(const Graph& g, int u, int v) {
    if (u == v)
        throw std::invalid_argument("contract: u == v");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract: uv is not an edge");
    int n = g.order();
    int lo = std::min(u, v), hi = std::max(u, v);
    auto map = [&](int x) { return x == hi ? lo : (x > hi ? x - 1 : x); };
    Graph h(n - 1);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b))
                continue;
            int ma = map(a), mb = map(b);
            if (ma != mb)
                h.add_edge(ma, mb);
        }
    }
    return h;
}

bool is_connected(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_connected: set universe does not match graph order");
    if (s.empty())
        throw std::invalid_argument("is_connected: empty vertex set");
    std::vector<int> verts = s.to_vector();
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = true;
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : verts) {
            if (!seen[y] && g.has_edge(x, y)) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return reached == static_cast<int>(verts.size());
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> hit(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("relabel: not a permutation");
        hit[v] = true;
    }
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                h.add_edge(perm[u], perm[v]);
    return h;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", m=" << g.edge_count() << ";";
    for (auto [u, v] : g.edges())
        os << " " << u << "-" << v;
    os << ")";
    return os.str();
}

} // namespace scm
