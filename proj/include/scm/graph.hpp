#ifndef SCM_GRAPH_HPP
#define SCM_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace scm {

// Subset of {0..n-1} with bitmask semantics. The universe size is carried so
// that sets can be validated against the graph they refer to.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);
    static VertexSet from_vertices(int universe, const std::vector<int>& vs);
    static VertexSet full(int universe);

    int universe() const { return n_; }
    bool contains(int v) const;
    void add(int v);
    void remove(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    int min() const; // lowest member, -1 if empty

    bool disjoint_with(const VertexSet& other) const;
    VertexSet& operator|=(const VertexSet& other);

    std::vector<int> to_vector() const; // ascending
    std::span<const std::uint64_t> words() const { return w_; }

    bool operator==(const VertexSet&) const = default;

private:
    void check(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Simple undirected labeled graph on dense labels 0..n-1, one bit row per
// vertex. Rows are multi-word so n is not capped, but everything in this
// project lives at n <= 64 where each row is a single word.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph complete(int n);
    static Graph empty_graph(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);

    int order() const { return n_; }
    long edge_count() const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    VertexSet neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const; // lexicographic

    // Raw row access for bit-parallel algorithms.
    int row_words() const { return words_; }
    std::uint64_t row_word(int v, int w) const { return bits_[static_cast<std::size_t>(v) * words_ + w]; }
    // Single-word fast path, valid only when n <= 64.
    std::uint64_t neighbors_word(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check(int v) const;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Core operations. All pure; every result is a fresh value.
Graph complement(const Graph& g);
Graph induced(const Graph& g, const VertexSet& s);
// Merges u,v (uv must be an edge): merged vertex takes min(u,v)'s slot,
// labels above max(u,v) shift down by one.
Graph contract(const Graph& g, int u, int v);
bool is_connected(const Graph& g, const VertexSet& s);
// Relabels: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::string to_string(const Graph& g); // small debugging aid

} // namespace scm

#endif
