#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "degcut/vertex_set.hpp"

namespace degcut {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1 with a dense bitset
/// adjacency matrix. Order is capped at `max_vertices`.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of order n.
    explicit Graph(int n);

    /// Throws invalid_input on loops or out-of-range endpoints. Duplicates
    /// (in either orientation) are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Adjacency row as a single word; only meaningful when order() <= 64.
    std::uint64_t row_word(int v) const { return adj_[v].word(0); }

    int min_degree() const;
    int max_degree() const;

    /// Edges (u, v) with u < v, ordered by v then u (graph6 column order).
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool is_complete() const { return 2 * static_cast<long long>(m_) == static_cast<long long>(n_) * (n_ - 1); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// G[s], relabelled in ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// G - s.
Graph remove_vertices(const Graph& g, const VertexSet& s);
/// Disjoint union of g and h plus every edge between them. Vertices of h are
/// shifted by g.order().
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph petersen_graph();

/// G(n, p): each pair independently present with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

} // namespace degcut
