#include "degcut/graph.hpp"

#include <algorithm>
#include <string>

#include "degcut/errors.hpp"

namespace degcut {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw invalid_input("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw invalid_input("loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw invalid_input("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = v == 0 ? degree(v) : std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(int u, int v) {
    if (adj_[u].contains(v))
        return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    if (!adj_[u].contains(v))
        return;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --m_;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    auto keep = (s & g.vertices()).members();
    if (keep.size() != static_cast<std::size_t>(s.size()))
        throw invalid_input("vertex set contains vertices outside the graph");
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw invalid_input("vertex set contains vertices outside the graph");
    return induced_subgraph(g, g.vertices() - s);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw invalid_input("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(i, i + 5);               // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

} // namespace degcut
