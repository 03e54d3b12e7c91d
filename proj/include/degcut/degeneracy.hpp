#pragma once

#include <vector>

#include "degcut/graph.hpp"

namespace degcut {

/// Witness that a graph is not k-degenerate: a vertex set whose induced
/// subgraph has minimum degree at least k+1. Empty when no k-core exists.
struct CoreCertificate {
    int k = 0;
    VertexSet core;

    bool empty() const { return core.empty(); }
};

/// The unique maximal k-core: the fixed point of repeatedly deleting vertices
/// of current degree <= k. Throws invalid_input for k < 0.
CoreCertificate max_k_core(const Graph& g, int k);
bool is_k_degenerate(const Graph& g, int k);
/// Least k with is_k_degenerate(g, k); 0 for edgeless graphs.
int degeneracy(const Graph& g);

/// Smallest-last peeling order (bucket queue, ties to the lowest index).
std::vector<int> degeneracy_ordering(const Graph& g);

// Same quantities for G[s], computed without building the induced subgraph.
VertexSet max_k_core_within(const Graph& g, const VertexSet& s, int k);
bool is_k_degenerate_within(const Graph& g, const VertexSet& s, int k);
int degeneracy_within(const Graph& g, const VertexSet& s);

} // namespace degcut
