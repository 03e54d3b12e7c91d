#pragma once

#include <functional>
#include <vector>

#include "degcut/graph.hpp"

namespace degcut {

/// Largest order accepted by minimum-cut enumeration.
inline constexpr int max_min_cut_order = 64;

/// A vertex cut together with the evidence that it is one: the components of
/// G - cut and the degeneracy classification of G[cut].
struct CutCertificate {
    VertexSet cut;
    std::vector<VertexSet> components; // ordered by smallest member
    int cut_degeneracy = 0;
    bool independent = false; // G[cut] edgeless
    bool forest = false;      // G[cut] acyclic
    bool bipartite = false;   // G[cut] 2-colourable

    bool is_k_degenerate(int k) const { return cut_degeneracy <= k; }
};

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of G[alive], ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive);
bool is_connected(const Graph& g);

/// True iff G - s has at least two components. Throws invalid_input when s is
/// the whole vertex set or leaves the graph.
bool is_cut(const Graph& g, const VertexSet& s);

bool is_bipartite_within(const Graph& g, const VertexSet& s);

/// Builds the full certificate for s. Throws invalid_input if s is not a cut.
CutCertificate certify_cut(const Graph& g, const VertexSet& s);

/// Maximum number of internally disjoint x-y paths for non-adjacent x, y,
/// stopping early once `cap` is reached.
int local_connectivity(const Graph& g, int x, int y, int cap);

/// Size of a smallest vertex cut; n-1 for complete graphs. Unit-capacity
/// node-split max-flow, restricted to pairs (v_i, v_j) with i <= kappa.
/// Throws invalid_input for n < 2.
int vertex_connectivity(const Graph& g);

/// Calls fn on every vertex cut of size kappa(g) in lexicographic order until
/// fn returns false. Returns kappa. Throws no_cuts_exist for complete graphs
/// and invalid_input above max_min_cut_order.
int for_each_minimum_cut(const Graph& g, const std::function<bool(const VertexSet&)>& fn);

/// Every minimum cut, certified, in lexicographic order.
std::vector<CutCertificate> minimum_cuts(const Graph& g);

} // namespace degcut
