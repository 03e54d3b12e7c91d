#pragma once

#include <cstdint>
#include <vector>

#include "degcut/graph.hpp"

namespace degcut {

/// Parameters of the ring of cliques: s cliques C_0..C_{s-1} of order k+2 in
/// cyclic order, a perfect matching between consecutive cliques, and an apex
/// joined to all of C_0.
struct RingSpec {
    int k = 2;
    int s = 3;
    /// matchings[i][j] is the vertex of C_{i+1 mod s} matched to vertex j of
    /// C_i. Empty means identity on every interface.
    std::vector<std::vector<int>> matchings;

    int clique_order() const { return k + 2; }
    int order() const { return (k + 2) * s + 1; }
    /// Throws invalid_input for k < 2, s < 3, or a non-bijective matching.
    void validate() const;
};

/// Vertex j of C_i is i*(k+2) + j; the apex is the last vertex.
Graph ring_of_cliques(const RingSpec& spec);
int ring_apex(const RingSpec& spec);
VertexSet ring_clique(const RingSpec& spec, int i);

/// Ring spec with an independent uniformly random matching per interface.
RingSpec random_ring_spec(int k, int s, std::uint64_t seed);

/// Join of K_{k+2} (vertices 0..k+1) with an independent set of n-k-2
/// vertices. Has (k+2)n - C(k+3,2) edges. Throws invalid_input for k < 0 or
/// n < k+3.
Graph join_extremal(int k, int n);

} // namespace degcut
