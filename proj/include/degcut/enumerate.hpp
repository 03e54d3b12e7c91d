#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degcut/graph.hpp"

namespace degcut {

/// Largest order accepted when isomorphism rejection is requested.
inline constexpr int max_iso_reject_order = 8;

/// Filters for labeled graph enumeration. Every filter is isomorphism
/// invariant, so `iso_reject` keeps exactly one representative per class.
struct EnumerationSpec {
    int n = 0;
    int min_edges = 0;
    std::optional<int> max_edges; // defaults to C(n, 2)
    std::optional<int> min_degree;
    bool connected_only = false;
    bool iso_reject = false;

    int pair_count() const { return n * (n - 1) / 2; }
    int edge_cap() const { return max_edges.value_or(pair_count()); }

    /// Throws invalid_input on a malformed range or iso_reject with n > 8.
    void validate() const;
};

/// Restricts an enumeration to the graphs whose first `prefix_length` edge
/// decisions (pairs in graph6 order, bit i = pair i present) equal `prefix`.
struct EnumerationPartition {
    int prefix_length = 0;
    std::uint64_t prefix = 0;
};

/// All 2^prefix_length partitions in ascending prefix order. Concatenating
/// their outputs reproduces the unpartitioned stream.
std::vector<EnumerationPartition> split_enumeration(const EnumerationSpec& spec, int prefix_length);

/// Emits every labeled graph meeting `spec` once, in a fixed depth-first order
/// (pair absent before pair present). Degree and edge-count pruning never drops
/// a qualifying graph. Orders above 64 are rejected.
void for_each_labeled(const EnumerationSpec& spec, const std::function<void(const Graph&)>& fn,
                      const EnumerationPartition& part = {});

std::uint64_t count_labeled(const EnumerationSpec& spec, const EnumerationPartition& part = {});

/// Minimum adjacency code over all relabelings. The code packs the upper
/// triangle in graph6 pair order, first pair as the most significant bit.
/// Brute force over n! permutations; n <= 8.
std::uint64_t canonical_code(const Graph& g);
std::uint64_t adjacency_code(const Graph& g);
/// True iff g already carries its minimum adjacency code.
bool is_canonical(const Graph& g);
/// The relabeling of g achieving the minimum code.
Graph canonical_form(const Graph& g);

} // namespace degcut
