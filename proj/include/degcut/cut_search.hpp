#pragma once

#include <cstdint>
#include <optional>

#include "degcut/connectivity.hpp"

namespace degcut {

enum class SearchOutcome {
    found,
    none,            // the whole subset space was exhausted without a hit
    budget_exceeded, // gave up; nothing is claimed about existence
};

struct CutSearchResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<CutCertificate> certificate;
    std::uint64_t subsets_examined = 0;
    bool fast_path = false; // answered by the neighbourhood of a minimum-degree vertex
};

inline constexpr std::uint64_t default_subset_budget = std::uint64_t{1} << 30;

/// Looks for any vertex cut S with G[S] k-degenerate.
///
/// If some minimum-degree vertex u has degree <= k+1 and N[u] != V, N(u) is
/// returned at once. Otherwise subsets are scanned by ascending size, then
/// lexicographically, so the reported cut is the first minimum-size one.
/// `none` is only reported after the full space has been covered.
/// Throws invalid_input for k < 0 or n < k+2.
CutSearchResult find_degenerate_cut(const Graph& g, int k, std::uint64_t budget = default_subset_budget);

/// First minimum cut (lexicographic) inducing a k-degenerate subgraph.
/// Requires k >= 2 and g connected; throws no_cuts_exist for complete graphs.
CutSearchResult find_min_degenerate_cut(const Graph& g, int k);

/// Certificate for s with every class flag filled. Throws invalid_input if s
/// is not a cut.
CutCertificate classify_cut(const Graph& g, const VertexSet& s);

} // namespace degcut
