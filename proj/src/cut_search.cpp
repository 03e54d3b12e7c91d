#include "degcut/cut_search.hpp"

#include <bit>
#include <string>
#include <vector>

#include "degcut/degeneracy.hpp"
#include "degcut/errors.hpp"

namespace degcut {

namespace {

bool degenerate_cut(const Graph& g, const VertexSet& s, int k) {
    if (!is_cut(g, s))
        return false;
    // Any graph on at most k+1 vertices is k-degenerate.
    return s.size() <= k + 1 || is_k_degenerate_within(g, s, k);
}

// Visits the size-r subsets of {0..n-1} lexicographically until visit returns false.
template <class Visit>
bool subsets_of_size(int n, int r, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    while (true) {
        VertexSet s;
        for (int v : idx)
            s.insert(v);
        if (!visit(s))
            return false;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

CutSearchResult find_degenerate_cut(const Graph& g, int k, std::uint64_t budget) {
    const int n = g.order();
    if (k < 0)
        throw invalid_input("k must be non-negative");
    if (n < k + 2)
        throw invalid_input("cut search needs n >= k+2 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");

    CutSearchResult result;
    if (n > 0 && g.min_degree() <= k + 1) {
        int u = 0;
        while (g.degree(u) != g.min_degree())
            ++u;
        if (g.degree(u) < n - 1) {
            result.outcome = SearchOutcome::found;
            result.fast_path = true;
            result.certificate = certify_cut(g, g.neighbors(u));
            return result;
        }
    }

    for (int r = 0; r <= n - 2; ++r) {
        bool finished = subsets_of_size(n, r, [&](const VertexSet& s) {
            if (result.subsets_examined == budget) {
                result.outcome = SearchOutcome::budget_exceeded;
                return false;
            }
            ++result.subsets_examined;
            if (!degenerate_cut(g, s, k))
                return true;
            result.outcome = SearchOutcome::found;
            result.certificate = certify_cut(g, s);
            return false;
        });
        if (!finished)
            return result;
    }
    result.outcome = SearchOutcome::none;
    return result;
}

CutSearchResult find_min_degenerate_cut(const Graph& g, int k) {
    if (k < 2)
        throw invalid_input("minimum degenerate cut search needs k >= 2");
    if (g.is_complete())
        throw no_cuts_exist();
    if (!is_connected(g))
        throw invalid_input("minimum degenerate cut search needs a connected graph");

    CutSearchResult result;
    for_each_minimum_cut(g, [&](const VertexSet& s) {
        ++result.subsets_examined;
        if (s.size() > k + 1 && !is_k_degenerate_within(g, s, k))
            return true;
        result.outcome = SearchOutcome::found;
        result.certificate = certify_cut(g, s);
        return false;
    });
    return result;
}

CutCertificate classify_cut(const Graph& g, const VertexSet& s) { return certify_cut(g, s); }

} // namespace degcut
