#include "degcut/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "degcut/errors.hpp"

namespace degcut {

namespace {

void check_k(int k) {
    if (k < 0)
        throw invalid_input("k must be non-negative");
}

void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw invalid_input("vertex set contains vertices outside the graph");
}

// Word-level peeling for graphs of order <= 64.
std::uint64_t core_mask(const Graph& g, std::uint64_t alive, int k) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (std::popcount(g.row_word(v) & alive) <= k) {
                alive &= ~(std::uint64_t{1} << v);
                changed = true;
            }
        }
    }
    return alive;
}

struct Peel {
    std::vector<int> order;
    int degeneracy = 0;
};

Peel smallest_last(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int top = 0;
    s.for_each([&](int v) {
        deg[v] = g.neighbors(v).count_common(s);
        top = std::max(top, deg[v]);
    });
    std::vector<VertexSet> bucket(static_cast<std::size_t>(top + 1));
    s.for_each([&](int v) { bucket[deg[v]].insert(v); });

    Peel out;
    VertexSet alive = s;
    int cur = 0;
    for (int left = s.size(); left > 0; --left) {
        while (bucket[cur].empty())
            ++cur;
        int v = bucket[cur].first();
        bucket[cur].erase(v);
        alive.erase(v);
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, cur);
        (g.neighbors(v) & alive).for_each([&](int w) {
            bucket[deg[w]].erase(w);
            bucket[--deg[w]].insert(w);
        });
        cur = std::max(cur - 1, 0);
    }
    return out;
}

} // namespace

VertexSet max_k_core_within(const Graph& g, const VertexSet& s, int k) {
    check_k(k);
    check_subset(g, s);
    if (g.order() <= 64)
        return VertexSet::from_word(core_mask(g, s.word(0), k));

    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue;
    VertexSet alive = s;
    s.for_each([&](int v) {
        deg[v] = g.neighbors(v).count_common(s);
        if (deg[v] <= k)
            queue.push_back(v);
    });
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        alive.erase(v);
        (g.neighbors(v) & alive).for_each([&](int w) {
            if (--deg[w] == k)
                queue.push_back(w);
        });
    }
    return alive;
}

bool is_k_degenerate_within(const Graph& g, const VertexSet& s, int k) {
    return max_k_core_within(g, s, k).empty();
}

int degeneracy_within(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    if (g.order() > 64)
        return smallest_last(g, s).degeneracy;
    std::uint64_t alive = s.word(0);
    int result = 0;
    while (alive != 0) {
        int best = -1, best_deg = 0;
        for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(g.row_word(v) & alive);
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        result = std::max(result, best_deg);
        alive &= ~(std::uint64_t{1} << best);
    }
    return result;
}

CoreCertificate max_k_core(const Graph& g, int k) { return {k, max_k_core_within(g, g.vertices(), k)}; }

bool is_k_degenerate(const Graph& g, int k) { return max_k_core(g, k).empty(); }

int degeneracy(const Graph& g) { return degeneracy_within(g, g.vertices()); }

std::vector<int> degeneracy_ordering(const Graph& g) { return smallest_last(g, g.vertices()).order; }

} // namespace degcut
