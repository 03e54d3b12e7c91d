#pragma once

// Brute-force reference implementations for tests. They work from the
// definitions on a plain boolean matrix and share no code with the library
// algorithms they check (only Graph::edges() is used to read the input).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "degcut/graph.hpp"
#include "degcut/quad_surd.hpp"

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const degcut::Graph& g) : n(g.order()), adj(g.order(), std::vector<bool>(g.order(), false)) {
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = true;
    }

    bool in(std::uint32_t mask, int v) const { return (mask >> v) & 1u; }

    // Number of components of G[mask].
    int component_count(std::uint32_t mask) const {
        std::vector<bool> seen(n, false);
        int count = 0;
        for (int s = 0; s < n; ++s) {
            if (!in(mask, s) || seen[s])
                continue;
            ++count;
            std::vector<int> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y = 0; y < n; ++y)
                    if (in(mask, y) && adj[x][y] && !seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
            }
        }
        return count;
    }

    std::uint32_t all() const { return n == 32 ? ~0u : (1u << n) - 1; }

    bool is_cut(std::uint32_t s) const { return component_count(all() & ~s) >= 2; }

    int min_degree_in(std::uint32_t mask) const {
        int best = n;
        for (int v = 0; v < n; ++v) {
            if (!in(mask, v))
                continue;
            int d = 0;
            for (int w = 0; w < n; ++w)
                d += in(mask, w) && adj[v][w];
            best = std::min(best, d);
        }
        return best;
    }

    // Degeneracy of G[mask] as the largest minimum degree over all nonempty
    // induced subgraphs.
    int degeneracy_in(std::uint32_t mask) const {
        int best = 0;
        for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask)
            best = std::max(best, min_degree_in(sub));
        return best;
    }

    int kappa() const {
        for (int size = 0; size <= n - 2; ++size)
            for (std::uint32_t s = 0; s <= all(); ++s)
                if (__builtin_popcount(s) == size && is_cut(s))
                    return size;
        return n - 1;
    }

    std::vector<std::uint32_t> minimum_cuts() const {
        int k = kappa();
        std::vector<std::uint32_t> out;
        for (std::uint32_t s = 0; s <= all(); ++s)
            if (__builtin_popcount(s) == k && is_cut(s))
                out.push_back(s);
        return out;
    }

    bool has_degenerate_cut(int k) const {
        for (std::uint32_t s = 0; s <= all(); ++s)
            if (__builtin_popcount(s) <= n - 2 && is_cut(s) && degeneracy_in(s) <= k)
                return true;
        return false;
    }

    // Peels vertices of current degree <= k in a random order.
    std::uint32_t core_random_order(int k, std::mt19937& rng) const {
        std::uint32_t alive = all();
        while (true) {
            std::vector<int> low;
            for (int v = 0; v < n; ++v) {
                if (!in(alive, v))
                    continue;
                int d = 0;
                for (int w = 0; w < n; ++w)
                    d += in(alive, w) && adj[v][w];
                if (d <= k)
                    low.push_back(v);
            }
            if (low.empty())
                return alive;
            std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
            alive &= ~(1u << low[pick(rng)]);
        }
    }
};

inline std::uint32_t mask_of(const degcut::VertexSet& s) { return static_cast<std::uint32_t>(s.word(0)); }

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

inline Decimal50 decimal(const degcut::Rational& r) {
    return Decimal50(r.num().str()) / Decimal50(r.den().str());
}

/// a + b sqrt(k) evaluated in 50-digit decimal arithmetic.
inline Decimal50 decimal(const degcut::QuadSurd& x) {
    return decimal(x.a()) + decimal(x.b()) * boost::multiprecision::sqrt(Decimal50(x.radicand()));
}

} // namespace oracle
