#include "degcut/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "degcut/errors.hpp"

namespace degcut {

void RingSpec::validate() const {
    if (k < 2)
        throw invalid_input("ring of cliques needs k >= 2");
    if (s < 3)
        throw invalid_input("ring of cliques needs s >= 3");
    if (order() > max_vertices)
        throw invalid_input("ring of cliques of order " + std::to_string(order()) + " exceeds capacity");
    if (matchings.empty())
        return;
    if (static_cast<int>(matchings.size()) != s)
        throw invalid_input("need one matching per interface");
    for (const auto& perm : matchings) {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> identity(static_cast<std::size_t>(clique_order()));
        std::iota(identity.begin(), identity.end(), 0);
        if (sorted != identity)
            throw invalid_input("interface matching is not a permutation of 0..k+1");
    }
}

int ring_apex(const RingSpec& spec) { return spec.order() - 1; }

VertexSet ring_clique(const RingSpec& spec, int i) {
    VertexSet c;
    for (int j = 0; j < spec.clique_order(); ++j)
        c.insert(i * spec.clique_order() + j);
    return c;
}

Graph ring_of_cliques(const RingSpec& spec) {
    spec.validate();
    const int q = spec.clique_order();
    Graph g(spec.order());
    for (int i = 0; i < spec.s; ++i) {
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b)
                g.add_edge(i * q + a, i * q + b);
        const int next = (i + 1) % spec.s;
        for (int j = 0; j < q; ++j) {
            int partner = spec.matchings.empty() ? j : spec.matchings[i][j];
            g.add_edge(i * q + j, next * q + partner);
        }
    }
    for (int j = 0; j < q; ++j)
        g.add_edge(ring_apex(spec), j);
    return g;
}

RingSpec random_ring_spec(int k, int s, std::uint64_t seed) {
    RingSpec spec{k, s, {}};
    spec.validate();
    std::mt19937_64 rng(seed);
    for (int i = 0; i < s; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(k + 2));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        spec.matchings.push_back(std::move(perm));
    }
    return spec;
}

Graph join_extremal(int k, int n) {
    if (k < 0)
        throw invalid_input("k must be non-negative");
    if (n < k + 3)
        throw invalid_input("join construction needs n >= k+3");
    return join(complete_graph(k + 2), empty_graph(n - k - 2));
}

} // namespace degcut
