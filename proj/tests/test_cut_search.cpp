#include <doctest.h>

#include <random>

#include "degcut/constructions.hpp"
#include "degcut/cut_search.hpp"
#include "degcut/degeneracy.hpp"
#include "degcut/enumerate.hpp"
#include "degcut/errors.hpp"
#include "oracles.hpp"

using namespace degcut;

TEST_CASE("find_degenerate_cut examples") {
    auto k23 = find_degenerate_cut(complete_bipartite(2, 3), 0);
    REQUIRE(k23.outcome == SearchOutcome::found);
    CHECK(k23.certificate->cut == VertexSet{0, 1});
    CHECK(k23.certificate->independent);

    auto join = find_degenerate_cut(join_extremal(1, 6), 1);
    CHECK(join.outcome == SearchOutcome::none);
    CHECK_FALSE(join.certificate);

    auto c5 = find_degenerate_cut(cycle_graph(5), 0);
    REQUIRE(c5.outcome == SearchOutcome::found);
    CHECK(c5.certificate->cut.size() == 2);
    CHECK(c5.certificate->independent);
    CHECK_FALSE(c5.fast_path); // degree 2 exceeds k+1 = 1
    auto c5_forest = find_degenerate_cut(cycle_graph(5), 1);
    CHECK(c5_forest.fast_path);
    CHECK(c5_forest.certificate->cut == VertexSet{1, 4});

    CHECK_THROWS_AS(find_degenerate_cut(complete_graph(3), 2), invalid_input);
    CHECK_THROWS_AS(find_degenerate_cut(complete_graph(3), -1), invalid_input);
}

TEST_CASE("exhaustive search is minimal and lexicographic") {
    // Two K_4's sharing {0, 1}: the neighbourhood shortcut does not apply
    // because every degree is at least 3 > k+1 for k = 0.
    auto g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                    {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
    auto r = find_degenerate_cut(g, 1);
    REQUIRE(r.outcome == SearchOutcome::found);
    CHECK_FALSE(r.fast_path);
    CHECK(r.certificate->cut == VertexSet{0, 1});
    CHECK(find_degenerate_cut(g, 0).outcome == SearchOutcome::none);
}

TEST_CASE("budget exhaustion is distinct from none") {
    auto g = join_extremal(2, 10);
    auto r = find_degenerate_cut(g, 2, 10);
    CHECK(r.outcome == SearchOutcome::budget_exceeded);
    CHECK(find_degenerate_cut(g, 2).outcome == SearchOutcome::none);
}

TEST_CASE("cut search agrees with the brute-force oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> density(0.3, 1);
    for (int i = 0; i < 2000; ++i) {
        auto g = random_graph(order(rng), density(rng), rng);
        oracle::Matrix mat(g);
        for (int k = 0; k <= 2 && k + 2 <= g.order(); ++k) {
            auto r = find_degenerate_cut(g, k);
            REQUIRE(r.outcome != SearchOutcome::budget_exceeded);
            REQUIRE((r.outcome == SearchOutcome::found) == mat.has_degenerate_cut(k));
            if (r.certificate) {
                auto mask = oracle::mask_of(r.certificate->cut);
                CHECK(mat.is_cut(mask));
                CHECK(mat.degeneracy_in(mask) <= k);
            }
        }
    }
}

TEST_CASE("no-cut verdicts: rejected subsets all contain a core") {
    std::mt19937 rng(32);
    auto g = join_extremal(2, 9);
    REQUIRE(find_degenerate_cut(g, 2).outcome == SearchOutcome::none);
    oracle::Matrix mat(g);
    std::uniform_int_distribution<std::uint32_t> pick(0, mat.all());
    for (int i = 0; i < 2000; ++i) {
        auto mask = pick(rng);
        if (__builtin_popcount(mask) > g.order() - 2 || !mat.is_cut(mask))
            continue;
        CHECK_FALSE(max_k_core_within(g, VertexSet::from_word(mask), 2).empty());
    }
}

TEST_CASE("find_min_degenerate_cut") {
    auto ring = ring_of_cliques(RingSpec{2, 3, {}});
    CHECK(find_min_degenerate_cut(ring, 2).outcome == SearchOutcome::none);

    auto join = join_extremal(2, 8);
    CHECK(find_min_degenerate_cut(join, 2).outcome == SearchOutcome::none);
    auto cuts = minimum_cuts(join);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].cut == VertexSet::range(4));

    auto cycle = find_min_degenerate_cut(cycle_graph(6), 2);
    REQUIRE(cycle.outcome == SearchOutcome::found);
    CHECK(cycle.certificate->cut == VertexSet{0, 2});

    CHECK_THROWS_AS(find_min_degenerate_cut(complete_graph(5), 2), no_cuts_exist);
    CHECK_THROWS_AS(find_min_degenerate_cut(cycle_graph(6), 1), invalid_input);
    CHECK_THROWS_AS(find_min_degenerate_cut(empty_graph(3), 2), invalid_input);
}

TEST_CASE("small connectivity always yields a minimum degenerate cut") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> density(0.3, 0.9);
    for (int i = 0; i < 500; ++i) {
        auto g = random_graph(9, density(rng), rng);
        if (!is_connected(g) || g.is_complete())
            continue;
        for (int k = 2; k <= 4; ++k)
            if (vertex_connectivity(g) <= k + 1)
                CHECK(find_min_degenerate_cut(g, k).outcome == SearchOutcome::found);
    }
}

TEST_CASE("classify_cut") {
    auto p5 = classify_cut(path_graph(5), {2});
    CHECK(p5.independent);
    CHECK(p5.forest);
    CHECK(p5.bipartite);
    CHECK(p5.cut_degeneracy == 0);

    RingSpec spec{2, 3, {}};
    auto ring = classify_cut(ring_of_cliques(spec), ring_clique(spec, 0));
    CHECK(ring.cut_degeneracy == 3);
    CHECK_FALSE(ring.is_k_degenerate(2));
    CHECK_FALSE(ring.bipartite);

    // K_{2,4} plus a C_4 on the four-side: that C_4 separates the two hubs.
    auto g = complete_bipartite(2, 4);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 2);
    auto c4 = classify_cut(g, {2, 3, 4, 5});
    CHECK(c4.bipartite);
    CHECK(c4.is_k_degenerate(2));
    CHECK_FALSE(c4.forest);

    CHECK_THROWS_AS(classify_cut(path_graph(5), {0}), invalid_input);
}

TEST_CASE("sparse graphs on at most seven vertices have independent cuts") {
    for (int n = 2; n <= 7; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        spec.max_edges = 2 * n - 4; // m < 2n - 3
        for_each_labeled(spec, [&](const Graph& g) {
            REQUIRE(find_degenerate_cut(g, 0).outcome == SearchOutcome::found);
        });
    }
}
