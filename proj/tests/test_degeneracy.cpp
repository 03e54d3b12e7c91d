#include <doctest.h>

#include <random>

#include "degcut/degeneracy.hpp"
#include "degcut/enumerate.hpp"
#include "oracles.hpp"

using namespace degcut;

TEST_CASE("max_k_core examples") {
    CHECK(max_k_core(complete_graph(4), 2).core == VertexSet::range(4));
    CHECK(max_k_core(path_graph(6), 1).empty());
    CHECK(max_k_core(star_graph(5), 1).empty());
    CHECK(max_k_core(cycle_graph(5), 1).core == VertexSet::range(5));
    CHECK(max_k_core(cycle_graph(5), 2).empty());
    CHECK(max_k_core(empty_graph(0), 0).empty());
    CHECK_THROWS(max_k_core(cycle_graph(3), -1));
}

TEST_CASE("is_k_degenerate examples") {
    CHECK(is_k_degenerate(empty_graph(4), 0));
    CHECK(is_k_degenerate(path_graph(4), 1));
    CHECK_FALSE(is_k_degenerate(complete_graph(4), 2));
    CHECK(is_k_degenerate(complete_graph(4), 3));
}

TEST_CASE("degeneracy examples") {
    CHECK(degeneracy(complete_graph(5)) == 4);
    CHECK(degeneracy(cycle_graph(6)) == 2);
    CHECK(degeneracy(petersen_graph()) == 3);
    CHECK(degeneracy(empty_graph(7)) == 0);
    CHECK(degeneracy(empty_graph(0)) == 0);
    CHECK(oracle::Matrix(petersen_graph()).degeneracy_in(0x3ff) == 3);
}

TEST_CASE("core is removal-order independent and certified") {
    std::mt19937_64 rng(11);
    std::mt19937 order_rng(12);
    std::uniform_int_distribution<int> order(1, 14);
    std::uniform_real_distribution<double> density(0, 1);
    for (int i = 0; i < 1000; ++i) {
        auto g = random_graph(order(rng), density(rng), rng);
        oracle::Matrix mat(g);
        for (int k = 0; k <= 4; ++k) {
            auto core = max_k_core(g, k).core;
            REQUIRE(oracle::mask_of(core) == mat.core_random_order(k, order_rng));
            core.for_each([&](int v) { CHECK((g.neighbors(v) & core).size() >= k + 1); });
            if (!core.empty())
                CHECK(core.size() >= k + 2);
            CHECK(max_k_core(g, k + 1).core.subset_of(core));
        }
        CHECK(is_k_degenerate(g, g.max_degree()));
    }
}

TEST_CASE("degeneracy agrees with the subset oracle") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> order(0, 10);
    std::uniform_real_distribution<double> density(0, 1);
    for (int i = 0; i < 500; ++i) {
        auto g = random_graph(order(rng), density(rng), rng);
        oracle::Matrix mat(g);
        int d = degeneracy(g);
        REQUIRE(d == mat.degeneracy_in(mat.all()));
        auto ordering = degeneracy_ordering(g);
        CHECK(ordering.size() == static_cast<std::size_t>(g.order()));
        // Each vertex has at most d neighbours later in the ordering.
        VertexSet later = g.vertices();
        for (int v : ordering) {
            later.erase(v);
            CHECK((g.neighbors(v) & later).size() <= d);
        }
        auto s = VertexSet::range(g.order());
        for (int v = 0; v < g.order(); v += 2)
            s.erase(v);
        CHECK(degeneracy_within(g, s) == mat.degeneracy_in(oracle::mask_of(s)));
    }
}

TEST_CASE("bucket-queue peeling on large graphs") {
    std::mt19937_64 rng(14);
    for (int n : {65, 130, 300, 512}) {
        auto g = random_graph(n, 0.08, rng);
        auto ordering = degeneracy_ordering(g);
        int d = degeneracy(g);
        VertexSet later = g.vertices();
        int worst = 0;
        for (int v : ordering) {
            later.erase(v);
            worst = std::max(worst, (g.neighbors(v) & later).size());
        }
        CHECK(worst == d);
        CHECK_FALSE(max_k_core(g, d - 1).empty());
        CHECK(max_k_core(g, d).empty());
    }
}

TEST_CASE("complete graphs and small orders") {
    for (int n = 2; n <= 9; ++n)
        CHECK_FALSE(is_k_degenerate(complete_graph(n), n - 2));
    for (int k = 0; k <= 4; ++k)
        for (int n = 0; n <= k + 1; ++n) {
            EnumerationSpec spec;
            spec.n = n;
            for_each_labeled(spec, [&](const Graph& g) { REQUIRE(is_k_degenerate(g, k)); });
        }
}
