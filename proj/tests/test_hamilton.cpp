#include <doctest.h>

#include "pmpack/hamilton.hpp"
#include "test_support.hpp"

using namespace pmpack;
using pmtest::random_graph_min_degree;
using pmtest::range_set;

TEST_CASE("dirac cycle on fixed instances") {
    Graph k4 = gen_complete(4);
    VertexCycle c = dirac_cycle(k4);
    validate_cycle(k4, c, range_set(0, 4));

    Graph c4 = gen_cycle(4);
    VertexCycle c2 = dirac_cycle(c4);
    validate_cycle(c4, c2, range_set(0, 4));

    Graph k6m = gen_complete(6).remove_edges({{0, 1}, {2, 3}, {4, 5}});
    CHECK(k6m.min_degree() == 4);
    validate_cycle(k6m, dirac_cycle(k6m), range_set(0, 6));
}

TEST_CASE("dirac cycle rejections") {
    CHECK_THROWS_AS(dirac_cycle(gen_cycle(5).remove_edges({{0, 1}})), Error);
    CHECK_THROWS_AS(dirac_cycle(Graph(2, {{0, 1}})), Error);
}

TEST_CASE("ore path on fixed instances") {
    Graph k5 = gen_complete(5);
    VertexPath p = ore_path(k5, 0, 3);
    validate_path(k5, p, range_set(0, 5));
    CHECK(p.front() == 0);
    CHECK(p.back() == 3);

    Graph k6m = gen_complete(6).remove_edges({{0, 1}, {2, 3}, {4, 5}});
    VertexPath p2 = ore_path(k6m, 0, 1);
    validate_path(k6m, p2, range_set(0, 6));
    CHECK(p2.front() == 0);
    CHECK(p2.back() == 1);

    CHECK_THROWS_WITH_AS(ore_path(gen_cycle(6), 0, 1), doctest::Contains("PreconditionViolated"),
                         Error);
    CHECK_THROWS_AS(ore_path(k5, 2, 2), Error);
}

TEST_CASE("even cycle matchings") {
    VertexCycle c4{{0, 1, 2, 3}};
    auto [a, b] = even_cycle_matchings(c4, 4);
    CHECK(a.edges == EdgeSet{{0, 1}, {2, 3}});
    CHECK(b.edges == EdgeSet{{0, 3}, {1, 2}});

    VertexCycle c6{{0, 1, 2, 3, 4, 5}};
    auto [a6, b6] = even_cycle_matchings(c6, 6);
    CHECK(a6.size() == 3);
    CHECK(b6.size() == 3);
    // disjoint classes whose union is the cycle edge set
    EdgeSet all = a6.edges;
    all.insert(all.end(), b6.edges.begin(), b6.edges.end());
    std::sort(all.begin(), all.end());
    CHECK(all == gen_cycle(6).edges());

    VertexCycle c5{{0, 1, 2, 3, 4}};
    CHECK_THROWS_WITH_AS(even_cycle_matchings(c5, 5), doctest::Contains("OddCycle"), Error);
}

TEST_CASE("dirac cycle succeeds across random degree-qualified graphs") {
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(trial ^ 0xDD);
        int n = 6 + rng.below_int(35); // 6..40
        Graph g = random_graph_min_degree(n, 40, (n + 1) / 2, 20000 + trial);
        REQUIRE(2 * g.min_degree() >= n);
        VertexCycle c = dirac_cycle(g);
        validate_cycle(g, c, range_set(0, n));
    }
}

TEST_CASE("ore path succeeds across random degree-qualified graphs") {
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(trial ^ 0xEE);
        int n = 6 + rng.below_int(35); // 6..40
        Graph g = random_graph_min_degree(n, 40, n / 2 + 1, 30000 + trial);
        REQUIRE(2 * g.min_degree() > n);
        int u = rng.below_int(n);
        int v = (u + 1 + rng.below_int(n - 1)) % n;
        VertexPath p = ore_path(g, u, v);
        validate_path(g, p, range_set(0, n));
        CHECK(p.front() == u);
        CHECK(p.back() == v);
    }
}
