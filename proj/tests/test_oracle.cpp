#include <doctest.h>

#include <functional>

#include "pmpack/oracle.hpp"
#include "test_support.hpp"

using namespace pmpack;
using pmtest::count_perfect_matchings_dp;
using pmtest::random_graph;

TEST_CASE("perfect matching enumeration on fixed instances") {
    CHECK(enumerate_perfect_matchings(gen_complete(4), 100).size() == 3);
    CHECK(enumerate_perfect_matchings(gen_cycle(6), 100).size() == 2);
    CHECK(enumerate_perfect_matchings(gen_petersen(), 100).size() == 6);
    CHECK_THROWS_WITH_AS(enumerate_perfect_matchings(gen_complete(5), 100),
                         doctest::Contains("OddOrder"), Error);
    CHECK_THROWS_WITH_AS(enumerate_perfect_matchings(gen_complete(8), 10),
                         doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("enumeration is duplicate-free, valid, and matches an independent count") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + 2 * (trial % 3); // 4, 6, 8
        Graph g = random_graph(n, 30 + (trial * 17) % 60, 600 + trial);
        auto pms = enumerate_perfect_matchings(g, 100000);
        for (std::size_t i = 0; i < pms.size(); ++i) {
            validate_matching_in(g, pms[i]);
            CHECK(pms[i].perfect);
            if (i > 0) CHECK(pms[i - 1].edges < pms[i].edges);
        }
        CHECK(static_cast<long long>(pms.size()) == count_perfect_matchings_dp(g));
    }
}

TEST_CASE("max disjoint packing on fixed instances") {
    PackingResult k4 = max_disjoint_pm(gen_complete(4));
    CHECK(k4.pm_count == 3);
    CHECK(k4.max_disjoint == 3);
    CHECK(verify_family(gen_complete(4), k4.witness_family).ok);

    PackingResult c6 = max_disjoint_pm(gen_cycle(6));
    CHECK(c6.pm_count == 2);
    CHECK(c6.max_disjoint == 2);

    PackingResult pet = max_disjoint_pm(gen_petersen());
    CHECK(pet.pm_count == 6);
    CHECK(pet.max_disjoint == 1);
    // cross-check: every pair of its perfect matchings shares an edge
    auto pms = enumerate_perfect_matchings(gen_petersen(), 100);
    for (std::size_t i = 0; i < pms.size(); ++i)
        for (std::size_t j = i + 1; j < pms.size(); ++j) {
            bool shared = false;
            for (const Edge& e : pms[i].edges)
                if (pms[j].contains(e)) shared = true;
            CHECK(shared);
        }
}

TEST_CASE("complete graphs pack a full one-factorization") {
    for (int n : {4, 6, 8, 10}) {
        PackingResult pr = max_disjoint_pm(gen_complete(n));
        CHECK(pr.max_disjoint == n - 1);
        CHECK(verify_family(gen_complete(n), pr.witness_family).ok);
    }
}

TEST_CASE("balanced complete bipartite graphs pack n/2") {
    for (int half : {2, 3, 4, 5}) {
        std::vector<Edge> es;
        for (int u = 0; u < half; ++u)
            for (int v = half; v < 2 * half; ++v) es.emplace_back(u, v);
        Graph g(2 * half, es);
        PackingResult pr = max_disjoint_pm(g);
        CHECK(pr.max_disjoint == half);
    }
}

TEST_CASE("packing witness is optimal against exhaustive pair checks") {
    // on graphs small enough, verify no family of size max+1 exists by
    // recursive search over the enumeration
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(8, 55 + trial % 30, 880 + trial);
        auto pms = enumerate_perfect_matchings(g, 100000);
        PackingResult pr = max_disjoint_pm(g);
        EdgeSet all = g.edges();
        // brute-force the packing number independently
        std::function<int(std::size_t, std::vector<char>&)> rec =
            [&](std::size_t from, std::vector<char>& used) -> int {
            int best = 0;
            for (std::size_t i = from; i < pms.size(); ++i) {
                bool ok = true;
                std::vector<int> ids;
                for (const Edge& e : pms[i].edges) {
                    int id = static_cast<int>(
                        std::lower_bound(all.begin(), all.end(), e) - all.begin());
                    ids.push_back(id);
                    if (used[id]) ok = false;
                }
                if (!ok) continue;
                for (int id : ids) used[id] = 1;
                best = std::max(best, 1 + rec(i + 1, used));
                for (int id : ids) used[id] = 0;
            }
            return best;
        };
        std::vector<char> used(g.edge_count(), 0);
        CHECK(pr.max_disjoint == rec(0, used));
        CHECK(verify_family(g, pr.witness_family).ok);
        CHECK(pr.witness_family.size() == pr.max_disjoint);
    }
}

TEST_CASE("cancellation token aborts long searches") {
    std::atomic<bool> stop{true};
    CHECK_THROWS_WITH_AS(enumerate_perfect_matchings(gen_complete(12), 10000000, &stop),
                         doctest::Contains("Cancelled"), Error);
}
