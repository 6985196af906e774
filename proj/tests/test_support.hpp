#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "pmpack/generators.hpp"
#include "pmpack/graph.hpp"
#include "pmpack/matching.hpp"
#include "pmpack/rng.hpp"

namespace pmtest {

using namespace pmpack;

/// Independent maximum-matching oracle: plain include/exclude recursion on
/// the lowest uncovered vertex. Exponential, for n <= ~16 only.
inline int brute_force_max_matching(const Graph& g, std::vector<char>& covered) {
    int v = -1;
    for (int i = 0; i < g.order(); ++i)
        if (!covered[i]) {
            v = i;
            break;
        }
    if (v < 0) return 0;
    covered[v] = 1;
    int best = brute_force_max_matching(g, covered); // leave v unmatched
    for (int u : g.neighbors(v)) {
        if (covered[u]) continue;
        covered[u] = 1;
        best = std::max(best, 1 + brute_force_max_matching(g, covered));
        covered[u] = 0;
    }
    covered[v] = 0;
    return best;
}

inline int brute_force_max_matching(const Graph& g) {
    std::vector<char> covered(g.order(), 0);
    return brute_force_max_matching(g, covered);
}

/// Independent perfect-matching counter via memoized subset recursion.
inline long long count_pm_subsets(const Graph& g, unsigned mask,
                                  std::map<unsigned, long long>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (!(mask & (1u << v))) ++v;
    long long total = 0;
    for (int u : g.neighbors(v))
        if (mask & (1u << u))
            total += count_pm_subsets(g, mask & ~(1u << v) & ~(1u << u), memo);
    memo[mask] = total;
    return total;
}

inline long long count_perfect_matchings_dp(const Graph& g) {
    if (g.order() % 2 != 0) return 0;
    std::map<unsigned, long long> memo;
    return count_pm_subsets(g, (1u << g.order()) - 1, memo);
}

/// Seeded Erdos-Renyi-style graph; edge kept when rng value < prob_percent.
inline Graph random_graph(int n, int prob_percent, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0xE5));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(prob_percent))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random graph patched to minimum degree >= floor, by adding edges from
/// deficient vertices to their lowest-index non-neighbours.
inline Graph random_graph_min_degree(int n, int prob_percent, int floor, std::uint64_t seed) {
    Graph g = random_graph(n, prob_percent, seed);
    std::vector<Edge> edges = g.edges();
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    Rng rng(mix_seed(seed, 0xF1));
    for (int v = 0; v < n; ++v) {
        while (deg[v] < floor) {
            Graph cur(n, edges);
            std::vector<int> options;
            for (int u = 0; u < n; ++u)
                if (u != v && !cur.has_edge(u, v)) options.push_back(u);
            if (options.empty()) break;
            int u = options[rng.below(options.size())];
            edges.emplace_back(v, u);
            ++deg[v];
            ++deg[u];
        }
    }
    return Graph(n, edges);
}

inline VertexSet range_set(int from, int to) {
    VertexSet out;
    for (int v = from; v < to; ++v) out.push_back(v);
    return out;
}

} // namespace pmtest
