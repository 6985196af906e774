#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "pmpack/family.hpp"

namespace pmpack {

/// Exact maximum number of pairwise edge-disjoint perfect matchings,
/// certified by exhausted branch-and-bound search over the full enumeration.
struct PackingResult {
    int max_disjoint = 0;
    MatchingFamily witness_family;
    long long pm_count = 0;
    long long nodes_explored = 0;
};

/// All perfect matchings in canonical (lexicographic) order. Raises
/// CapExceeded once more than cap matchings are found, OddOrder for odd n.
/// The optional cancel flag is polled cooperatively.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, long long cap,
                                                  const std::atomic<bool>* cancel = nullptr);

/// Exact set packing over the perfect matchings (conflict = shared edge).
/// Greedy lower bound plus an available-degree upper bound for pruning.
PackingResult max_disjoint_pm(const Graph& g, long long cap = 200000,
                              const std::atomic<bool>* cancel = nullptr);

} // namespace pmpack
