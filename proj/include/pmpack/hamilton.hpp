#pragma once

#include <cstdint>
#include <utility>

#include "pmpack/matching.hpp"

namespace pmpack {

/// Cyclic sequence of distinct vertices; consecutive entries (including the
/// wrap-around pair) are adjacent in the host graph.
struct VertexCycle {
    std::vector<int> order;
    int length() const { return static_cast<int>(order.size()); }
};

/// Open sequence of distinct vertices with fixed endpoints.
struct VertexPath {
    std::vector<int> order;
    int length() const { return static_cast<int>(order.size()); }
    int front() const { return order.front(); }
    int back() const { return order.back(); }
};

/// Checks adjacency of consecutive vertices, distinctness, and that the
/// cycle/path covers exactly `expected` (pass the full vertex set for
/// Hamiltonian objects). Throws InternalContradiction on failure.
void validate_cycle(const Graph& g, const VertexCycle& c, const VertexSet& expected);
void validate_path(const Graph& g, const VertexPath& p, const VertexSet& expected);

/// Hamiltonian cycle of a graph with min degree >= |g|/2 (|g| >= 3).
/// Constructive: maximal path, crossing-chord closure, absorption of
/// outside vertices. Total under the precondition.
VertexCycle dirac_cycle(const Graph& g);

/// Hamiltonian path between the prescribed endpoints of a graph with min
/// degree > |g|/2 (also accepted: 2-connected with pairwise degree sums of
/// non-adjacent vertices above |g|). Rotation-extension with seeded
/// restarts; exhaustive subset DP below 14 vertices as a fallback.
VertexPath ore_path(const Graph& g, int from, int to, std::uint64_t seed = 0);

/// The two alternating edge classes of an even cycle; each is a perfect
/// matching of the cycle's vertex set. The first class contains the edge
/// between order[0] and order[1].
std::pair<Matching, Matching> even_cycle_matchings(const VertexCycle& c, int host_n);

} // namespace pmpack
