#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pmpack/graph.hpp"

namespace pmpack {

enum class GraphFamily {
    SharpG1,
    SharpG2,
    Counterexample,
    RandomSemiregular,
    Complete,
    Cycle,
    Petersen,
};

struct GeneratorSpec {
    GraphFamily family = GraphFamily::Complete;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
};

/// Complete bipartite K_{n/2-1, n/2+1} plus a perfect matching on the larger
/// part; tight instance for the decomposition bound. Requires n even, n/2
/// odd, n >= 6. Degrees are {n/2, n/2+1}.
Graph gen_sharp_g1(int n);

/// K_{n/2-1, n/2+1} minus a maximum matching plus a minimal cover of the
/// matched larger-part vertices. Requires n even, n/2 even, n >= 8. Degrees
/// are {n/2-1, n/2}.
Graph gen_sharp_g2(int n);

/// (d_threshold(n)-1)-regular graph with no perfect matching: two cliques of
/// order n/2 when n/2 is odd, else K_{n/2-1} plus K_{n/2+1} minus a
/// Hamiltonian cycle.
Graph gen_counterexample(int n);

/// Random graph with every degree k or k+1: circulant start, degree-
/// preserving double-edge swaps, optional random matching to lift degrees,
/// more swaps. Deterministic in (n, k, seed).
Graph gen_random_semiregular(int n, int k, std::uint64_t seed);

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_petersen();

Graph gen_named(const GeneratorSpec& spec);

std::optional<GraphFamily> family_from_string(std::string_view name);
const char* family_name(GraphFamily family);

} // namespace pmpack
