#pragma once

#include <optional>
#include <vector>

#include "pmpack/graph.hpp"

namespace pmpack {

/// Set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
    EdgeSet edges;
    int host_n = 0;
    bool perfect = false;

    Matching() = default;
    Matching(EdgeSet es, int n);

    int size() const { return static_cast<int>(edges.size()); }

    /// mate[v] = matched partner or -1.
    std::vector<int> mate_map() const;

    bool contains(const Edge& e) const;
};

/// Checks pairwise disjointness and ranges; throws InternalContradiction.
void validate_matching(const Matching& m);
/// Additionally checks every edge belongs to g.
void validate_matching_in(const Graph& g, const Matching& m);

/// Maximum-cardinality matching (blossom algorithm, deterministic
/// lowest-index scan order).
Matching maximum_matching(const Graph& g);

/// Perfect matching if one exists.
std::optional<Matching> perfect_matching(const Graph& g);

struct FactorCriticalResult {
    bool critical = false;
    /// cert[i] = perfect matching of g minus vertex i (labels of g);
    /// populated only when critical.
    std::vector<Matching> cert;
};

/// True iff |g| is odd and g-v has a perfect matching for every v.
FactorCriticalResult is_factor_critical(const Graph& g);

/// True iff |g| is even and g-u-v has a perfect matching for all u != v.
bool is_bicritical(const Graph& g);

/// Certificate that a graph has no perfect matching: deleting s_set leaves
/// only odd factor-critical components, at least |s_set|+2 of them.
struct BergeWitness {
    VertexSet s_set;
    /// Components of g - s_set, sorted by (size, smallest member).
    std::vector<VertexSet> comps;
    /// cert[i][j] = perfect matching of comps[i] minus comps[i][j], in host
    /// labels.
    std::vector<std::vector<Matching>> cert;

    int s() const { return static_cast<int>(s_set.size()); }
    int q() const { return static_cast<int>(comps.size()); }
};

/// Extracts a witness for an even-order graph without a perfect matching.
/// Starts from the Gallai-Edmonds set A(g) and dissolves any even components
/// so that every remaining component is factor-critical.
BergeWitness berge_witness(const Graph& g);

/// Recomputes every witness invariant from scratch; throws
/// InternalContradiction on the first failure.
void validate_witness(const Graph& g, const BergeWitness& w);

} // namespace pmpack
