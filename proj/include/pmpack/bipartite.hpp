#pragma once

#include <variant>
#include <vector>

#include "pmpack/matching.hpp"

namespace pmpack {

/// Bipartite graph with parts X (0..x_size-1) and Y (0..y_size-1); adj maps
/// each X-vertex to its sorted Y-neighbours. When serialized as a plain
/// graph, vertices are X followed by Y (y index j becomes x_size + j).
struct BipartiteGraph {
    int x_size = 0;
    int y_size = 0;
    std::vector<std::vector<int>> adj;

    BipartiteGraph() = default;
    BipartiteGraph(int xs, int ys) : x_size(xs), y_size(ys), adj(xs) {}

    int order() const { return x_size + y_size; }
    void add(int x, int y);
    bool has(int x, int y) const;
    int y_degree(int y) const;

    /// Same graph with the edges of a matching (composite labels) removed.
    BipartiteGraph remove_matching(const Matching& m) const;
};

/// Subset W of X whose neighbourhood is smaller than itself.
struct HallViolator {
    VertexSet w;
    VertexSet neighborhood;
};

using BipartiteOutcome = std::variant<Matching, HallViolator>;

/// Hopcroft-Karp search. Returns a matching saturating X (composite labels:
/// y becomes x_size + y), or a Hall violator read off the final alternating
/// reachability frontier.
BipartiteOutcome bipartite_matching_or_violator(const BipartiteGraph& b);

/// Perfect matching of b minus x_excluded minus y_excluded under the degree
/// budget that guarantees one exists: with s = |X|, |Y| = s+1, k = |x_excluded|,
/// |y_excluded| = k+1, requires d >= (s+k)/2 + 1, d >= k+1, every Y-degree
/// >= d, every X-degree <= d+2 with at most one X-vertex of degree d+2.
/// The preconditions are checked (PreconditionViolated names the failing
/// inequality); a missing matching despite valid preconditions raises
/// InternalContradiction.
Matching matching_with_exclusions(const BipartiteGraph& b, int d, const VertexSet& x_excluded,
                                  const VertexSet& y_excluded);

} // namespace pmpack
