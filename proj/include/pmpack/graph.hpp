#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmpack/errors.hpp"

namespace pmpack {

/// Undirected edge in canonical order (u < v).
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return u == x ? v : u; }
};

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;
/// Sorted list of canonical edges.
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency sets.
/// Immutable after construction; all operations below are pure.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    bool has_edge(int u, int v) const;

    /// All edges in canonical sorted order.
    EdgeSet edges() const;

    /// Copy of this graph with the given edges removed. Every edge must be
    /// present.
    Graph remove_edges(const EdgeSet& es) const;
    /// Copy with the given edges added. None may already be present.
    Graph add_edges(const EdgeSet& es) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Constructs a graph, rejecting loops, duplicates and out-of-range indices.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// Degree threshold 2*ceil(n/4) - 1 for even n; equals n/2 - 1 when
/// n % 4 == 0 and n/2 when n % 4 == 2.
int d_threshold(int n);

/// True iff every degree is k or k+1 and some vertex attains k.
bool is_semiregular(const Graph& g, int k);

/// Edges with exactly one endpoint in x.
EdgeSet edge_boundary(const Graph& g, const VertexSet& x);

/// Edges with one endpoint in x and the other in y.
EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Induced subgraph on x plus the old->new index map (-1 for vertices
/// outside x); x itself serves as the new->old map.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& x);

/// Complement graph (no loops).
Graph complement(const Graph& g);

/// ceil(n/4) as an integer.
inline int quarter_ceil(int n) { return (n + 3) / 4; }

/// Validates that x is a sorted duplicate-free subset of 0..n-1.
void check_vertex_set(const VertexSet& x, int n);

} // namespace pmpack
