#include "pmpack/graph.hpp"

#include <algorithm>
#include <deque>

namespace pmpack {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    require(n >= 0, ErrorKind::IndexOutOfRange, "negative vertex count");
    adj_.assign(n_, {});
    EdgeSet canon;
    canon.reserve(edges.size());
    for (const Edge& e : edges) {
        require(e.u >= 0 && e.v < n_, ErrorKind::IndexOutOfRange,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                    std::to_string(n_));
        require(e.u != e.v, ErrorKind::LoopEdge,
                "loop at vertex " + std::to_string(e.u));
        canon.push_back(e);
    }
    std::sort(canon.begin(), canon.end());
    for (std::size_t i = 1; i < canon.size(); ++i) {
        require(!(canon[i] == canon[i - 1]), ErrorKind::DuplicateEdge,
                "duplicate edge (" + std::to_string(canon[i].u) + "," + std::to_string(canon[i].v) + ")");
    }
    for (const Edge& e : canon) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = static_cast<int>(canon.size());
}

void Graph::check_vertex(int v) const {
    require(v >= 0 && v < n_, ErrorKind::IndexOutOfRange,
            "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_) d = std::min<int>(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max<int>(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_edges(const EdgeSet& es) const {
    for (const Edge& e : es)
        require(has_edge(e.u, e.v), ErrorKind::InternalContradiction,
                "removing absent edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    EdgeSet removed = es;
    std::sort(removed.begin(), removed.end());
    EdgeSet kept;
    kept.reserve(m_);
    for (const Edge& e : edges())
        if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
    return Graph(n_, kept);
}

Graph Graph::add_edges(const EdgeSet& es) const {
    EdgeSet all = edges();
    for (const Edge& e : es) {
        require(!has_edge(e.u, e.v), ErrorKind::DuplicateEdge,
                "adding present edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        all.push_back(e);
    }
    return Graph(n_, all);
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

int d_threshold(int n) {
    require(n >= 2 && n % 2 == 0, ErrorKind::OddOrder,
            "degree threshold needs even n >= 2, got " + std::to_string(n));
    return 2 * quarter_ceil(n) - 1;
}

bool is_semiregular(const Graph& g, int k) {
    require(k >= 0, ErrorKind::PreconditionViolated, "negative base degree");
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d != k && d != k + 1) return false;
    }
    // k is the base degree, so it must actually occur
    return g.order() == 0 || g.min_degree() == k;
}

void check_vertex_set(const VertexSet& x, int n) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i] >= 0 && x[i] < n, ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(x[i]) + " out of range for n=" + std::to_string(n));
        require(i == 0 || x[i - 1] < x[i], ErrorKind::PreconditionViolated,
                "vertex set not sorted/unique");
    }
}

EdgeSet edge_boundary(const Graph& g, const VertexSet& x) {
    check_vertex_set(x, g.order());
    std::vector<char> in(g.order(), 0);
    for (int v : x) in[v] = 1;
    EdgeSet out;
    for (int v : x)
        for (int u : g.neighbors(v))
            if (!in[u]) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_vertex_set(x, g.order());
    check_vertex_set(y, g.order());
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (int v : x) in_x[v] = 1;
    for (int v : y) in_y[v] = 1;
    EdgeSet out;
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) {
            if (v >= u) continue;
            if ((in_x[v] && in_y[u]) || (in_y[v] && in_x[u])) out.emplace_back(v, u);
        }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& x) {
    check_vertex_set(x, g.order());
    std::vector<int> old_to_new(g.order(), -1);
    for (std::size_t i = 0; i < x.size(); ++i) old_to_new[x[i]] = static_cast<int>(i);
    EdgeSet es;
    for (int v : x)
        for (int u : g.neighbors(v))
            if (v < u && old_to_new[u] >= 0) es.emplace_back(old_to_new[v], old_to_new[u]);
    return {Graph(static_cast<int>(x.size()), es), std::move(old_to_new)};
}

Graph complement(const Graph& g) {
    EdgeSet es;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return Graph(g.order(), es);
}

} // namespace pmpack
