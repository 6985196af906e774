#include "pmpack/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pmpack {

void BipartiteGraph::add(int x, int y) {
    require(x >= 0 && x < x_size && y >= 0 && y < y_size, ErrorKind::IndexOutOfRange,
            "bipartite edge out of range");
    auto& nb = adj[x];
    auto it = std::lower_bound(nb.begin(), nb.end(), y);
    require(it == nb.end() || *it != y, ErrorKind::DuplicateEdge, "duplicate bipartite edge");
    nb.insert(it, y);
}

bool BipartiteGraph::has(int x, int y) const {
    const auto& nb = adj[x];
    return std::binary_search(nb.begin(), nb.end(), y);
}

int BipartiteGraph::y_degree(int y) const {
    int d = 0;
    for (const auto& nb : adj) d += std::binary_search(nb.begin(), nb.end(), y) ? 1 : 0;
    return d;
}

BipartiteGraph BipartiteGraph::remove_matching(const Matching& m) const {
    BipartiteGraph out(x_size, y_size);
    std::vector<int> matched_y(x_size, -1);
    for (const Edge& e : m.edges) {
        require(e.u < x_size && e.v >= x_size && e.v < order(), ErrorKind::InternalContradiction,
                "matching edge does not respect the bipartition");
        matched_y[e.u] = e.v - x_size;
    }
    for (int x = 0; x < x_size; ++x)
        for (int y : adj[x])
            if (y != matched_y[x]) out.adj[x].push_back(y);
    return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp with lowest-index tie-breaking throughout.
struct HopcroftKarp {
    const BipartiteGraph& b;
    std::vector<int> mate_x, mate_y, dist;

    explicit HopcroftKarp(const BipartiteGraph& bg)
        : b(bg), mate_x(bg.x_size, -1), mate_y(bg.y_size, -1), dist(bg.x_size, kInf) {}

    bool bfs() {
        std::deque<int> queue;
        bool reachable_free_y = false;
        for (int x = 0; x < b.x_size; ++x) {
            if (mate_x[x] == -1) {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = kInf;
            }
        }
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : b.adj[x]) {
                int nx = mate_y[y];
                if (nx == -1) {
                    reachable_free_y = true;
                } else if (dist[nx] == kInf) {
                    dist[nx] = dist[x] + 1;
                    queue.push_back(nx);
                }
            }
        }
        return reachable_free_y;
    }

    bool dfs(int x) {
        for (int y : b.adj[x]) {
            int nx = mate_y[y];
            if (nx == -1 || (dist[nx] == dist[x] + 1 && dfs(nx))) {
                mate_x[x] = y;
                mate_y[y] = x;
                return true;
            }
        }
        dist[x] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (int x = 0; x < b.x_size; ++x)
                if (mate_x[x] == -1) dfs(x);
    }
};

} // namespace

BipartiteOutcome bipartite_matching_or_violator(const BipartiteGraph& b) {
    HopcroftKarp hk(b);
    hk.run();

    bool saturated = true;
    for (int x = 0; x < b.x_size; ++x)
        if (hk.mate_x[x] == -1) saturated = false;

    if (saturated) {
        EdgeSet es;
        for (int x = 0; x < b.x_size; ++x) es.emplace_back(x, b.x_size + hk.mate_x[x]);
        return Matching(std::move(es), b.order());
    }

    // alternating reachability from the free X-vertices
    std::vector<char> seen_x(b.x_size, 0), seen_y(b.y_size, 0);
    std::deque<int> queue;
    for (int x = 0; x < b.x_size; ++x)
        if (hk.mate_x[x] == -1) {
            seen_x[x] = 1;
            queue.push_back(x);
        }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : b.adj[x]) {
            if (seen_y[y]) continue;
            seen_y[y] = 1;
            int nx = hk.mate_y[y];
            if (nx != -1 && !seen_x[nx]) {
                seen_x[nx] = 1;
                queue.push_back(nx);
            }
        }
    }
    HallViolator hv;
    for (int x = 0; x < b.x_size; ++x)
        if (seen_x[x]) hv.w.push_back(x);
    for (int y = 0; y < b.y_size; ++y)
        if (seen_y[y]) hv.neighborhood.push_back(y);

    // the frontier is exactly N(W), and it is strictly smaller than W
    std::vector<char> recount(b.y_size, 0);
    int count = 0;
    for (int x : hv.w)
        for (int y : b.adj[x])
            if (!recount[y]) {
                recount[y] = 1;
                ++count;
            }
    require(count == static_cast<int>(hv.neighborhood.size()),
            ErrorKind::InternalContradiction, "violator frontier is not N(W)");
    require(count < static_cast<int>(hv.w.size()), ErrorKind::InternalContradiction,
            "violator is not actually deficient");
    return hv;
}

Matching matching_with_exclusions(const BipartiteGraph& b, int d, const VertexSet& x_excluded,
                                  const VertexSet& y_excluded) {
    int s = b.x_size;
    int k = static_cast<int>(x_excluded.size());
    require(b.y_size == s + 1, ErrorKind::PreconditionViolated,
            "parts must have orders s and s+1");
    require(static_cast<int>(y_excluded.size()) == k + 1, ErrorKind::PreconditionViolated,
            "need exactly k+1 excluded Y-vertices for k excluded X-vertices");
    check_vertex_set(x_excluded, s);
    check_vertex_set(y_excluded, s + 1);
    require(2 * d >= s + k + 2, ErrorKind::PreconditionViolated,
            "degree budget too small: need d >= (s+k)/2 + 1");
    require(d >= k + 1, ErrorKind::PreconditionViolated,
            "degree budget too small: need d >= k+1");
    for (int y = 0; y < b.y_size; ++y)
        require(b.y_degree(y) >= d, ErrorKind::PreconditionViolated,
                "Y-vertex " + std::to_string(y) + " has degree below the budget");
    int at_cap = 0;
    for (int x = 0; x < s; ++x) {
        int deg = static_cast<int>(b.adj[x].size());
        require(deg <= d + 2, ErrorKind::PreconditionViolated,
                "X-vertex " + std::to_string(x) + " exceeds degree d+2");
        if (deg == d + 2) ++at_cap;
    }
    require(at_cap <= 1, ErrorKind::PreconditionViolated,
            "more than one X-vertex at degree d+2");

    // reduce and match
    std::vector<int> x_keep, y_keep;
    for (int x = 0; x < s; ++x)
        if (!std::binary_search(x_excluded.begin(), x_excluded.end(), x)) x_keep.push_back(x);
    std::vector<int> y_new(s + 1, -1);
    for (int y = 0; y < s + 1; ++y)
        if (!std::binary_search(y_excluded.begin(), y_excluded.end(), y)) {
            y_new[y] = static_cast<int>(y_keep.size());
            y_keep.push_back(y);
        }
    BipartiteGraph reduced(static_cast<int>(x_keep.size()), static_cast<int>(y_keep.size()));
    for (std::size_t i = 0; i < x_keep.size(); ++i)
        for (int y : b.adj[x_keep[i]])
            if (y_new[y] >= 0) reduced.adj[i].push_back(y_new[y]);

    BipartiteOutcome out = bipartite_matching_or_violator(reduced);
    require(std::holds_alternative<Matching>(out), ErrorKind::InternalContradiction,
            "no perfect matching despite a valid degree budget");
    const Matching& sub = std::get<Matching>(out);
    EdgeSet es;
    for (const Edge& e : sub.edges) {
        int x = x_keep[e.u];
        int y = y_keep[e.v - reduced.x_size];
        es.emplace_back(x, b.x_size + y);
    }
    return Matching(std::move(es), b.order());
}

} // namespace pmpack
