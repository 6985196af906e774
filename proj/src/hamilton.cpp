#include "pmpack/hamilton.hpp"

#include <algorithm>
#include <deque>

#include "pmpack/rng.hpp"

namespace pmpack {

void validate_cycle(const Graph& g, const VertexCycle& c, const VertexSet& expected) {
    require(c.length() >= 3, ErrorKind::InternalContradiction, "cycle shorter than 3");
    VertexSet sorted = c.order;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            ErrorKind::InternalContradiction, "cycle repeats a vertex");
    require(sorted == expected, ErrorKind::InternalContradiction,
            "cycle does not cover the expected vertex set");
    for (int i = 0; i < c.length(); ++i) {
        int u = c.order[i];
        int v = c.order[(i + 1) % c.length()];
        require(g.has_edge(u, v), ErrorKind::InternalContradiction,
                "cycle uses non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

void validate_path(const Graph& g, const VertexPath& p, const VertexSet& expected) {
    require(p.length() >= 1, ErrorKind::InternalContradiction, "empty path");
    VertexSet sorted = p.order;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            ErrorKind::InternalContradiction, "path repeats a vertex");
    require(sorted == expected, ErrorKind::InternalContradiction,
            "path does not cover the expected vertex set");
    for (int i = 0; i + 1 < p.length(); ++i)
        require(g.has_edge(p.order[i], p.order[i + 1]), ErrorKind::InternalContradiction,
                "path uses non-edge");
}

namespace {

VertexSet full_set(int n) {
    VertexSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
}

// Maximal-path / crossing-chord / absorption construction. Succeeds whenever
// every maximal path has endpoints that are adjacent or have degree sum
// >= path length, and the graph is connected; both hold under the Dirac and
// Ore conditions.
VertexCycle ham_cycle_impl(const Graph& g) {
    int n = g.order();
    std::deque<int> path{0};
    std::vector<char> in_path(n, 0);
    in_path[0] = 1;
    int path_size = 1;

    auto extend = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int u : g.neighbors(path.back()))
                if (!in_path[u]) {
                    path.push_back(u);
                    in_path[u] = 1;
                    ++path_size;
                    grew = true;
                    break;
                }
            for (int u : g.neighbors(path.front()))
                if (!in_path[u]) {
                    path.push_front(u);
                    in_path[u] = 1;
                    ++path_size;
                    grew = true;
                    break;
                }
        }
    };

    for (int round = 0; round <= 2 * n + 2; ++round) {
        extend();
        std::vector<int> p(path.begin(), path.end());
        int k = path_size - 1;
        int u = p.front(), v = p.back();

        std::vector<int> cyc;
        if (g.has_edge(u, v)) {
            cyc = p;
        } else {
            int cross = -1;
            for (int i = 0; i < k && cross < 0; ++i)
                if (g.has_edge(p[i], v) && g.has_edge(p[i + 1], u)) cross = i;
            require(cross >= 0, ErrorKind::SearchExhausted,
                    "no crossing chord; degree precondition was bypassed");
            cyc.assign(p.begin(), p.begin() + cross + 1);
            for (int i = k; i > cross; --i) cyc.push_back(p[i]);
        }

        if (path_size == n) return VertexCycle{cyc};

        // absorb a vertex adjacent to the cycle
        int w = -1, at = -1;
        for (int cand = 0; cand < n && w < 0; ++cand) {
            if (in_path[cand]) continue;
            for (std::size_t j = 0; j < cyc.size(); ++j)
                if (g.has_edge(cand, cyc[j])) {
                    w = cand;
                    at = static_cast<int>(j);
                    break;
                }
        }
        require(w >= 0, ErrorKind::SearchExhausted,
                "graph is disconnected; degree precondition was bypassed");
        path.clear();
        path.push_back(w);
        for (std::size_t j = 0; j < cyc.size(); ++j)
            path.push_back(cyc[(at + j) % cyc.size()]);
        in_path[w] = 1;
        ++path_size;
    }
    fail(ErrorKind::SearchExhausted, "cycle construction did not converge");
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    EdgeSet es;
    for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.order(), es);
}

bool ore_pairwise_ok(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) <= n) return false;
    // 2-connectivity: removing any single vertex keeps the rest connected
    if (n < 3) return false;
    for (int v = 0; v < n; ++v) {
        VertexSet rest;
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        auto [sub, map] = induced_subgraph(g, rest);
        (void)map;
        if (components(sub).size() != 1) return false;
    }
    return true;
}

// Posa-style rotation search for a spanning u..v path, u held fixed.
// Endpoint-visited pruning keeps it polynomial; completeness comes from the
// caller's restart loop and the small-n fallback.
bool rotate_to_target(const Graph& g, const std::vector<int>& start, int target,
                      std::vector<int>& out) {
    int n = g.order();
    if (start.back() == target) {
        out = start;
        return true;
    }
    std::vector<char> seen_end(n, 0);
    seen_end[start.back()] = 1;
    std::deque<std::vector<int>> queue{start};
    while (!queue.empty()) {
        std::vector<int> p = std::move(queue.front());
        queue.pop_front();
        std::vector<int> pos(n, -1);
        for (int i = 0; i < n; ++i) pos[p[i]] = i;
        int w = p.back();
        for (int x : g.neighbors(w)) {
            int i = pos[x];
            if (i < 0 || i >= n - 2) continue;
            int fresh = p[i + 1];
            if (fresh != target && seen_end[fresh]) continue;
            std::vector<int> np(p.begin(), p.begin() + i + 1);
            for (int j = n - 1; j > i; --j) np.push_back(p[j]);
            if (fresh == target) {
                out = np;
                return true;
            }
            seen_end[fresh] = 1;
            queue.push_back(std::move(np));
        }
    }
    return false;
}

// Exhaustive Hamiltonian u..v path via subset DP; used below 14 vertices.
bool dp_ham_path(const Graph& g, int from, int to, std::vector<int>& out) {
    int n = g.order();
    std::vector<std::vector<char>> reach(1u << n, std::vector<char>(n, 0));
    reach[1u << from][from] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << from))) continue;
        for (int last = 0; last < n; ++last) {
            if (!reach[mask][last]) continue;
            for (int nx : g.neighbors(last))
                if (!(mask & (1u << nx))) reach[mask | (1u << nx)][nx] = 1;
        }
    }
    unsigned full = (1u << n) - 1;
    if (!reach[full][to]) return false;
    // walk back
    out.assign(n, -1);
    unsigned mask = full;
    int cur = to;
    for (int i = n - 1; i >= 0; --i) {
        out[i] = cur;
        unsigned prev_mask = mask ^ (1u << cur);
        if (i == 0) break;
        int picked = -1;
        for (int pv : g.neighbors(cur))
            if ((prev_mask & (1u << pv)) && reach[prev_mask][pv]) {
                picked = pv;
                break;
            }
        cur = picked;
        mask = prev_mask;
    }
    return true;
}

} // namespace

VertexCycle dirac_cycle(const Graph& g) {
    int n = g.order();
    require(n >= 3, ErrorKind::PreconditionViolated, "need at least 3 vertices");
    require(2 * g.min_degree() >= n, ErrorKind::PreconditionViolated,
            "minimum degree below half the order");
    VertexCycle c = ham_cycle_impl(g);
    validate_cycle(g, c, full_set(n));
    return c;
}

VertexPath ore_path(const Graph& g, int from, int to, std::uint64_t seed) {
    int n = g.order();
    require(from >= 0 && from < n && to >= 0 && to < n, ErrorKind::IndexOutOfRange,
            "endpoint out of range");
    require(from != to, ErrorKind::PreconditionViolated, "endpoints must differ");
    bool dirac_plus = 2 * g.min_degree() > n;
    require(dirac_plus || ore_pairwise_ok(g), ErrorKind::PreconditionViolated,
            "needs min degree above half the order (or the pairwise degree-sum condition)");

    if (n == 2) {
        return VertexPath{{from, to}};
    }

    const int kAttempts = 48;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<int> perm(n), inv(n);
        if (attempt == 0) {
            for (int i = 0; i < n; ++i) perm[i] = i;
        } else {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
            perm = rng.permutation(n);
        }
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        Graph h = attempt == 0 ? g : relabel(g, perm);
        int hu = perm[from], hv = perm[to];

        VertexCycle c = ham_cycle_impl(h);
        // spanning paths starting at hu, one per cycle direction
        int at = static_cast<int>(std::find(c.order.begin(), c.order.end(), hu) - c.order.begin());
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) {
                int idx = dir == 0 ? (at + i) % n : (at - i + n) % n;
                p[i] = c.order[idx];
            }
            std::vector<int> found;
            if (rotate_to_target(h, p, hv, found)) {
                VertexPath res;
                res.order.reserve(n);
                for (int v : found) res.order.push_back(inv[v]);
                validate_path(g, res, full_set(n));
                require(res.front() == from && res.back() == to,
                        ErrorKind::InternalContradiction, "path endpoints drifted");
                return res;
            }
        }
    }

    if (n < 14) {
        std::vector<int> found;
        if (dp_ham_path(g, from, to, found)) {
            VertexPath res{found};
            validate_path(g, res, full_set(n));
            return res;
        }
        fail(ErrorKind::SearchExhausted, "no Hamiltonian path between the endpoints");
    }
    fail(ErrorKind::SearchExhausted, "rotation search gave up");
}

std::pair<Matching, Matching> even_cycle_matchings(const VertexCycle& c, int host_n) {
    int len = c.length();
    require(len % 2 == 0, ErrorKind::OddCycle,
            "cycle length " + std::to_string(len) + " is odd");
    EdgeSet a, b;
    for (int i = 0; i < len; ++i) {
        Edge e(c.order[i], c.order[(i + 1) % len]);
        (i % 2 == 0 ? a : b).push_back(e);
    }
    return {Matching(std::move(a), host_n), Matching(std::move(b), host_n)};
}

} // namespace pmpack
