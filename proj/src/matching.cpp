#include "pmpack/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pmpack {

Matching::Matching(EdgeSet es, int n) : edges(std::move(es)), host_n(n) {
    std::sort(edges.begin(), edges.end());
    perfect = (2 * static_cast<int>(edges.size()) == host_n);
}

std::vector<int> Matching::mate_map() const {
    std::vector<int> mate(host_n, -1);
    for (const Edge& e : edges) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

bool Matching::contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void validate_matching(const Matching& m) {
    std::vector<char> seen(m.host_n, 0);
    for (const Edge& e : m.edges) {
        require(e.u >= 0 && e.v < m.host_n, ErrorKind::InternalContradiction,
                "matching edge out of range");
        require(!seen[e.u] && !seen[e.v], ErrorKind::InternalContradiction,
                "matching edges share vertex " + std::to_string(seen[e.u] ? e.u : e.v));
        seen[e.u] = seen[e.v] = 1;
    }
    int covered = 2 * static_cast<int>(m.edges.size());
    require(m.perfect == (covered == m.host_n), ErrorKind::InternalContradiction,
            "perfect flag inconsistent with coverage");
}

void validate_matching_in(const Graph& g, const Matching& m) {
    require(m.host_n == g.order(), ErrorKind::InternalContradiction, "matching host order mismatch");
    validate_matching(m);
    for (const Edge& e : m.edges)
        require(g.has_edge(e.u, e.v), ErrorKind::InternalContradiction,
                "matching uses non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
}

namespace {

// Classic contracted-blossom search; scan order is lowest-index first so the
// result is deterministic for a fixed input.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g) : g_(g), n_(g.order()), mate_(n_, -1) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (int u : g_.neighbors(v))
                if (mate_[u] == -1) {
                    mate_[v] = u;
                    mate_[u] = v;
                    break;
                }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) augment_from(v);
        return mate_;
    }

private:
    int lca(int a, int b) const {
        std::vector<char> on_path(n_, 0);
        int cur = a;
        for (;;) {
            cur = base_[cur];
            on_path[cur] = 1;
            if (mate_[cur] == -1) break;
            cur = parent_[mate_[cur]];
        }
        cur = b;
        for (;;) {
            cur = base_[cur];
            if (on_path[cur]) return cur;
            cur = parent_[mate_[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void augment_from(int root) {
        reached_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        reached_[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!reached_[i]) {
                                reached_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        int u = to;
                        while (u != -1) {
                            int pv = parent_[u];
                            int next = mate_[pv];
                            mate_[u] = pv;
                            mate_[pv] = u;
                            u = next;
                        }
                        return;
                    }
                    reached_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> reached_, in_blossom_;
};

VertexSet all_but(int n, int skip) {
    VertexSet out;
    out.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        if (v != skip) out.push_back(v);
    return out;
}

Matching lift_matching(const Matching& sub, const VertexSet& new_to_old, int host_n) {
    EdgeSet es;
    es.reserve(sub.edges.size());
    for (const Edge& e : sub.edges) es.emplace_back(new_to_old[e.u], new_to_old[e.v]);
    return Matching(std::move(es), host_n);
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

// Witness extraction for any graph without a perfect matching (odd order
// allowed). Returns (extra vertices, factor-critical components) in the
// labels of h. Even components of h - A(h) have perfect matchings and are
// dissolved recursively, one lowest-index vertex at a time.
void ge_parts(const Graph& h, VertexSet& s_out, std::vector<VertexSet>& comps_out) {
    int n = h.order();
    int nu = matching_number(h);
    require(2 * nu < n, ErrorKind::InternalContradiction, "ge_parts needs a deficient graph");

    std::vector<char> in_d(n, 0);
    for (int v = 0; v < n; ++v) {
        auto [sub, map] = induced_subgraph(h, all_but(n, v));
        (void)map;
        if (matching_number(sub) == nu) in_d[v] = 1;
    }
    std::vector<char> in_a(n, 0);
    VertexSet keep;
    for (int v = 0; v < n; ++v) {
        if (!in_d[v])
            for (int u : h.neighbors(v))
                if (in_d[u]) {
                    in_a[v] = 1;
                    break;
                }
        if (in_a[v])
            s_out.push_back(v);
        else
            keep.push_back(v);
    }
    auto [rest, old_to_new] = induced_subgraph(h, keep);
    (void)old_to_new;
    for (const VertexSet& comp_new : components(rest)) {
        VertexSet comp;
        comp.reserve(comp_new.size());
        for (int v : comp_new) comp.push_back(keep[v]);
        bool touches_d = false;
        for (int v : comp)
            if (in_d[v]) {
                touches_d = true;
                break;
            }
        if (touches_d) {
            comps_out.push_back(std::move(comp));
            continue;
        }
        // component of C(h): has a perfect matching, dissolve it
        int v0 = comp[0];
        s_out.push_back(v0);
        VertexSet shrunk(comp.begin() + 1, comp.end());
        auto [sub, m2] = induced_subgraph(h, shrunk);
        (void)m2;
        VertexSet inner_s;
        std::vector<VertexSet> inner_comps;
        ge_parts(sub, inner_s, inner_comps);
        for (int v : inner_s) s_out.push_back(shrunk[v]);
        for (const VertexSet& c : inner_comps) {
            VertexSet lifted;
            lifted.reserve(c.size());
            for (int v : c) lifted.push_back(shrunk[v]);
            comps_out.push_back(std::move(lifted));
        }
    }
}

} // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> mate = BlossomSolver(g).solve();
    EdgeSet es;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) es.emplace_back(v, mate[v]);
    return Matching(std::move(es), g.order());
}

std::optional<Matching> perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return std::nullopt;
    Matching m = maximum_matching(g);
    if (!m.perfect) return std::nullopt;
    return m;
}

FactorCriticalResult is_factor_critical(const Graph& g) {
    FactorCriticalResult res;
    if (g.order() % 2 == 0) return res;
    std::vector<Matching> cert;
    cert.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        VertexSet rest = all_but(g.order(), v);
        auto [sub, map] = induced_subgraph(g, rest);
        (void)map;
        auto pm = perfect_matching(sub);
        if (!pm) return res;
        cert.push_back(lift_matching(*pm, rest, g.order()));
    }
    res.critical = true;
    res.cert = std::move(cert);
    return res;
}

bool is_bicritical(const Graph& g) {
    int n = g.order();
    if (n % 2 != 0 || n < 2) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet rest;
            rest.reserve(n - 2);
            for (int w = 0; w < n; ++w)
                if (w != u && w != v) rest.push_back(w);
            auto [sub, map] = induced_subgraph(g, rest);
            (void)map;
            if (!perfect_matching(sub)) return false;
        }
    return true;
}

BergeWitness berge_witness(const Graph& g) {
    require(g.order() % 2 == 0, ErrorKind::OddOrder, "witness needs even order");
    require(!perfect_matching(g), ErrorKind::HasPerfectMatching,
            "graph has a perfect matching, no witness exists");

    BergeWitness w;
    ge_parts(g, w.s_set, w.comps);
    std::sort(w.s_set.begin(), w.s_set.end());
    std::sort(w.comps.begin(), w.comps.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    require(w.q() >= w.s() + 2, ErrorKind::InternalContradiction, "witness has q < s + 2");
    require((w.q() - w.s()) % 2 == 0, ErrorKind::InternalContradiction, "witness parity broken");

    w.cert.reserve(w.comps.size());
    for (const VertexSet& comp : w.comps) {
        require(comp.size() % 2 == 1, ErrorKind::InternalContradiction,
                "witness component of even order");
        auto [sub, map] = induced_subgraph(g, comp);
        (void)map;
        FactorCriticalResult fc = is_factor_critical(sub);
        require(fc.critical, ErrorKind::InternalContradiction,
                "witness component not factor-critical");
        std::vector<Matching> lifted;
        lifted.reserve(comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) {
            VertexSet rest;
            for (std::size_t t = 0; t < comp.size(); ++t)
                if (t != j) rest.push_back(comp[t]);
            EdgeSet es;
            for (const Edge& e : fc.cert[j].edges) es.emplace_back(comp[e.u], comp[e.v]);
            lifted.push_back(Matching(std::move(es), g.order()));
        }
        w.cert.push_back(std::move(lifted));
    }
    return w;
}

void validate_witness(const Graph& g, const BergeWitness& w) {
    check_vertex_set(w.s_set, g.order());
    require(w.q() >= w.s() + 2, ErrorKind::InternalContradiction, "q < s + 2");
    require((w.q() - w.s()) % 2 == 0, ErrorKind::InternalContradiction, "q != s (mod 2)");

    VertexSet rest;
    for (int v = 0; v < g.order(); ++v)
        if (!std::binary_search(w.s_set.begin(), w.s_set.end(), v)) rest.push_back(v);
    auto [sub, map] = induced_subgraph(g, rest);
    std::vector<VertexSet> expect;
    for (const VertexSet& c : components(sub)) {
        VertexSet lifted;
        for (int v : c) lifted.push_back(rest[v]);
        expect.push_back(std::move(lifted));
    }
    std::sort(expect.begin(), expect.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    require(expect == w.comps, ErrorKind::InternalContradiction,
            "witness components are not the components of g - S");

    require(w.cert.size() == w.comps.size(), ErrorKind::InternalContradiction,
            "certificate list size mismatch");
    for (std::size_t i = 0; i < w.comps.size(); ++i) {
        const VertexSet& comp = w.comps[i];
        require(comp.size() % 2 == 1, ErrorKind::InternalContradiction, "even component");
        require(w.cert[i].size() == comp.size(), ErrorKind::InternalContradiction,
                "certificate count mismatch");
        for (std::size_t j = 0; j < comp.size(); ++j) {
            const Matching& m = w.cert[i][j];
            validate_matching_in(g, m);
            std::vector<char> covered(g.order(), 0);
            for (const Edge& e : m.edges) {
                covered[e.u] = covered[e.v] = 1;
                bool eu_in = std::binary_search(comp.begin(), comp.end(), e.u);
                bool ev_in = std::binary_search(comp.begin(), comp.end(), e.v);
                require(eu_in && ev_in, ErrorKind::InternalContradiction,
                        "certificate edge leaves its component");
            }
            for (std::size_t t = 0; t < comp.size(); ++t) {
                bool want = t != j;
                require(covered[comp[t]] == static_cast<char>(want),
                        ErrorKind::InternalContradiction,
                        "certificate does not cover exactly component minus one vertex");
            }
        }
    }
    (void)map;
}

} // namespace pmpack
