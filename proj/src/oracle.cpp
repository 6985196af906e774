#include "pmpack/oracle.hpp"

#include <algorithm>
#include <map>

namespace pmpack {

namespace {

void check_cancel(const std::atomic<bool>* cancel) {
    if (cancel && cancel->load(std::memory_order_relaxed))
        fail(ErrorKind::Cancelled, "search cancelled by caller");
}

struct Enumerator {
    const Graph& g;
    long long cap;
    const std::atomic<bool>* cancel;
    std::vector<char> covered;
    EdgeSet current;
    std::vector<Matching> out;

    void run() {
        covered.assign(g.order(), 0);
        recurse();
    }

    void recurse() {
        check_cancel(cancel);
        int v = -1;
        for (int i = 0; i < g.order(); ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v < 0) {
            require(static_cast<long long>(out.size()) < cap, ErrorKind::CapExceeded,
                    "more than " + std::to_string(cap) + " perfect matchings");
            out.push_back(Matching(current, g.order()));
            return;
        }
        for (int u : g.neighbors(v)) {
            if (u < v || covered[u]) continue;
            covered[v] = covered[u] = 1;
            current.emplace_back(v, u);
            recurse();
            current.pop_back();
            covered[v] = covered[u] = 0;
        }
    }
};

struct Packer {
    const Graph& g;
    const std::vector<Matching>& pms;
    const std::atomic<bool>* cancel;
    int n = 0, m = 0;
    std::map<Edge, int> edge_id;
    std::vector<std::vector<int>> pm_edges;      // edge ids per matching
    std::vector<std::vector<int>> vertex_edges;  // edge ids at each vertex
    std::vector<int> edge_u, edge_v;

    std::vector<int> best;
    std::vector<int> chosen;
    std::vector<char> edge_used;
    std::vector<int> pm_at0;
    long long nodes = 0;

    Packer(const Graph& graph, const std::vector<Matching>& list, const std::atomic<bool>* c)
        : g(graph), pms(list), cancel(c), n(graph.order()) {
        for (const Edge& e : g.edges()) {
            int id = m++;
            edge_id.emplace(e, id);
            edge_u.push_back(e.u);
            edge_v.push_back(e.v);
        }
        vertex_edges.assign(n, {});
        for (const auto& [e, id] : edge_id) {
            vertex_edges[e.u].push_back(id);
            vertex_edges[e.v].push_back(id);
        }
        pm_edges.reserve(pms.size());
        pm_at0.reserve(pms.size());
        for (const Matching& pm : pms) {
            std::vector<int> ids;
            ids.reserve(pm.edges.size());
            int at0 = -1;
            for (const Edge& e : pm.edges) {
                int id = edge_id.at(e);
                ids.push_back(id);
                if (e.u == 0) at0 = id;
            }
            require(at0 >= 0, ErrorKind::InternalContradiction,
                    "perfect matching does not cover vertex 0");
            pm_edges.push_back(std::move(ids));
            pm_at0.push_back(at0);
        }
    }

    bool compatible(int idx) const {
        for (int id : pm_edges[idx])
            if (edge_used[id]) return false;
        return true;
    }

    // every further matching must use an unused edge at the min-degree
    // vertex, so the remaining candidates at that vertex bound the gain
    int upper_bound(const std::vector<int>& cands) const {
        std::vector<char> avail(m, 0);
        for (int idx : cands)
            for (int id : pm_edges[idx]) avail[id] = 1;
        int bound = static_cast<int>(cands.size());
        for (int v = 0; v < n; ++v) {
            int c = 0;
            for (int id : vertex_edges[v])
                if (avail[id]) ++c;
            bound = std::min(bound, c);
        }
        return bound;
    }

    bool conflicts(int a, int b) const {
        for (int id : pm_edges[a])
            if (std::find(pm_edges[b].begin(), pm_edges[b].end(), id) != pm_edges[b].end())
                return true;
        return false;
    }

    // Every perfect matching covers vertex 0, so a packing picks pairwise
    // distinct vertex-0 edges. Branch: which candidate (if any) supplies the
    // vertex-0 edge of the first remaining candidate. Depth is bounded by
    // deg(0).
    void search(const std::vector<int>& cands) {
        ++nodes;
        check_cancel(cancel);
        if (chosen.size() > best.size()) best = chosen;
        if (cands.empty()) return;
        if (static_cast<int>(chosen.size()) + upper_bound(cands) <=
            static_cast<int>(best.size()))
            return;
        int pivot_edge = pm_at0[cands.front()];
        std::vector<int> group, rest;
        for (int idx : cands) (pm_at0[idx] == pivot_edge ? group : rest).push_back(idx);
        for (int c : group) {
            chosen.push_back(c);
            for (int id : pm_edges[c]) edge_used[id] = 1;
            std::vector<int> surviving;
            for (int idx : rest)
                if (!conflicts(c, idx)) surviving.push_back(idx);
            search(surviving);
            for (int id : pm_edges[c]) edge_used[id] = 0;
            chosen.pop_back();
        }
        search(rest);
    }

    PackingResult run() {
        edge_used.assign(m, 0);
        // greedy seed
        std::vector<int> greedy;
        std::vector<char> used(m, 0);
        for (std::size_t i = 0; i < pms.size(); ++i) {
            bool ok = true;
            for (int id : pm_edges[i])
                if (used[id]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            greedy.push_back(static_cast<int>(i));
            for (int id : pm_edges[i]) used[id] = 1;
        }
        best = greedy;

        std::vector<int> all(pms.size());
        for (std::size_t i = 0; i < pms.size(); ++i) all[i] = static_cast<int>(i);
        search(all);

        PackingResult res;
        res.pm_count = static_cast<long long>(pms.size());
        res.max_disjoint = static_cast<int>(best.size());
        res.nodes_explored = nodes;
        res.witness_family.host_n = n;
        std::sort(best.begin(), best.end());
        for (int idx : best) res.witness_family.matchings.push_back(pms[idx]);
        return res;
    }
};

} // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, long long cap,
                                                  const std::atomic<bool>* cancel) {
    require(g.order() % 2 == 0, ErrorKind::OddOrder, "odd order has no perfect matchings");
    require(cap >= 0, ErrorKind::PreconditionViolated, "negative cap");
    Enumerator e{g, cap, cancel, {}, {}, {}};
    e.run();
    return std::move(e.out);
}

PackingResult max_disjoint_pm(const Graph& g, long long cap, const std::atomic<bool>* cancel) {
    std::vector<Matching> pms = enumerate_perfect_matchings(g, cap, cancel);
    if (pms.empty()) {
        PackingResult res;
        res.witness_family.host_n = g.order();
        return res;
    }
    Packer packer(g, pms, cancel);
    return packer.run();
}

} // namespace pmpack
