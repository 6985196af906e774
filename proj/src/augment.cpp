#include "pmpack/augment.hpp"

#include <algorithm>

namespace pmpack {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::SGe2: return "s>=2";
        case CaseTag::SEq1: return "s=1";
        case CaseTag::SEq0: return "s=0";
    }
    return "?";
}

bool AugmentConfig::claim_enabled(const std::string& id) const {
    return std::find(disabled_claims.begin(), disabled_claims.end(), id) ==
           disabled_claims.end();
}

namespace {

void claim(const AugmentConfig& cfg, const std::string& id, bool ok, const std::string& what) {
    if (ok || !cfg.claim_enabled(id)) return;
    throw ClaimViolation(id, what);
}

std::vector<char> mask_of(const VertexSet& s, int n) {
    std::vector<char> m(n, 0);
    for (int v : s) m[v] = 1;
    return m;
}

EdgeSet matching_between(const Matching& m, const std::vector<char>& a,
                         const std::vector<char>& b) {
    EdgeSet out;
    for (const Edge& e : m.edges)
        if ((a[e.u] && b[e.v]) || (b[e.u] && a[e.v])) out.push_back(e);
    return out;
}

EdgeSet matching_inside(const Matching& m, const std::vector<char>& a) {
    EdgeSet out;
    for (const Edge& e : m.edges)
        if (a[e.u] && a[e.v]) out.push_back(e);
    return out;
}

int boundary_count(const Matching& m, const std::vector<char>& comp) {
    int c = 0;
    for (const Edge& e : m.edges) c += (comp[e.u] != comp[e.v]) ? 1 : 0;
    return c;
}

int endpoint_in(const Edge& e, const std::vector<char>& side) {
    if (side[e.u]) return e.u;
    require(side[e.v], ErrorKind::InternalContradiction, "edge has no endpoint in the side");
    return e.v;
}

Matching combine(int host_n, std::initializer_list<const EdgeSet*> parts,
                 std::initializer_list<Edge> singles) {
    EdgeSet es;
    for (const EdgeSet* p : parts) es.insert(es.end(), p->begin(), p->end());
    for (const Edge& e : singles) es.push_back(e);
    Matching m(std::move(es), host_n);
    validate_matching(m);
    return m;
}

/// PM of the path without its first vertex: edges at odd positions.
EdgeSet path_pm_drop_front(const VertexPath& p) {
    EdgeSet out;
    for (int i = 1; i + 1 < p.length(); i += 2) out.emplace_back(p.order[i], p.order[i + 1]);
    return out;
}

/// PM of the path without its last vertex: edges at even positions.
EdgeSet path_pm_drop_back(const VertexPath& p) {
    EdgeSet out;
    for (int i = 0; i + 2 < p.length(); i += 2) out.emplace_back(p.order[i], p.order[i + 1]);
    return out;
}

VertexPath lift_path(const VertexPath& p, const VertexSet& new_to_old) {
    VertexPath out;
    out.order.reserve(p.order.size());
    for (int v : p.order) out.order.push_back(new_to_old[v]);
    return out;
}

VertexCycle lift_cycle(const VertexCycle& c, const VertexSet& new_to_old) {
    VertexCycle out;
    out.order.reserve(c.order.size());
    for (int v : c.order) out.order.push_back(new_to_old[v]);
    return out;
}

/// Bipartite view of the residual edges between the witness set and the
/// singleton components, with maps back to host labels.
struct SideGraph {
    VertexSet s_verts, u_verts;
    BipartiteGraph b;

    int s_index(int host_v) const {
        auto it = std::lower_bound(s_verts.begin(), s_verts.end(), host_v);
        require(it != s_verts.end() && *it == host_v, ErrorKind::InternalContradiction,
                "vertex not on the S side");
        return static_cast<int>(it - s_verts.begin());
    }
    int u_index(int host_v) const {
        auto it = std::lower_bound(u_verts.begin(), u_verts.end(), host_v);
        require(it != u_verts.end() && *it == host_v, ErrorKind::InternalContradiction,
                "vertex not on the U side");
        return static_cast<int>(it - u_verts.begin());
    }
    Matching lift(const Matching& composite, int host_n) const {
        EdgeSet es;
        for (const Edge& e : composite.edges)
            es.emplace_back(s_verts[e.u], u_verts[e.v - b.x_size]);
        return Matching(std::move(es), host_n);
    }
};

SideGraph build_side_graph(const Graph& h, const VertexSet& s, const VertexSet& u) {
    SideGraph sg;
    sg.s_verts = s;
    sg.u_verts = u;
    sg.b = BipartiteGraph(static_cast<int>(s.size()), static_cast<int>(u.size()));
    std::vector<int> u_pos(h.order(), -1);
    for (std::size_t i = 0; i < u.size(); ++i) u_pos[u[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int w : h.neighbors(s[i]))
            if (u_pos[w] >= 0) sg.b.adj[i].push_back(u_pos[w]);
    return sg;
}

/// Both outputs must be edge-disjoint perfect matchings of residual + member.
void check_pair(const Graph& residual, const Matching& member, const Matching& first,
                const Matching& second) {
    for (const Matching* m : {&first, &second}) {
        validate_matching(*m);
        require(m->perfect, ErrorKind::InternalContradiction,
                "augmentation produced a non-perfect matching");
        for (const Edge& e : m->edges)
            require(residual.has_edge(e.u, e.v) || member.contains(e),
                    ErrorKind::InternalContradiction,
                    "augmentation used an edge outside residual plus member");
    }
    for (const Edge& e : first.edges)
        require(!second.contains(e), ErrorKind::InternalContradiction,
                "augmentation outputs share an edge");
}

int cert_index(const VertexSet& comp, int v) {
    auto it = std::lower_bound(comp.begin(), comp.end(), v);
    require(it != comp.end() && *it == v, ErrorKind::InternalContradiction,
            "vertex not in component");
    return static_cast<int>(it - comp.begin());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

AugmentResult augment_on(const AugmentationContext& ctx, const AugmentConfig& cfg, int depth);

} // namespace

MatchingFamily apply_augment(const MatchingFamily& fam, const AugmentResult& r) {
    MatchingFamily out = fam;
    for (const auto& [idx, m] : r.swaps) {
        require(idx >= 0 && idx < out.size(), ErrorKind::InternalContradiction,
                "swap index out of range");
        out.matchings[idx] = m;
    }
    require(r.replaced >= 0 && r.replaced < out.size(), ErrorKind::InternalContradiction,
            "replacement index out of range");
    out.matchings.erase(out.matchings.begin() + r.replaced);
    out.matchings.push_back(r.first);
    out.matchings.push_back(r.second);
    return out;
}

AugmentationContext make_context(const Graph& host, const MatchingFamily& fam) {
    FamilyCheck fc = verify_family(host, fam);
    require(fc.ok, ErrorKind::PreconditionViolated, "family invalid: " + fc.violation);

    AugmentationContext ctx;
    ctx.host = host;
    ctx.family = fam;
    ctx.base_degree = host.min_degree();
    ctx.residual = host.remove_edges(fam.all_edges());
    require(!perfect_matching(ctx.residual), ErrorKind::ResidualHasPerfectMatching,
            "residual graph still has a perfect matching");
    ctx.witness = berge_witness(ctx.residual);

    int l = fam.size();
    for (int v = 0; v < host.order(); ++v) {
        int d = ctx.residual.degree(v);
        require(d == ctx.base_degree - l || d == ctx.base_degree - l + 1,
                ErrorKind::InternalContradiction, "residual degree outside the expected window");
    }
    ctx.tag = ctx.witness.s() >= 2 ? CaseTag::SGe2
                                   : (ctx.witness.s() == 1 ? CaseTag::SEq1 : CaseTag::SEq0);
    return ctx;
}

AugmentResult augment(const Graph& host, const MatchingFamily& fam, const AugmentConfig& cfg) {
    int n = host.order();
    require(n % 2 == 0, ErrorKind::OddOrder, "host has odd order");
    require(n >= 34, ErrorKind::PreconditionViolated,
            "augmentation is specified for n >= 34, got n=" + std::to_string(n));
    int d = host.min_degree();
    require(is_semiregular(host, d), ErrorKind::PreconditionViolated,
            "host is not {D, D+1}-semi-regular");
    require(d >= d_threshold(n), ErrorKind::PreconditionViolated,
            "host degree below the decomposition threshold");
    require(fam.size() <= quarter_ceil(n) - 1, ErrorKind::PreconditionViolated,
            "family already at the guaranteed size");
    return augment_on(make_context(host, fam), cfg, 0);
}

namespace {

AugmentResult augment_on(const AugmentationContext& ctx, const AugmentConfig& cfg, int depth) {
    claim(cfg, "swap-budget", depth <= 4, "member swaps did not terminate");
    switch (ctx.tag) {
        case CaseTag::SGe2: return augment_s_ge2(ctx, cfg);
        case CaseTag::SEq1: return augment_s_eq1(ctx, cfg);
        case CaseTag::SEq0: break;
    }
    // the two-component case may swap a member and re-dispatch
    const BergeWitness& w = ctx.witness;
    int n = ctx.host.order();
    int l = ctx.family.size();

    claim(cfg, "q2", w.q() == 2, "expected exactly two components");
    claim(cfg, "3", l >= 1, "an empty family cannot strand a two-component residual");
    const VertexSet& c1 = w.comps[0];
    const VertexSet& c2 = w.comps[1];
    claim(cfg, "lb-c0",
          4 * static_cast<int>(c1.size()) >= n + 4 &&
              static_cast<int>(c1.size()) >= ctx.base_degree - l + 1,
          "small component below its guaranteed order");

    auto m1 = mask_of(c1, n);
    auto m2 = mask_of(c2, n);
    std::vector<int> candidates;
    for (int j = 0; j < l; ++j) {
        int cross = static_cast<int>(matching_between(ctx.family.matchings[j], m1, m2).size());
        claim(cfg, "parity", cross % 2 == 1,
              "crossing count of member " + std::to_string(j) + " is even");
        if (cross >= 3) candidates.push_back(j);
    }
    claim(cfg, "m0", !candidates.empty(), "no member with three crossing edges");

    std::string last_reason = "no attempt ran";
    for (int j : candidates) {
        const Matching& m0 = ctx.family.matchings[j];
        for (const Edge& e0 : matching_between(m0, m1, m2)) {
            int a = endpoint_in(e0, m1);
            int b = endpoint_in(e0, m2);
            const Matching& cert1 = w.cert[0][cert_index(c1, a)];
            const Matching& cert2 = w.cert[1][cert_index(c2, b)];
            Matching m0_prime = combine(n, {&cert1.edges, &cert2.edges}, {e0});
            SZeroOutcome out;
            try {
                out = s_eq0_try_m0prime(ctx, j, e0, m0_prime, cfg);
            } catch (const ClaimViolation& cv) {
                last_reason = cv.what();
                continue;
            }
            if (out.done) return out.result;
            // paper-prescribed fallback: trade the member for the new
            // matching and augment the resulting stuck state instead
            MatchingFamily swapped = ctx.family;
            swapped.matchings[j] = out.replacement;
            AugmentationContext next = make_context(ctx.host, swapped);
            AugmentResult res = augment_on(next, cfg, depth + 1);
            res.swaps.insert(res.swaps.begin(), {j, out.replacement});
            return res;
        }
    }
    throw ClaimViolation("s0-exhausted",
                         "every replacement choice failed; last: " + last_reason);
}

} // namespace

AugmentResult augment_s_ge2(const AugmentationContext& ctx, const AugmentConfig& cfg) {
    const Graph& h = ctx.residual;
    const BergeWitness& w = ctx.witness;
    int n = ctx.host.order();
    int l = ctx.family.size();
    int s = w.s();
    int q = w.q();
    int dl = ctx.base_degree - l;

    require(s >= 2, ErrorKind::PreconditionViolated, "case requires |S| >= 2");
    claim(cfg, "1-i", s >= dl && 4 * dl >= n, "witness set smaller than the residual degree");
    claim(cfg, "1-ii", q == s + 2, "expected q = s + 2, got q=" + std::to_string(q));
    for (int i = 0; i + 1 < q; ++i)
        claim(cfg, "1-iii", w.comps[i].size() == 1, "non-singleton small component");
    const VertexSet& cq = w.comps[q - 1];
    int cq_size = static_cast<int>(cq.size());
    claim(cfg, "1-iv",
          cq_size == n - 2 * s - 1 && 4 * cq_size >= n + 4 && 2 * cq_size <= n - 2,
          "large component order out of range");

    auto [cq_graph, cq_map] = induced_subgraph(h, cq);
    (void)cq_map;
    claim(cfg, "1-v",
          static_cast<int>(edge_boundary(h, cq).size()) <= s + l - ctx.base_degree &&
              2 * cq_graph.min_degree() > cq_size,
          "large component is not Hamiltonian-connected by degree");

    auto cq_mask = mask_of(cq, n);
    int m0_idx = -1;
    for (int j = 0; j < l; ++j)
        if (boundary_count(ctx.family.matchings[j], cq_mask) >= 3) {
            m0_idx = j;
            break;
        }
    claim(cfg, "2", m0_idx >= 0, "no member sends three edges across the large component");
    const Matching& m0 = ctx.family.matchings[m0_idx];

    VertexSet u_set;
    for (int i = 0; i + 1 < q; ++i) u_set.push_back(w.comps[i][0]);
    std::sort(u_set.begin(), u_set.end());
    auto u_mask = mask_of(u_set, n);
    auto s_mask = mask_of(w.s_set, n);

    claim(cfg, "budget", dl - 1 >= 2 && 2 * (dl - 1) >= s + 3,
          "degree budget for the side graph is not met");
    SideGraph f = build_side_graph(h, w.s_set, u_set);

    EdgeSet uc = matching_between(m0, u_mask, cq_mask);
    AugmentResult res;
    res.case_used = CaseTag::SGe2;
    res.replaced = m0_idx;
    res.witness_s = s;
    res.witness_q = q;

    auto cq_path = [&](int from_host, int to_host) {
        auto [g2, map2] = induced_subgraph(h, cq);
        VertexPath p = ore_path(g2, map2[from_host], map2[to_host]);
        return lift_path(p, cq);
    };

    if (uc.size() >= 2) {
        res.subcase = "u-cq-ge2";
        Edge e21 = uc[0], e22 = uc[1];
        int a1 = endpoint_in(e21, cq_mask), u1 = e21.other(a1);
        int a2 = endpoint_in(e22, cq_mask), u2 = e22.other(a2);
        VertexPath p2 = cq_path(a1, a2);
        EdgeSet m21 = path_pm_drop_front(p2);
        EdgeSet m22 = path_pm_drop_back(p2);
        Matching m21p = matching_with_exclusions(f.b, dl, {}, {f.u_index(u1)});
        Matching m22p =
            matching_with_exclusions(f.b.remove_matching(m21p), dl - 1, {}, {f.u_index(u2)});
        Matching m21h = f.lift(m21p, n), m22h = f.lift(m22p, n);
        res.first = combine(n, {&m21, &m21h.edges}, {e21});
        res.second = combine(n, {&m22, &m22h.edges}, {e22});
    } else if (uc.empty()) {
        res.subcase = "u-cq-eq0";
        EdgeSet sc = matching_between(m0, s_mask, cq_mask);
        claim(cfg, "2-sc", sc.size() >= 3, "expected three edges from S across");
        EdgeSet uu = matching_inside(m0, u_mask);
        claim(cfg, "uu-2", uu.size() >= 2, "expected two member edges inside U");
        Edge e01 = sc[0], e02 = sc[1], e01p = uu[0], e02p = uu[1];
        int a1 = endpoint_in(e01, cq_mask), s1 = e01.other(a1);
        int a2 = endpoint_in(e02, cq_mask), s2 = e02.other(a2);
        VertexPath p0 = cq_path(a1, a2);
        EdgeSet m01 = path_pm_drop_front(p0);
        EdgeSet m02 = path_pm_drop_back(p0);
        VertexSet y1{f.u_index(e01p.u), f.u_index(e01p.v)};
        std::sort(y1.begin(), y1.end());
        Matching m01p = matching_with_exclusions(f.b, dl, {f.s_index(s1)}, y1);
        VertexSet y2{f.u_index(e02p.u), f.u_index(e02p.v)};
        std::sort(y2.begin(), y2.end());
        Matching m02p = matching_with_exclusions(f.b.remove_matching(m01p), dl - 1,
                                                 {f.s_index(s2)}, y2);
        Matching m01h = f.lift(m01p, n), m02h = f.lift(m02p, n);
        res.first = combine(n, {&m01, &m01h.edges}, {e01, e01p});
        res.second = combine(n, {&m02, &m02h.edges}, {e02, e02p});
    } else {
        res.subcase = "u-cq-eq1";
        Edge e11 = uc[0];
        EdgeSet sc = matching_between(m0, s_mask, cq_mask);
        claim(cfg, "2-sc1", sc.size() >= 2, "expected two edges from S across");
        EdgeSet uu = matching_inside(m0, u_mask);
        claim(cfg, "uu-1", !uu.empty(), "expected a member edge inside U");
        Edge e12 = sc[0], e13 = uu[0];
        int a1 = endpoint_in(e11, cq_mask), u1 = e11.other(a1);
        int a2 = endpoint_in(e12, cq_mask), s2 = e12.other(a2);
        VertexPath p1 = cq_path(a1, a2);
        EdgeSet m11 = path_pm_drop_front(p1);
        EdgeSet m12 = path_pm_drop_back(p1);
        Matching m11p = matching_with_exclusions(f.b, dl, {}, {f.u_index(u1)});
        VertexSet y2{f.u_index(e13.u), f.u_index(e13.v)};
        std::sort(y2.begin(), y2.end());
        Matching m12p = matching_with_exclusions(f.b.remove_matching(m11p), dl - 1,
                                                 {f.s_index(s2)}, y2);
        Matching m11h = f.lift(m11p, n), m12h = f.lift(m12p, n);
        res.first = combine(n, {&m11, &m11h.edges}, {e11});
        res.second = combine(n, {&m12, &m12h.edges}, {e12, e13});
    }

    check_pair(h, m0, res.first, res.second);
    return res;
}

AugmentResult augment_s_eq1(const AugmentationContext& ctx, const AugmentConfig& cfg) {
    const Graph& h = ctx.residual;
    const BergeWitness& w = ctx.witness;
    int n = ctx.host.order();
    int l = ctx.family.size();
    int dl = ctx.base_degree - l;

    require(w.s() == 1, ErrorKind::PreconditionViolated, "case requires |S| = 1");
    int hub = w.s_set[0];
    claim(cfg, "q3", w.q() == 3, "expected exactly three components");
    claim(cfg, "3", l >= 1, "an empty family cannot strand a one-vertex witness");

    // order components so the last one sees the most residual edges from S
    int best = 0;
    std::vector<int> from_s(3, 0);
    for (int i = 0; i < 3; ++i) {
        from_s[i] = static_cast<int>(edges_between(h, w.s_set, w.comps[i]).size());
        if (from_s[i] > from_s[best]) best = i;
    }
    std::vector<int> order;
    for (int i = 0; i < 3; ++i)
        if (i != best) order.push_back(i);
    order.push_back(best);
    const VertexSet& t1 = w.comps[order[0]];
    const VertexSet& t2 = w.comps[order[1]];
    const VertexSet& t3 = w.comps[order[2]];

    for (int i = 0; i < 3; ++i)
        claim(cfg, "lb-c", static_cast<int>(w.comps[i].size()) >= dl,
              "component below its guaranteed order");
    auto size_ok = [&](const VertexSet& t, bool strict) {
        int ts = static_cast<int>(t.size());
        int lower = strict ? n + 4 : n;
        return 4 * ts >= lower && 2 * ts <= n - 6;
    };
    claim(cfg, "4", size_ok(t1, true) && size_ok(t2, true) && size_ok(t3, false),
          "component orders outside the guaranteed window");
    for (const VertexSet* t : {&t1, &t2, &t3}) {
        auto [g2, map2] = induced_subgraph(h, *t);
        (void)map2;
        claim(cfg, "4-hc", 2 * g2.min_degree() > static_cast<int>(t->size()),
              "component is not Hamiltonian-connected by degree");
    }

    auto t1_mask = mask_of(t1, n), t2_mask = mask_of(t2, n);
    int sel = -1;
    for (int j = 0; j < l; ++j)
        if (matching_between(ctx.family.matchings[j], t1_mask, t2_mask).size() >= 2) {
            sel = j;
            break;
        }
    claim(cfg, "5", sel >= 0, "no member with two edges between the first two components");
    const Matching& m = ctx.family.matchings[sel];
    EdgeSet cross = matching_between(m, t1_mask, t2_mask);
    Edge e1 = cross[0], e2 = cross[1];

    VertexSet t3_nb;
    for (int v : h.neighbors(hub))
        if (std::binary_search(t3.begin(), t3.end(), v)) t3_nb.push_back(v);
    claim(cfg, "v3", t3_nb.size() >= 2, "witness vertex has fewer than two neighbours in T3");

    auto comp_path = [&](const VertexSet& t, int from_host, int to_host) {
        auto [g2, map2] = induced_subgraph(h, t);
        VertexPath p = ore_path(g2, map2[from_host], map2[to_host]);
        return lift_path(p, t);
    };
    VertexPath p1 = comp_path(t1, endpoint_in(e1, t1_mask), endpoint_in(e2, t1_mask));
    VertexPath p2 = comp_path(t2, endpoint_in(e1, t2_mask), endpoint_in(e2, t2_mask));
    VertexPath p3 = comp_path(t3, t3_nb[0], t3_nb[1]);

    VertexCycle h1;
    h1.order = p1.order;
    h1.order.insert(h1.order.end(), p2.order.rbegin(), p2.order.rend());
    VertexCycle h2;
    h2.order = p3.order;
    h2.order.push_back(hub);

    Graph f_graph = h.add_edges(m.edges);
    VertexSet h1_expect = t1;
    h1_expect.insert(h1_expect.end(), t2.begin(), t2.end());
    std::sort(h1_expect.begin(), h1_expect.end());
    validate_cycle(f_graph, h1, h1_expect);
    VertexSet h2_expect = t3;
    h2_expect.push_back(hub);
    std::sort(h2_expect.begin(), h2_expect.end());
    validate_cycle(f_graph, h2, h2_expect);

    auto [a1, b1] = even_cycle_matchings(h1, n);
    auto [a2, b2] = even_cycle_matchings(h2, n);

    AugmentResult res;
    res.case_used = CaseTag::SEq1;
    res.subcase = "even-cycles";
    res.replaced = sel;
    res.witness_s = 1;
    res.witness_q = 3;
    res.first = combine(n, {&a1.edges, &a2.edges}, {});
    res.second = combine(n, {&b1.edges, &b2.edges}, {});
    check_pair(h, m, res.first, res.second);
    return res;
}

SZeroOutcome s_eq0_try_m0prime(const AugmentationContext& ctx, int m0_index, const Edge& e0,
                               const Matching& m0_prime, const AugmentConfig& cfg) {
    const Graph& h = ctx.residual;
    const BergeWitness& w = ctx.witness;
    int n = ctx.host.order();
    require(w.q() == 2, ErrorKind::PreconditionViolated, "needs a two-component witness");
    const VertexSet& c1 = w.comps[0];
    const VertexSet& c2 = w.comps[1];
    const Matching& m0 = ctx.family.matchings[m0_index];
    auto c1_mask = mask_of(c1, n), c2_mask = mask_of(c2, n);

    require(m0_prime.host_n == n, ErrorKind::PreconditionViolated,
            "replacement matching host order mismatch");
    validate_matching(m0_prime);
    require(m0_prime.perfect && m0_prime.contains(e0), ErrorKind::PreconditionViolated,
            "replacement matching must be perfect and contain the chosen crossing edge");
    for (const Edge& e : m0_prime.edges)
        require(h.has_edge(e.u, e.v) || m0.contains(e), ErrorKind::PreconditionViolated,
                "replacement matching leaves residual plus member");

    EdgeSet m0_cross = matching_between(m0, c1_mask, c2_mask);
    EdgeSet cross_left;
    for (const Edge& e : m0_cross)
        if (!m0_prime.contains(e)) cross_left.push_back(e);
    claim(cfg, "cond-lem", !cross_left.empty(),
          "every crossing edge of the member survived into the replacement");

    Graph f_graph = h.add_edges(m0.edges);
    Graph h_prime = f_graph.remove_edges(m0_prime.edges);

    SZeroOutcome out;
    if (auto mx = perfect_matching(h_prime)) {
        out.done = true;
        out.result.case_used = CaseTag::SEq0;
        out.result.subcase = "m0prime-direct";
        out.result.replaced = m0_index;
        out.result.witness_s = 0;
        out.result.witness_q = 2;
        out.result.first = m0_prime;
        out.result.second = *mx;
        check_pair(h, m0, out.result.first, out.result.second);
        return out;
    }
    BergeWitness wp = berge_witness(h_prime);
    if (wp.s() >= 1) {
        out.swapped = true;
        out.replacement = m0_prime;
        return out;
    }
    claim(cfg, "6",
          wp.q() == 2 && 4 * static_cast<int>(wp.comps[0].size()) >= n + 4,
          "new residual is not two large components");
    const VertexSet& c1p = wp.comps[0];
    const VertexSet& c2p = wp.comps[1];

    VertexSet v11 = intersect(c1, c1p);
    VertexSet v22 = intersect(c2, c2p);
    claim(cfg, "lemma-3.2", v11.empty() && !v22.empty(),
          "small new component is not nested in the large old one");
    int v22n = static_cast<int>(v22.size());
    claim(cfg, "v22-ub", 2 * v22n <= n - 4, "overlap block too large");
    claim(cfg, "v22-lb", 4 * v22n >= n, "overlap block too small");
    auto v22_mask = mask_of(v22, n);
    auto c1p_mask = mask_of(c1p, n);

    EdgeSet cand_e1;
    for (const Edge& e : matching_between(m0, c1_mask, v22_mask))
        if (!(e == e0)) cand_e1.push_back(e);
    claim(cfg, "7-e1", cand_e1.size() >= 2, "not enough member edges into the overlap block");
    EdgeSet cand_e1p = edges_between(h, c1p, v22);
    claim(cfg, "7-e1p", cand_e1p.size() >= 2,
          "not enough residual edges between the new small component and the overlap block");

    Edge e1, e1p;
    bool found = false;
    for (const Edge& a : cand_e1) {
        for (const Edge& b : cand_e1p)
            if (!a.touches(b.u) && !a.touches(b.v)) {
                e1 = a;
                e1p = b;
                found = true;
                break;
            }
        if (found) break;
    }
    claim(cfg, "7-pair", found, "no vertex-disjoint pair of connector edges");

    int e1_c1 = endpoint_in(e1, c1_mask);
    int e1_v22 = e1.other(e1_c1);
    int e1p_c1p = endpoint_in(e1p, c1p_mask);
    int e1p_v22 = e1p.other(e1p_c1p);
    const Matching& m11 = w.cert[0][cert_index(c1, e1_c1)];
    const Matching& m11p = wp.cert[0][cert_index(c1p, e1p_c1p)];

    Matching m_second;
    std::string subcase;
    if (2 * v22n < n - 4) {
        subcase = "mpp-bicritical";
        auto [v22g, vmap] = induced_subgraph(h, v22);
        (void)vmap;
        claim(cfg, "8a-plummer",
              components(v22g).size() == 1 && 2 * v22g.min_degree() > v22n,
              "overlap block misses the bi-criticality degree bound");
        claim(cfg, "8a-bicritical", is_bicritical(v22g), "overlap block is not bi-critical");
        VertexSet rest;
        for (int v : v22)
            if (v != e1_v22 && v != e1p_v22) rest.push_back(v);
        auto [rg, rmap] = induced_subgraph(h, rest);
        (void)rmap;
        auto m12 = perfect_matching(rg);
        require(m12.has_value(), ErrorKind::InternalContradiction,
                "bi-critical block lost its matching");
        EdgeSet m12h;
        for (const Edge& e : m12->edges) m12h.emplace_back(rest[e.u], rest[e.v]);
        m_second =
            combine(n, {&m11.edges, &m11p.edges, &m12h}, {e1, e1p});
    } else {
        int c1n = static_cast<int>(c1.size());
        claim(cfg, "8b-shape",
              n % 4 == 0 && c1n == n / 4 + 1 && static_cast<int>(c1p.size()) == n / 4 + 1,
              "tight overlap block without the tight component orders");
        auto [v22g, vmap] = induced_subgraph(h, v22);
        claim(cfg, "8b-dirac", 2 * v22g.min_degree() >= v22n,
              "overlap block misses the Hamiltonicity degree bound");
        VertexCycle h22 = lift_cycle(dirac_cycle(v22g), v22);
        (void)vmap;
        EdgeSet into_c1p = matching_between(m0, c1_mask, c1p_mask);
        if (!into_c1p.empty()) {
            subcase = "mpp-c1c1p";
            Edge e2 = into_c1p[0];
            int e2_c1 = endpoint_in(e2, c1_mask);
            int e2_c1p = e2.other(e2_c1);
            const Matching& m21 = w.cert[0][cert_index(c1, e2_c1)];
            const Matching& m21p = wp.cert[0][cert_index(c1p, e2_c1p)];
            Matching m22 = even_cycle_matchings(h22, n).first;
            m_second = combine(n, {&m21.edges, &m21p.edges, &m22.edges}, {e2});
        } else {
            subcase = "mpp-cycle-split";
            std::vector<int> pos(n, -1);
            for (int i = 0; i < h22.length(); ++i) pos[h22.order[i]] = i;
            int py = pos[e1p_v22];
            Edge e3;
            bool have_e3 = false;
            for (const Edge& e : matching_between(m0, c1_mask, v22_mask)) {
                int x = endpoint_in(e, v22_mask);
                int dist = ((pos[x] - py) % h22.length() + h22.length()) % h22.length();
                if (dist % 2 == 1) {
                    e3 = e;
                    have_e3 = true;
                    break;
                }
            }
            claim(cfg, "8c-split", have_e3,
                  "no member edge split the cycle into even arcs");
            int e3_c1 = endpoint_in(e3, c1_mask);
            int e3_v22 = e3.other(e3_c1);
            // alternating matchings of the two even arcs between the removed
            // vertices
            EdgeSet m32;
            int len = h22.length();
            int px = pos[e3_v22];
            for (int start : {px, py}) {
                int stop = start == px ? py : px;
                std::vector<int> arc;
                for (int i = (start + 1) % len; i != stop; i = (i + 1) % len)
                    arc.push_back(h22.order[i]);
                require(arc.size() % 2 == 0, ErrorKind::InternalContradiction,
                        "arc between split vertices is odd");
                for (std::size_t i = 0; i + 1 < arc.size(); i += 2)
                    m32.emplace_back(arc[i], arc[i + 1]);
            }
            const Matching& m31 = w.cert[0][cert_index(c1, e3_c1)];
            m_second = combine(n, {&m31.edges, &m11p.edges, &m32}, {e3, e1p});
        }
    }

    validate_matching_in(f_graph, m_second);
    require(m_second.perfect, ErrorKind::InternalContradiction, "second matching not perfect");
    {
        bool cond1 = false;
        for (const Edge& e : m0_cross)
            if (!m_second.contains(e)) cond1 = true;
        claim(cfg, "8-cond1", cond1, "second matching absorbed every member crossing edge");
        EdgeSet m0p_cross = matching_between(m0_prime, c1p_mask, mask_of(c2p, n));
        bool cond2 = false;
        for (const Edge& e : m0p_cross)
            if (!m_second.contains(e)) cond2 = true;
        claim(cfg, "8-cond2", cond2,
              "second matching absorbed every replacement crossing edge");
    }

    Graph h_second = f_graph.remove_edges(m_second.edges);
    if (auto my = perfect_matching(h_second)) {
        out.done = true;
        out.result.case_used = CaseTag::SEq0;
        out.result.subcase = subcase;
        out.result.replaced = m0_index;
        out.result.witness_s = 0;
        out.result.witness_q = 2;
        out.result.first = m_second;
        out.result.second = *my;
        check_pair(h, m0, out.result.first, out.result.second);
        return out;
    }
    BergeWitness ws = berge_witness(h_second);
    if (ws.s() >= 1) {
        out.swapped = true;
        out.replacement = m_second;
        return out;
    }
    VertexSet c1pp = ws.comps[0];
    bool nested = true;
    for (int v : c1pp)
        if (!std::binary_search(v22.begin(), v22.end(), v)) nested = false;
    claim(cfg, "9", nested, "second-stage small component escapes the overlap block");
    throw ClaimViolation("s0-final",
                         "reached the terminal configuration the bound rules out");
}

AugmentResult augment_s_eq0(const AugmentationContext& ctx, const AugmentConfig& cfg) {
    require(ctx.tag == CaseTag::SEq0, ErrorKind::PreconditionViolated, "case requires |S| = 0");
    return augment_on(ctx, cfg, 0);
}

} // namespace pmpack
