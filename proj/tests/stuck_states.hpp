#pragma once

#include <algorithm>
#include <set>

#include "pmpack/decompose.hpp"
#include "test_support.hpp"

// Hand-built stuck states: a semi-regular host plus a family whose removal
// leaves a matchless residual with a prescribed witness shape. Each residual
// H is assembled explicitly; the family is the one forced member M_0 plus
// enough peeled perfect matchings of complement(H) - M_0 to reach the
// required size (host degrees are residual degrees plus family size).
namespace pmstuck {

using namespace pmpack;

struct StuckState {
    Graph host;
    MatchingFamily family;
};

inline void add_clique(std::vector<Edge>& es, int lo, int hi) {
    for (int u = lo; u <= hi; ++u)
        for (int v = u + 1; v <= hi; ++v) es.emplace_back(u, v);
}

inline void add_circulant(std::vector<Edge>& es, int base, int count, int max_offset) {
    std::set<std::pair<int, int>> seen;
    for (int j = 1; j <= max_offset; ++j)
        for (int i = 0; i < count; ++i) {
            int a = base + i, b = base + (i + j) % count;
            auto p = std::minmax(a, b);
            if (seen.insert(p).second) es.emplace_back(p.first, p.second);
        }
}

inline void add_complete_bipartite(std::vector<Edge>& es, int a_lo, int a_hi, int b_lo,
                                   int b_hi) {
    for (int u = a_lo; u <= a_hi; ++u)
        for (int v = b_lo; v <= b_hi; ++v) es.emplace_back(u, v);
}

/// Extends {m0} to `total` pairwise disjoint perfect matchings avoiding the
/// residual's edges, by peeling complement(residual) - m0.
inline StuckState finish(const Graph& residual, const Matching& m0, int total,
                         std::uint64_t seed = 0) {
    Graph pool = complement(residual).remove_edges(m0.edges);
    MatchingFamily fam(residual.order());
    fam.matchings.push_back(m0);
    if (total > 1) {
        DecomposeOptions opts;
        opts.target = total - 1;
        opts.strategy = Strategy::Peel;
        opts.seed = seed;
        opts.restart_budget = 30;
        DecompositionResult extra = decompose(pool, opts);
        if (extra.achieved < total - 1)
            fail(ErrorKind::InternalContradiction, "stuck-state builder could not fill family");
        for (const Matching& m : extra.family.matchings) fam.matchings.push_back(m);
    }
    StuckState st;
    st.host = residual.add_edges(fam.all_edges());
    st.family = fam;
    return st;
}

/// Two 17-cliques joined only by the family's crossing matching (l = 1,
/// witness S empty, both components cliques).
inline StuckState make_s0_cliques() {
    std::vector<Edge> es;
    add_clique(es, 0, 16);
    add_clique(es, 17, 33);
    Graph residual(34, es);
    EdgeSet cross;
    for (int i = 0; i < 17; ++i) cross.emplace_back(i, 17 + i);
    return finish(residual, Matching(cross, 34), 1);
}

// Witness-set case instances: S and the singleton components U span a
// bipartite block, the large component is a dense circulant. n = 34, l = 8,
// residual degrees {9, 10}.

/// |S| = 9, member sends two edges from U into the large component.
inline StuckState make_sge2_two_across(std::uint64_t seed = 0) {
    std::vector<Edge> es;
    add_complete_bipartite(es, 0, 8, 9, 18);   // S x U
    add_circulant(es, 19, 15, 5);              // 10-regular large component
    Graph residual(34, es);
    EdgeSet m0{{9, 10}, {11, 12}, {13, 14}, {15, 16},          // inside U
               {17, 19}, {18, 20},                             // U into the component
               {0, 1},  {2, 3},  {4, 5},  {6, 7},              // inside S
               {8, 21},                                        // S into the component
               {22, 28}, {23, 29}, {24, 30}, {25, 31}, {26, 32}, {27, 33}};
    return finish(residual, Matching(m0, 34), 8, seed);
}

/// |S| = 9, member avoids U-to-component edges entirely.
inline StuckState make_sge2_none_across(std::uint64_t seed = 0) {
    std::vector<Edge> es;
    add_complete_bipartite(es, 0, 8, 9, 18);
    add_circulant(es, 19, 15, 5);
    Graph residual(34, es);
    EdgeSet m0{{9, 10}, {11, 12}, {13, 14}, {15, 16}, {17, 18},
               {0, 19}, {1, 20},  {2, 21},
               {3, 4},  {5, 6},   {7, 8},
               {22, 28}, {23, 29}, {24, 30}, {25, 31}, {26, 32}, {27, 33}};
    return finish(residual, Matching(m0, 34), 8, seed);
}

/// |S| = 10, member sends exactly one edge from U into the large component.
inline StuckState make_sge2_one_across(std::uint64_t seed = 0) {
    std::vector<Edge> es;
    add_complete_bipartite(es, 0, 9, 10, 20);
    std::vector<Edge> drop;
    for (int i = 0; i <= 9; ++i) drop.emplace_back(i, 10 + i);
    add_circulant(es, 21, 13, 5);
    Graph residual = Graph(34, es).remove_edges(drop);
    EdgeSet m0{{20, 21},
               {0, 27}, {1, 32},
               {2, 3},  {4, 5},  {6, 7},  {8, 9},
               {10, 11}, {12, 13}, {14, 15}, {16, 17}, {18, 19},
               {22, 28}, {23, 29}, {24, 30}, {25, 31}, {26, 33}};
    return finish(residual, Matching(m0, 34), 8, seed);
}

/// |S| = 1: three 11-vertex components hanging off one hub vertex; the first
/// member carries two edges between the first two components.
inline StuckState make_s1(std::uint64_t seed = 0) {
    std::vector<Edge> es;
    for (int v : {1, 2, 3, 12, 13, 14, 23, 24, 25, 26}) es.emplace_back(0, v);
    add_circulant(es, 1, 11, 4);
    add_circulant(es, 12, 11, 4);
    add_circulant(es, 23, 11, 4);
    // lift every vertex not adjacent to the hub to internal degree 9
    EdgeSet bumps{{4, 9},   {5, 10},  {6, 11},  {1, 7},   {2, 8},
                  {15, 20}, {16, 21}, {17, 22}, {12, 18}, {13, 19},
                  {27, 32}, {28, 33}, {23, 29}, {24, 30}, {25, 31}};
    es.insert(es.end(), bumps.begin(), bumps.end());
    Graph residual(34, es);

    // first member: two component-crossing edges, completed on the rest
    Graph pool = complement(residual);
    VertexSet rest;
    for (int v = 0; v < 34; ++v)
        if (v != 1 && v != 2 && v != 12 && v != 13) rest.push_back(v);
    auto [sub, map] = induced_subgraph(pool, rest);
    (void)map;
    auto pm = perfect_matching(sub);
    if (!pm) fail(ErrorKind::InternalContradiction, "s=1 builder completion failed");
    EdgeSet m0{{1, 12}, {2, 13}};
    for (const Edge& e : pm->edges) m0.emplace_back(rest[e.u], rest[e.v]);
    return finish(residual, Matching(m0, 34), 8, seed);
}

/// |S| = 0 with a large component split into two dense blocks joined by a
/// two-edge cut; drives the second-stage construction when the first
/// replacement matching is chosen to contain the cut.
inline StuckState make_s0_deep(std::uint64_t seed = 0) {
    std::vector<Edge> es;
    add_clique(es, 0, 10);   // C_1
    add_clique(es, 11, 21);  // block that becomes the new small component
    add_clique(es, 22, 33);  // overlap block
    es.emplace_back(12, 24); // the cut
    es.emplace_back(13, 25);
    Graph residual =
        Graph(34, es).remove_edges({{3, 4},   {5, 6},   {7, 8},   {9, 10},
                                    {12, 13}, {14, 15}, {16, 17}, {18, 19}, {20, 21},
                                    {24, 25}, {26, 27}, {28, 29}, {30, 31}, {32, 33},
                                    {22, 23}, {22, 24}, {23, 25}});
    EdgeSet m0{{0, 11}, {1, 22}, {2, 23},
               {3, 4},  {5, 6},  {7, 8},  {9, 10},
               {12, 13}, {14, 15}, {16, 17}, {18, 19}, {20, 21},
               {24, 25}, {26, 27}, {28, 29}, {30, 31}, {32, 33}};
    return finish(residual, Matching(m0, 34), 8, seed);
}

/// Replacement matching for make_s0_deep that routes the cut edges into the
/// second component's certificate, separating the blocks.
inline Matching deep_m0_prime() {
    EdgeSet es{{0, 11},
               {1, 2},   {3, 5},   {4, 6},   {7, 9},   {8, 10},
               {12, 24}, {13, 25},
               {14, 16}, {15, 17}, {18, 20}, {19, 21},
               {22, 26}, {23, 27}, {28, 30}, {29, 32}, {31, 33}};
    return Matching(es, 34);
}

} // namespace pmstuck
