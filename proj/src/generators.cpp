#include "pmpack/generators.hpp"

#include <algorithm>
#include <set>

#include "pmpack/rng.hpp"

namespace pmpack {

namespace {

// parts A = 0..n/2-2, B = n/2-1..n-1
std::vector<Edge> complete_bipartite_unbalanced(int n) {
    int a = n / 2 - 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * (n - a));
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

} // namespace

Graph gen_sharp_g1(int n) {
    require(n >= 6 && n % 2 == 0, ErrorKind::BadOrder, "need even n >= 6");
    require((n / 2) % 2 == 1, ErrorKind::BadOrder, "need n/2 odd (n = 2 mod 4)");
    int a = n / 2 - 1;
    std::vector<Edge> edges = complete_bipartite_unbalanced(n);
    // perfect matching on B: consecutive pairs
    for (int v = a; v < n; v += 2) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph gen_sharp_g2(int n) {
    require(n >= 8 && n % 2 == 0, ErrorKind::BadOrder, "need even n >= 8");
    require((n / 2) % 2 == 0, ErrorKind::BadOrder, "need n/2 even (n = 0 mod 4)");
    int a = n / 2 - 1;
    std::vector<Edge> edges;
    // K_{A,B} minus the lexicographically first maximum matching (a_i, b_i)
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (v - a != u) edges.emplace_back(u, v);
    // cover the a matched B-vertices b_0..b_{a-1}: near-perfect matching,
    // the leftover vertex reattached to the highest-index covered one
    int b0 = a;
    for (int i = 0; i + 1 < a - 1; i += 2) edges.emplace_back(b0 + i, b0 + i + 1);
    edges.emplace_back(b0 + a - 2, b0 + a - 1);
    return Graph(n, edges);
}

Graph gen_counterexample(int n) {
    require(n >= 6 && n % 2 == 0, ErrorKind::BadOrder, "need even n >= 6");
    std::vector<Edge> edges;
    if ((n / 2) % 2 == 1) {
        for (int u = 0; u < n / 2; ++u)
            for (int v = u + 1; v < n / 2; ++v) edges.emplace_back(u, v);
        for (int u = n / 2; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
        int small = n / 2 - 1;
        for (int u = 0; u < small; ++u)
            for (int v = u + 1; v < small; ++v) edges.emplace_back(u, v);
        // larger clique minus the Hamiltonian cycle on its vertices
        int big = n / 2 + 1;
        for (int i = 0; i < big; ++i)
            for (int j = i + 1; j < big; ++j) {
                bool on_cycle = (j == i + 1) || (i == 0 && j == big - 1);
                if (!on_cycle) edges.emplace_back(small + i, small + j);
            }
    }
    return Graph(n, edges);
}

namespace {

std::set<std::pair<int, int>> circulant_edges(int n, int k) {
    std::set<std::pair<int, int>> edges;
    for (int j = 1; j <= k / 2; ++j)
        for (int i = 0; i < n; ++i) {
            int u = i, v = (i + j) % n;
            edges.insert(std::minmax(u, v));
        }
    if (k % 2 == 1)
        for (int i = 0; i < n / 2; ++i) edges.insert({i, i + n / 2});
    return edges;
}

void double_edge_swaps(std::set<std::pair<int, int>>& edges, long long rounds, Rng& rng) {
    if (edges.size() < 2) return;
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    for (long long t = 0; t < rounds; ++t) {
        std::size_t i = rng.below(list.size());
        std::size_t j = rng.below(list.size());
        if (i == j) continue;
        auto [a, b] = list[i];
        auto [c, d] = list[j];
        if (rng.coin()) std::swap(c, d);
        // propose (a,c), (b,d)
        if (a == c || b == d) continue;
        auto e1 = std::minmax(a, c);
        auto e2 = std::minmax(b, d);
        if (edges.count(e1) || edges.count(e2)) continue;
        edges.erase(list[i]);
        edges.erase(list[j]);
        edges.insert(e1);
        edges.insert(e2);
        list[i] = e1;
        list[j] = e2;
    }
}

} // namespace

Graph gen_random_semiregular(int n, int k, std::uint64_t seed) {
    require(n >= 2 && n % 2 == 0, ErrorKind::BadOrder, "need even n >= 2");
    require(k >= 1 && k <= n - 1, ErrorKind::InfeasibleDegree,
            "base degree must lie in [1, n-1]");
    Rng rng(mix_seed(seed, 0x5e) ^ (static_cast<std::uint64_t>(n) << 20) ^
            static_cast<std::uint64_t>(k));

    std::set<std::pair<int, int>> edges = circulant_edges(n, k);
    long long t = 20LL * static_cast<long long>(edges.size());
    double_edge_swaps(edges, t, rng);

    // lift a random even-size subset of degrees to k+1 with a matching on
    // non-adjacent pairs (skipped when the complement is too tight)
    if (k <= n - 2) {
        int max_pairs = n / 2 - 1; // keep at least one vertex at the base degree
        int want_pairs = rng.below_int(max_pairs + 1);
        if (want_pairs > 0) {
            std::vector<int> verts = rng.permutation(n);
            std::vector<char> used(n, 0);
            int placed = 0;
            for (int round = 0; round < 4 * n && placed < want_pairs; ++round) {
                int u = verts[rng.below_int(n)];
                int v = verts[rng.below_int(n)];
                if (u == v || used[u] || used[v]) continue;
                auto e = std::minmax(u, v);
                if (edges.count(e)) continue;
                edges.insert(e);
                used[u] = used[v] = 1;
                ++placed;
            }
        }
        double_edge_swaps(edges, t, rng);
    }

    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges) list.emplace_back(u, v);
    Graph g(n, list);
    require(is_semiregular(g, k), ErrorKind::InternalContradiction,
            "generator produced a graph outside the degree window");
    return g;
}

Graph gen_complete(int n) {
    require(n >= 1, ErrorKind::BadOrder, "need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    require(n >= 3, ErrorKind::BadOrder, "need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph gen_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(i, i + 5);              // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, edges);
}

Graph gen_named(const GeneratorSpec& spec) {
    switch (spec.family) {
        case GraphFamily::SharpG1: return gen_sharp_g1(spec.n);
        case GraphFamily::SharpG2: return gen_sharp_g2(spec.n);
        case GraphFamily::Counterexample: return gen_counterexample(spec.n);
        case GraphFamily::RandomSemiregular:
            return gen_random_semiregular(spec.n, spec.k, spec.seed);
        case GraphFamily::Complete: return gen_complete(spec.n);
        case GraphFamily::Cycle: return gen_cycle(spec.n);
        case GraphFamily::Petersen:
            require(spec.n == 0 || spec.n == 10, ErrorKind::BadOrder,
                    "the Petersen graph has 10 vertices");
            return gen_petersen();
    }
    fail(ErrorKind::PreconditionViolated, "unknown generator family");
}

std::optional<GraphFamily> family_from_string(std::string_view name) {
    if (name == "sharp-g1") return GraphFamily::SharpG1;
    if (name == "sharp-g2") return GraphFamily::SharpG2;
    if (name == "counterexample") return GraphFamily::Counterexample;
    if (name == "random-semiregular") return GraphFamily::RandomSemiregular;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "petersen") return GraphFamily::Petersen;
    return std::nullopt;
}

const char* family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::SharpG1: return "sharp-g1";
        case GraphFamily::SharpG2: return "sharp-g2";
        case GraphFamily::Counterexample: return "counterexample";
        case GraphFamily::RandomSemiregular: return "random-semiregular";
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Cycle: return "cycle";
        case GraphFamily::Petersen: return "petersen";
    }
    return "?";
}

} // namespace pmpack
