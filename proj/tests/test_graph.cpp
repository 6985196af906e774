#include <doctest.h>

#include <sstream>

#include "pmpack/io.hpp"
#include "test_support.hpp"

using namespace pmpack;
using pmtest::random_graph;
using pmtest::range_set;

TEST_CASE("build_graph basic shapes") {
    Graph two(4, {{0, 1}, {2, 3}});
    CHECK(two.order() == 4);
    CHECK(two.edge_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(two.degree(v) == 1);

    Graph k2(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(1, 0));
}

TEST_CASE("build_graph rejections") {
    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 1}, {0, 1}}), doctest::Contains("DuplicateEdge"),
                         Error);
    CHECK_THROWS_WITH_AS(build_graph(3, {{1, 1}}), doctest::Contains("LoopEdge"), Error);
    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 3}}), doctest::Contains("IndexOutOfRange"), Error);
    // reversed input is the same canonical edge
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("degree threshold") {
    CHECK(d_threshold(34) == 17);
    CHECK(d_threshold(36) == 17);
    CHECK(d_threshold(4) == 1);
    CHECK_THROWS_AS(d_threshold(7), Error);

    for (int n = 2; n <= 200; n += 2) {
        int d = d_threshold(n);
        CHECK(d % 2 == 1);
        CHECK(2 * d >= n - 2); // d >= n/2 - 1
    }
}

TEST_CASE("is_semiregular") {
    CHECK(is_semiregular(gen_complete(4), 3));
    Graph path3(3, {{0, 1}, {1, 2}});
    CHECK(is_semiregular(path3, 1));
    CHECK_FALSE(is_semiregular(gen_complete(4), 2));
}

TEST_CASE("edge_boundary and edges_between") {
    Graph k4 = gen_complete(4);
    CHECK(edge_boundary(k4, {0}).size() == 3);

    Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(edge_boundary(two_tri, {0, 1, 2}).empty());

    Graph c4 = gen_cycle(4);
    EdgeSet b = edge_boundary(c4, {0, 1});
    CHECK(b == EdgeSet{{0, 3}, {1, 2}});

    CHECK(edges_between(k4, {0, 1}, {2, 3}).size() == 4);
    CHECK(edges_between(c4, {0}, {2}).empty());
    CHECK(edges_between(k4, {0}, {0}).empty());
}

TEST_CASE("edge_boundary equals edges_between with the complement") {
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(10, 40, 100 + trial);
        Rng rng(trial);
        VertexSet x;
        for (int v = 0; v < 10; ++v)
            if (rng.coin()) x.push_back(v);
        VertexSet rest;
        for (int v = 0; v < 10; ++v)
            if (!std::binary_search(x.begin(), x.end(), v)) rest.push_back(v);
        CHECK(edge_boundary(g, x) == edges_between(g, x, rest));
    }
}

TEST_CASE("components") {
    Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = components(two_tri);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4, 5});

    CHECK(components(gen_complete(4)).size() == 1);
    CHECK(components(Graph(3, {})).size() == 3);

    // boundaries of components are empty
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(12, 15, 500 + trial);
        for (const VertexSet& comp : components(g)) CHECK(edge_boundary(g, comp).empty());
    }
}

TEST_CASE("induced_subgraph") {
    Graph k4 = gen_complete(4);
    auto [k3, map] = induced_subgraph(k4, {0, 1, 2});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(map[3] == -1);
    CHECK(map[2] == 2);

    Graph c6 = gen_cycle(6);
    auto [alt, map2] = induced_subgraph(c6, {0, 2, 4});
    CHECK(alt.edge_count() == 0);
    (void)map2;

    auto [empty, map3] = induced_subgraph(k4, {});
    CHECK(empty.order() == 0);
    (void)map3;
}

TEST_CASE("graph text format round trip") {
    Graph g1 = gen_sharp_g1(34);
    std::string text = graph_to_string(g1);
    CHECK(text.substr(0, 7) == "34 297\n");
    std::istringstream in(text);
    Graph back = read_graph(in);
    CHECK(back.edges() == g1.edges());
    CHECK(graph_to_string(back) == text);
}

TEST_CASE("graph format comments and errors") {
    std::istringstream ok("# a comment\n2 1\n# another\n0 1\n");
    Graph g = read_graph(ok);
    CHECK(g.edge_count() == 1);

    std::istringstream missing("4 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(missing), Error);
    std::istringstream garbage("x y\n");
    CHECK_THROWS_AS(read_graph(garbage), Error);
}

TEST_CASE("vertex set validation") {
    Graph k4 = gen_complete(4);
    CHECK_THROWS_AS(edge_boundary(k4, {0, 5}), Error);
    CHECK_THROWS_AS(edge_boundary(k4, {1, 0}), Error);
    CHECK(range_set(0, 4) == VertexSet{0, 1, 2, 3});
}
