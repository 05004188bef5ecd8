#include "bperf/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace bperf;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

} // namespace

TEST_CASE("from_edge_list basics") {
    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.adjacent(1, 0));

    Graph p5 = path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(2) == 2);

    Graph empty4 = Graph::from_edge_list(4, {});
    CHECK(empty4.edge_count() == 0);

    // duplicates collapse
    Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edge_list rejects bad input with the offending pair named") {
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 3}}),
                         doctest::Contains("(0,3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{1, 1}}),
                         doctest::Contains("(1,1)"), std::invalid_argument);
}

TEST_CASE("induced subgraphs") {
    Graph p5 = path(5);
    auto sub = induced_subgraph(p5, VertexSet::of(5, {0, 1, 2}));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);  // P3

    Graph k4 = clique(4);
    auto tri = induced_subgraph(k4, VertexSet::of(4, {0, 2, 3}));
    CHECK(tri.graph.edge_count() == 3);  // K3

    Graph c5 = cycle(5);
    auto p4 = induced_subgraph(c5, VertexSet::of(5, {0, 1, 2, 3}));
    CHECK(p4.graph.edge_count() == 3);
    CHECK(p4.graph.degree(0) == 1);
    CHECK_FALSE(p4.graph.adjacent(0, 3));

    CHECK_THROWS_AS(induced_subgraph(p5, VertexSet::of(4, {0})), std::invalid_argument);
}

TEST_CASE("induced subgraph edge count never grows") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.set(v);
        CHECK(induced_subgraph(g, s).graph.edge_count() <= g.edge_count());
    }
}

TEST_CASE("components and big flags") {
    Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    auto part = components(two_k2);
    CHECK(part.components.size() == 2);
    CHECK(part.big_count() == 2);

    Graph p3_iso = Graph::from_edge_list(4, {{0, 1}, {1, 2}});
    auto part2 = components(p3_iso);
    CHECK(part2.components.size() == 2);
    CHECK(part2.big_count() == 1);

    auto part3 = components(path(5));
    CHECK(part3.components.size() == 1);
    CHECK(part3.big_flags[0]);
}

TEST_CASE("components induce connected sets with disconnected pairwise unions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        auto part = components(g);
        VertexSet all(n);
        for (std::size_t i = 0; i < part.components.size(); ++i) {
            CHECK(components_within(g, part.components[i]).size() == 1);
            CHECK_FALSE(all.intersects(part.components[i]));
            all |= part.components[i];
            CHECK(part.big_flags[i] == (part.components[i].count() >= 2));
            for (std::size_t j = i + 1; j < part.components.size(); ++j) {
                VertexSet both = part.components[i] | part.components[j];
                CHECK(components_within(g, both).size() == 2);
            }
        }
        CHECK(all == VertexSet::full(n));
    }
}

TEST_CASE("twins") {
    // F2 = P4 + P3: the P3 endpoints are non-adjacent twins
    Graph f2 = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    CHECK(are_twins(f2, 4, 6));
    CHECK(are_twins(f2, 6, 4));  // symmetric
    CHECK_FALSE(f2.adjacent(4, 6));

    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(are_twins(k2, 0, 1));  // adjacent twins

    Graph p4 = path(4);
    CHECK_FALSE(are_twins(p4, 0, 3));
    CHECK_THROWS_AS(are_twins(p4, 1, 1), std::invalid_argument);
}

TEST_CASE("simplicial vertices") {
    CHECK(is_simplicial(path(5), 0));
    CHECK_FALSE(is_simplicial(path(5), 1));
    CHECK_FALSE(is_simplicial(cycle(4), 0));
    CHECK(is_simplicial(clique(4), 2));
}

TEST_CASE("edge list text round trip") {
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}});
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);

    std::istringstream commented("# a graph\n3 1 # header\n0 2\n");
    Graph h = read_edge_list(commented);
    CHECK(h.vertex_count() == 3);
    CHECK(h.adjacent(0, 2));

    std::istringstream bad("3\n");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
    std::istringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(missing), std::invalid_argument);
}
