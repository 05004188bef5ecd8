#include "bperf/proof_structure.hpp"
#include "bperf/enumerate.hpp"
#include "bperf/gen.hpp"
#include "bperf/graph6.hpp"

#include <doctest.h>

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

// 2K2 plus one vertex adjacent to all four
Graph two_k2_apex() {
    return Graph::from_edge_list(5, {{0, 1}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

} // namespace

TEST_CASE("find_2K2") {
    auto p5 = find_2K2(path(5));
    REQUIRE(p5.has_value());
    CHECK(*p5 == std::array<int, 4>{0, 1, 3, 4});
    CHECK_FALSE(find_2K2(clique(4)).has_value());
    CHECK_FALSE(find_2K2(cycle(4)).has_value());
    CHECK(find_2K2(Graph::from_edge_list(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("grow_maximal_S") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    Decomposition d = grow_maximal_S(g, {0, 1, 2, 3});
    CHECK(d.s == VertexSet::full(4));
    CHECK(d.r.empty());
    CHECK(d.big_components.size() == 2);

    Graph apex = two_k2_apex();
    Decomposition d2 = grow_maximal_S(apex, {0, 1, 2, 3});
    CHECK(d2.s == VertexSet::of(5, {0, 1, 2, 3}));
    CHECK(d2.r == VertexSet::of(5, {4}));

    Graph p5 = path(5);
    Decomposition d3 = grow_maximal_S(p5, {0, 1, 3, 4});
    CHECK(d3.s == VertexSet::of(5, {0, 1, 3, 4}));
    CHECK(d3.r == VertexSet::of(5, {2}));

    CHECK_THROWS_AS(grow_maximal_S(p5, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("grow_maximal_S output is maximal") {
    std::mt19937_64 rng(17);
    int tested = 0;
    while (tested < 40) {
        Graph g = random_chordal(6 + static_cast<int>(rng() % 5), rng);
        auto seed = find_2K2(g);
        if (!seed) continue;
        ++tested;
        Decomposition d = grow_maximal_S(g, *seed);
        REQUIRE(detail::big_component_count(g, d.s) >= 2);
        d.r.for_each([&](int v) {
            VertexSet bigger = d.s;
            bigger.set(v);
            REQUIRE(detail::big_component_count(g, bigger) < 2);
        });
    }
}

TEST_CASE("check_claims on the anchor examples") {
    Graph apex = two_k2_apex();
    Decomposition d = grow_maximal_S(apex, {0, 1, 2, 3});
    ClaimsReport rep = check_claims(apex, d);
    CHECK(rep.host_chordal);
    CHECK(rep.host_f_free);
    CHECK(rep.claim3.pass);
    CHECK(rep.claim4.pass);
    CHECK(rep.claim5.pass);
    REQUIRE(d.z_index.has_value());
    CHECK(rep.claim6.checked);
    CHECK(rep.claim6.pass);  // apex has neighbours everywhere in Z: vacuous
    CHECK(rep.all_pass());

    // P5 = F1: claim 5 fails, consistent with its proof deriving a P5
    Graph p5 = path(5);
    Decomposition d2 = grow_maximal_S(p5, {0, 1, 3, 4});
    ClaimsReport rep2 = check_claims(p5, d2);
    CHECK(rep2.host_chordal);
    CHECK_FALSE(rep2.host_f_free);
    CHECK(rep2.claim3.pass);
    CHECK(rep2.claim4.pass);
    CHECK_FALSE(rep2.claim5.pass);

    Decomposition stale = d2;
    CHECK_THROWS_AS(check_claims(cycle(4), stale), std::invalid_argument);
}

TEST_CASE("claims hold on every chordal F-free graph with a 2K2, n <= 7") {
    int hosts = 0;
    enumerate_graphs_filtered(
        7,
        [](const Graph& g) {
            return is_chordal(g).chordal() && !scan_family(g, chordal_f_names()).has_value();
        },
        [&](const Graph& g) {
            auto seed = find_2K2(g);
            if (!seed) return;
            ++hosts;
            Decomposition d = grow_maximal_S(g, *seed);
            ClaimsReport rep = check_claims(g, d);
            INFO("host ", emit_graph6(g));
            REQUIRE(rep.claim3.pass);
            REQUIRE(rep.claim4.pass);
            REQUIRE(rep.claim5.pass);
            REQUIRE(rep.claim6.checked);
            REQUIRE(rep.claim6.pass);
        });
    CHECK(hosts > 0);
}

TEST_CASE("claim failures on chordal hosts coincide with F members (n <= 7)") {
    enumerate_graphs_filtered(
        7, [](const Graph& g) { return is_chordal(g).chordal(); },
        [&](const Graph& g) {
            auto seed = find_2K2(g);
            if (!seed) return;
            Decomposition d = grow_maximal_S(g, *seed);
            ClaimsReport rep = check_claims(g, d);
            if (!rep.all_pass()) {
                // the failure witness extends to a forbidden pattern
                REQUIRE(scan_family(g, chordal_f_names()).has_value());
            }
        });
}

TEST_CASE("claims hold for every maximal S, not just the greedy one (n <= 6)") {
    enumerate_graphs_filtered(
        6,
        [](const Graph& g) {
            return is_chordal(g).chordal() && !scan_family(g, chordal_f_names()).has_value();
        },
        [&](const Graph& g) {
            if (!find_2K2(g)) return;
            auto all_s = all_maximal_S(g);
            REQUIRE_FALSE(all_s.empty());
            for (const auto& s : all_s) {
                Decomposition d = decomposition_from_s(g, s);
                ClaimsReport rep = check_claims(g, d);
                INFO("host ", emit_graph6(g), " S=", s.to_string());
                REQUIRE(rep.claim3.pass);
                REQUIRE(rep.claim4.pass);
                REQUIRE(rep.claim5.pass);
                REQUIRE(rep.claim6.checked);
                REQUIRE(rep.claim6.pass);
            }
        });
}

TEST_CASE("random chordal F-free hosts with 2K2 pass the claims") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_chordal_ffree_with_2k2(rng);
        auto seed = find_2K2(g);
        REQUIRE(seed.has_value());
        Decomposition d = grow_maximal_S(g, *seed);
        ClaimsOptions opt;
        opt.seed = trial;
        ClaimsReport rep = check_claims(g, d, opt);
        INFO("host ", emit_graph6(g));
        REQUIRE(rep.host_chordal);
        REQUIRE(rep.host_f_free);
        REQUIRE(rep.all_pass());
    }
}
