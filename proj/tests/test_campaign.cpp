#include "bperf/campaign.hpp"

#include <doctest.h>

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

TEST_CASE("corpus ingestion auto-detects formats") {
    std::istringstream g6("D??\nD~{\n");
    auto graphs = read_graphs(g6);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].vertex_count() == 5);
    CHECK(graphs[1].edge_count() == 10);

    std::istringstream edges("# comment\n3 2\n0 1\n1 2\n");
    auto from_edges = read_graphs(edges);
    REQUIRE(from_edges.size() == 1);
    CHECK(from_edges[0] == path(3));

    std::istringstream with_header(">>graph6<<D??\n");
    CHECK(read_graphs(with_header).size() == 1);
}

TEST_CASE("theorem 1 campaign on anchor corpora") {
    // P5 contains F1 with b = 3 > 2 = chi: consistent, no violation
    auto rep = verify_theorem1({path(5)});
    CHECK(rep.summary.violations.empty());
    CHECK(rep.records[0].f_found == "F1");
    CHECK(rep.records[0].b == 3);
    CHECK(rep.records[0].chi == 2);

    // K4: F-free chordal, b = chi = 4
    auto rep2 = verify_theorem1({clique(4)});
    CHECK(rep2.summary.violations.empty());
    CHECK(rep2.records[0].f_found.empty());
    CHECK(rep2.records[0].b == 4);

    // C4 is skipped (not chordal)
    auto rep3 = verify_theorem1({cycle(4)});
    CHECK(rep3.records[0].skipped);
    CHECK(rep3.summary.skipped == 1);
}

TEST_CASE("theorem 1 holds on all graphs n <= 6") {
    auto corpus = enumerate_all(6);
    CampaignOptions opt;
    auto rep = verify_theorem1(corpus, opt);
    CHECK(rep.summary.violations.empty());
    CHECK(rep.summary.complete);
    CHECK(rep.summary.total == 1 + 2 + 4 + 11 + 34 + 156);

    // restricted and full scans flag the same graphs
    opt.full_scan = true;
    auto full = verify_theorem1(corpus, opt);
    CHECK(full.summary.violations == rep.summary.violations);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        CHECK(rep.records[i].f_found.empty() == full.records[i].f_found.empty());
}

TEST_CASE("theorem 2 campaign on anchor corpora") {
    // C5: F-free, C4-free, b = chi = 3, reduction verified
    auto rep = verify_theorem2({cycle(5)});
    CHECK(rep.summary.violations.empty());
    CHECK(rep.records[0].b == 3);
    CHECK(rep.records[0].chi == 3);
    CHECK(rep.records[0].reduction_ran);
    CHECK(rep.records[0].reduction_ok);

    // F16 contains itself: b = 4 > chi = 3, consistent
    auto rep2 = verify_theorem2({pattern_by_name("F16").graph});
    CHECK(rep2.summary.violations.empty());
    CHECK(rep2.records[0].f_found == "F16");
    CHECK(rep2.records[0].b == 4);
    CHECK(rep2.records[0].chi == 3);

    // C4 hosts are outside the class
    auto rep3 = verify_theorem2({cycle(4)});
    CHECK(rep3.records[0].skipped);
}

TEST_CASE("theorem 2 holds on all graphs n <= 6") {
    auto rep = verify_theorem2(enumerate_all(6));
    CHECK(rep.summary.violations.empty());
    CHECK(rep.summary.complete);
}

TEST_CASE("reports are deterministic across job counts") {
    auto corpus = enumerate_all(5);
    CampaignOptions one;
    one.jobs = 1;
    CampaignOptions four;
    four.jobs = 4;
    auto a = verify_theorem1(corpus, one);
    auto b = verify_theorem1(corpus, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].g6 == b.records[i].g6);
        CHECK(a.records[i].chi == b.records[i].chi);
        CHECK(a.records[i].b == b.records[i].b);
        CHECK(a.records[i].f_found == b.records[i].f_found);
        CHECK(a.records[i].violation == b.records[i].violation);
    }
}

TEST_CASE("campaign witnesses re-validate on load") {
    auto corpus = enumerate_all(5);
    auto rep = verify_theorem1(corpus);
    for (const auto& rec : rep.records) {
        if (rec.skipped) continue;
        Graph g = parse_graph6(rec.g6);
        if (rec.b_witness.k > 0) {
            BAnalysis a = validate_coloring(g, rec.b_witness);
            REQUIRE(a.proper());
            REQUIRE(a.is_b_coloring);
            REQUIRE(rec.b_witness.k == rec.b);
        }
        if (!rec.f_found.empty()) {
            Embedding emb{rec.f_found, rec.f_embedding};
            REQUIRE(embedding_valid(g, pattern_by_name(rec.f_found), emb));
        }
    }
}

TEST_CASE("records serialize to JSON with the contracted fields") {
    auto rep = verify_theorem1({path(5)});
    json j = record_to_json(rep.records[0]);
    CHECK(j["index"] == 0);
    CHECK(j["graph6"] == "DhC");  // P5 hand-encoded per the format
    CHECK(j["n"] == 5);
    CHECK(j["chordal"] == true);
    CHECK(j["chi"] == 2);
    CHECK(j["b"] == 3);
    CHECK(j["f_member"] == "F1");
    json s = summary_to_json(rep.summary);
    CHECK(s["holds"] == true);
}
