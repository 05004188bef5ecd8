// Acceptance suite: exact, property-based checks over exhaustive small-graph
// corpora and seeded random hosts. One line per criterion; exit 0 iff all
// pass. Everything is integer-exact; there are no tolerances to tune.

#include "bperf/campaign.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace bperf;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. chi(Fi), b(Fi) match the expected table for all 22 members.
bool criterion_catalog_table(std::string& detail) {
    CatalogReport rep;
    catalog_check_chi_b(rep);
    int checked = 0;
    for (const auto& c : rep.checks) {
        ++checked;
        if (!c.ok) {
            detail = c.pattern + ": " + c.detail;
            return false;
        }
    }
    detail = std::to_string(checked) + " patterns match (2,3)/(3,4)";
    return true;
}

// 2. Every proper induced subgraph of every Fi has b = chi.
bool criterion_minimality(std::string& detail) {
    CatalogReport rep;
    catalog_check_minimality(rep);
    for (const auto& c : rep.checks)
        if (!c.ok) {
            detail = c.pattern + ": " + c.detail;
            return false;
        }
    detail = "all proper induced subgraphs of all 22 patterns have b = chi";
    return true;
}

// 3. F1..F3 admit a 3-color b-coloring putting colors 1,2,3 on the three
// eligible vertices.
bool criterion_degree_witness(std::string& detail) {
    CatalogReport rep;
    catalog_check_degree_witness(rep);
    for (const auto& c : rep.checks)
        if (!c.ok) {
            detail = c.pattern + ": " + c.detail;
            return false;
        }
    detail = "constructive witnesses found for F1, F2, F3";
    return true;
}

// 4. Theorem 1 over all isomorphism classes n <= 8.
bool criterion_theorem1(std::string& detail) {
    auto corpus = enumerate_all(8);
    auto rep = verify_theorem1(corpus);
    if (!rep.summary.complete) {
        detail = "campaign incomplete (timeouts)";
        return false;
    }
    if (!rep.summary.violations.empty()) {
        detail = "violation at corpus index " + std::to_string(rep.summary.violations.front()) +
                 ": " + rep.records[static_cast<std::size_t>(rep.summary.violations.front())]
                             .violation_reason;
        return false;
    }
    detail = std::to_string(rep.summary.analyzed) + " chordal graphs, 0 violations";
    return true;
}

// 5. Theorem 2 over all C4-free classes n <= 8, full 22-pattern scan.
bool criterion_theorem2(std::string& detail) {
    auto corpus = enumerate_all(8);
    auto rep = verify_theorem2(corpus);
    if (!rep.summary.complete) {
        detail = "campaign incomplete (timeouts)";
        return false;
    }
    if (!rep.summary.violations.empty()) {
        detail = "violation at corpus index " + std::to_string(rep.summary.violations.front());
        return false;
    }
    int reductions = 0;
    for (const auto& r : rep.records)
        if (r.reduction_ran) ++reductions;
    detail = std::to_string(rep.summary.analyzed) + " C4-free graphs, " +
             std::to_string(reductions) + " embedded reduction rounds, 0 violations";
    return true;
}

// 6. >= 1000 generated F-free C4-free hosts with a C5 (n <= 12): every
// reduce round passes all five verify_reduction checks.
bool criterion_reduction_suite(std::string& detail) {
    Rng rng(20240601);
    const int hosts = 1000;
    for (int i = 0; i < hosts; ++i) {
        Graph g = random_c5_host(rng);
        auto c5s = count_and_find_c5(g);
        if (c5s.empty()) {
            detail = "generator produced a host without a C5";
            return false;
        }
        C5Site site;
        ReductionResult res;
        try {
            site = extract_site(g, c5s.front());
            auto b = b_chromatic(g);
            if (b.status != SolveStatus::ok) {
                detail = "solver timeout on host " + emit_graph6(g);
                return false;
            }
            res = reduce(g, site, b.witness);
        } catch (const std::exception& e) {
            detail = std::string("reduction error on ") + emit_graph6(g) + ": " + e.what();
            return false;
        }
        ReductionReport rep = verify_reduction(g, site, res);
        if (!rep.all_pass) {
            for (const auto& c : rep.checks)
                if (!c.pass) detail = "host " + emit_graph6(g) + " failed " + c.name + ": " + c.detail;
            return false;
        }
    }
    detail = std::to_string(hosts) + " hosts, all lift/recolor/F-free/C5-count/simplicial checks pass";
    return true;
}

// 7. Claims 3,4,5 (and sampled 6) on grow_maximal_S output: exhaustive over
// chordal F-free graphs with a 2K2 for n <= 9, plus 10^4 random hosts n <= 14.
bool criterion_claims_suite(std::string& detail) {
    int exhaustive_hosts = 0;
    bool ok = true;
    std::string why;
    enumerate_graphs_filtered(
        9,
        [](const Graph& g) {
            return is_chordal(g).chordal() && !scan_family(g, chordal_f_names()).has_value();
        },
        [&](const Graph& g) {
            if (!ok) return;
            auto seed = find_2K2(g);
            if (!seed) return;
            ++exhaustive_hosts;
            Decomposition d = grow_maximal_S(g, *seed);
            ClaimsReport rep = check_claims(g, d);
            if (!rep.claim3.pass || !rep.claim4.pass || !rep.claim5.pass ||
                !(rep.claim6.checked && rep.claim6.pass)) {
                ok = false;
                why = "exhaustive host " + emit_graph6(g) + " failed a claim";
            }
        });
    if (!ok) {
        detail = why;
        return false;
    }
    Rng rng(987654321);
    const int random_hosts = 10000;
    for (int i = 0; i < random_hosts; ++i) {
        Graph g = random_chordal_ffree_with_2k2(rng);
        auto seed = find_2K2(g);
        if (!seed) {
            detail = "generator produced a host without a 2K2";
            return false;
        }
        Decomposition d = grow_maximal_S(g, *seed);
        ClaimsOptions opt;
        opt.seed = static_cast<std::uint64_t>(i);
        ClaimsReport rep = check_claims(g, d, opt);
        if (!rep.claim3.pass || !rep.claim4.pass || !rep.claim5.pass ||
            !(rep.claim6.checked && rep.claim6.pass)) {
            detail = "random host " + emit_graph6(g) + " failed a claim";
            return false;
        }
    }
    detail = std::to_string(exhaustive_hosts) + " exhaustive hosts (n <= 9) + " +
             std::to_string(random_hosts) + " random hosts (n <= 14), 0 failures";
    return true;
}

// 8. Oracle equivalences: chi = omega on chordal n <= 8; b_chromatic vs the
// all-colorings brute force on labeled n <= 6; is_chordal vs subset sweep
// on all n <= 7.
bool criterion_oracles(std::string& detail) {
    int chordal_checked = 0;
    bool ok = true;
    std::string why;
    enumerate_graphs(8, [&](const Graph& g) {
        if (!ok || g.vertex_count() == 0) return;
        auto cert = is_chordal(g);
        if (!cert.chordal()) return;
        ++chordal_checked;
        if (chi_exact(g).chi != omega_chordal(g).omega) {
            ok = false;
            why = "chi != omega on " + emit_graph6(g);
        }
    });
    if (!ok) {
        detail = why;
        return false;
    }
    long long labeled = 0;
    for (int n = 1; n <= 6 && ok; ++n) {
        oracles::for_each_labeled_graph(n, [&](const Graph& g) {
            if (!ok) return;
            ++labeled;
            auto b = b_chromatic(g);
            if (b.status != SolveStatus::ok || b.b != oracles::brute_b(g)) {
                ok = false;
                why = "b mismatch on " + emit_graph6(g);
            }
        });
    }
    if (!ok) {
        detail = why;
        return false;
    }
    int swept = 0;
    enumerate_graphs(7, [&](const Graph& g) {
        if (!ok) return;
        ++swept;
        if (is_chordal(g).chordal() != oracles::brute_chordal(g)) {
            ok = false;
            why = "chordality mismatch on " + emit_graph6(g);
        }
    });
    if (!ok) {
        detail = why;
        return false;
    }
    detail = "chi=omega on " + std::to_string(chordal_checked) + " chordal graphs; b exact on " +
             std::to_string(labeled) + " labeled graphs; chordality exact on " +
             std::to_string(swept) + " classes";
    return true;
}

// 9. graph6 round trip: bit-exact on 10^5 random graphs n <= 62 plus the
// full n <= 8 enumeration.
bool criterion_roundtrip(std::string& detail) {
    Rng rng(424242);
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        int n = static_cast<int>(rng() % 63);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        std::string line = emit_graph6(g);
        if (parse_graph6(line) != g || emit_graph6(parse_graph6(line)) != line) {
            detail = "round trip mismatch at trial " + std::to_string(i);
            return false;
        }
    }
    bool ok = true;
    int classes = 0;
    enumerate_graphs(8, [&](const Graph& g) {
        if (!ok) return;
        ++classes;
        if (parse_graph6(emit_graph6(g)) != g) ok = false;
    });
    if (!ok) {
        detail = "round trip mismatch in the n <= 8 enumeration";
        return false;
    }
    detail = std::to_string(trials) + " random graphs + " + std::to_string(classes) +
             " enumerated classes, bit-exact";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "catalog chi/b table", criterion_catalog_table},
        {2, "minimal b-imperfection of every pattern", criterion_minimality},
        {3, "3-color b-coloring witness for F1..F3", criterion_degree_witness},
        {4, "theorem 1 at desk scale (n <= 8)", criterion_theorem1},
        {5, "theorem 2 at desk scale (n <= 8)", criterion_theorem2},
        {6, "C5 reduction suite (1000 hosts, n <= 12)", criterion_reduction_suite},
        {7, "decomposition claims suite (n <= 9 exhaustive + 10^4 random)", criterion_claims_suite},
        {8, "oracle equivalences (chi=omega, b brute force, chordality sweep)", criterion_oracles},
        {9, "graph6 round trip (10^5 random + full n <= 8)", criterion_roundtrip},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s — %s [%.1fs]\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all %d criteria pass\n", static_cast<int>(criteria.size()));
    return failures == 0 ? 0 : 1;
}
