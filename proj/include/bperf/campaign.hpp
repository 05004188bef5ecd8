#pragma once

// Batch orchestration: corpus ingestion, the Theorem 1 / Theorem 2
// verification campaigns, claim and reduction sweeps, and JSON-lines
// reporting. Workers map pure per-graph analyses over the corpus; records
// are keyed by input index so reports are deterministic for any job count.

#include "bperf/c5_reduction.hpp"
#include "bperf/chordal.hpp"
#include "bperf/coloring.hpp"
#include "bperf/enumerate.hpp"
#include "bperf/gen.hpp"
#include "bperf/graph.hpp"
#include "bperf/graph6.hpp"
#include "bperf/patterns.hpp"
#include "bperf/proof_structure.hpp"
#include "bperf/recognize.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace bperf {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Corpus ingestion

/// graph6 lines (one graph per line, optional ">>graph6<<" header) or the
/// edge-list format (one graph per stream). Auto-detects unless format is
/// "g6" or "edges".
inline std::vector<Graph> read_graphs(std::istream& in, const std::string& format = "auto") {
    std::vector<Graph> out;
    if (format == "edges") {
        out.push_back(read_edge_list(in));
        return out;
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string fmt = format;
    if (fmt == "auto") {
        fmt = "g6";
        std::istringstream probe(content);
        std::string line;
        while (std::getline(probe, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream row(line);
            long long a, b;
            std::string rest;
            if (row >> a >> b && !(row >> rest) && a >= 0 && b >= 0) fmt = "edges";
            if (!line.empty()) break;
        }
    }
    if (fmt == "edges") {
        std::istringstream body(content);
        out.push_back(read_edge_list(body));
        return out;
    }
    std::istringstream body(content);
    std::string line;
    while (std::getline(body, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

inline std::vector<Graph> read_graphs_file(const std::string& path,
                                           const std::string& format = "auto") {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_graphs(in, format);
}

/// Random corpus model: `count` graphs from G(n, p), reproducible from the
/// seed, with an optional class filter applied by rejection.
struct RandomCorpus {
    int count = 100;
    int n = 8;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string filter = "none";  // none | chordal | c4free
};

inline std::vector<Graph> random_corpus(const RandomCorpus& model) {
    if (model.filter != "none" && model.filter != "chordal" && model.filter != "c4free")
        throw std::invalid_argument("random corpus: unknown filter " + model.filter);
    Rng rng(model.seed);
    std::vector<Graph> out;
    long long attempts = 0;
    const long long cap = 1000LL * model.count + 1000;
    while (static_cast<int>(out.size()) < model.count) {
        if (++attempts > cap)
            throw std::runtime_error("random corpus: filter rejected too many samples");
        Graph g = random_graph(model.n, model.p, rng);
        if (model.filter == "chordal" && !is_chordal(g).chordal()) continue;
        if (model.filter == "c4free" && find_induced(g, pattern_by_name("C4"))) continue;
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parallel map with index-keyed results

inline int default_jobs() {
    if (const char* env = std::getenv("BPERF_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

template <class Record>
inline std::vector<Record> parallel_map(std::size_t count, int jobs,
                                        const std::function<Record(std::size_t)>& fn) {
    std::vector<Record> records(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) records[i] = fn(i);
        return records;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            records[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

// ---------------------------------------------------------------------------
// Campaign records

struct CampaignOptions {
    int jobs = 1;
    SolveLimits limits;
    bool full_scan = false;  // theorem 1: scan all 22 patterns instead of F1..F9
};

struct GraphRecord {
    int index = 0;
    std::string g6;
    int n = 0;
    bool skipped = false;   // outside the campaign's graph class
    bool unknown = false;   // solver timeout or per-graph error
    std::string error;
    bool chordal = false;
    bool c4_free = false;
    int chi = -1;
    int b = -1;
    std::string f_found;
    std::vector<int> f_embedding;
    Coloring b_witness;
    bool violation = false;
    std::string violation_reason;
    bool reduction_ran = false;
    bool reduction_ok = true;
    std::string reduction_detail;
    double ms = 0.0;
};

struct CampaignSummary {
    std::string campaign;
    int total = 0;
    int analyzed = 0;
    int skipped = 0;
    int unknowns = 0;
    std::vector<int> violations;
    bool complete = true;

    bool holds() const { return violations.empty() && complete; }
};

struct CampaignReport {
    std::vector<GraphRecord> records;
    CampaignSummary summary;
};

inline json record_to_json(const GraphRecord& r) {
    const char* verdict = r.skipped ? "skipped"
                          : r.unknown ? "unknown"
                          : r.violation ? "violation"
                                        : "consistent";
    json j{{"index", r.index}, {"graph6", r.g6},   {"n", r.n},
           {"chordal", r.chordal}, {"c4free", r.c4_free}, {"skipped", r.skipped},
           {"unknown", r.unknown}, {"violation", r.violation}, {"verdict", verdict}};
    if (!r.error.empty()) j["error"] = r.error;
    if (r.chi >= 0) j["chi"] = r.chi;
    if (r.b >= 0) j["b"] = r.b;
    if (!r.f_found.empty()) {
        j["f_member"] = r.f_found;
        j["f_embedding"] = r.f_embedding;
    }
    if (r.b_witness.k > 0) j["b_witness"] = r.b_witness.color;
    if (r.violation) j["violation_reason"] = r.violation_reason;
    if (r.reduction_ran) {
        j["reduction_ok"] = r.reduction_ok;
        if (!r.reduction_detail.empty()) j["reduction_detail"] = r.reduction_detail;
    }
    j["ms"] = r.ms;
    return j;
}

inline json summary_to_json(const CampaignSummary& s) {
    return json{{"campaign", s.campaign},   {"total", s.total},
                {"analyzed", s.analyzed},   {"skipped", s.skipped},
                {"unknowns", s.unknowns},   {"violations", s.violations},
                {"complete", s.complete},   {"holds", s.holds()}};
}

namespace detail {

inline void finish_summary(CampaignReport& rep, const std::string& name) {
    rep.summary.campaign = name;
    rep.summary.total = static_cast<int>(rep.records.size());
    for (const auto& r : rep.records) {
        if (r.skipped) {
            ++rep.summary.skipped;
            continue;
        }
        ++rep.summary.analyzed;
        if (r.unknown) {
            ++rep.summary.unknowns;
            rep.summary.complete = false;
        }
        if (r.violation) rep.summary.violations.push_back(r.index);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Theorem 1: every F-free chordal graph is b-perfect.

inline CampaignReport verify_theorem1(const std::vector<Graph>& corpus,
                                      const CampaignOptions& opt = {}) {
    auto analyze_impl = [&](std::size_t i) -> GraphRecord {
        auto t0 = std::chrono::steady_clock::now();
        const Graph& g = corpus[i];
        GraphRecord rec;
        rec.index = static_cast<int>(i);
        rec.g6 = emit_graph6(g);
        rec.n = g.vertex_count();
        ChordalityCertificate cert = is_chordal(g);
        rec.chordal = cert.chordal();
        rec.c4_free = !find_induced(g, pattern_by_name("C4")).has_value();
        if (!rec.chordal || rec.n == 0) {
            rec.skipped = true;
            return rec;
        }
        auto hit = scan_family(g, opt.full_scan ? all_f_names() : chordal_f_names());
        if (hit) {
            rec.f_found = hit->first;
            rec.f_embedding = hit->second.map;
        }
        ChiResult chi = chi_exact(g, opt.limits);
        BChromaticResult b = chi.status == SolveStatus::ok ? b_chromatic(g, opt.limits)
                                                           : BChromaticResult{};
        if (chi.status != SolveStatus::ok || b.status != SolveStatus::ok) {
            rec.unknown = true;
            return rec;
        }
        rec.chi = chi.chi;
        rec.b = b.b;
        rec.b_witness = b.witness;
        CliqueWitness omega = omega_chordal(g);
        if (omega.omega != chi.chi) {
            rec.violation = true;
            rec.violation_reason = "chi != omega on a chordal graph";
        } else if (rec.f_found.empty() && rec.b != rec.chi) {
            rec.violation = true;
            rec.violation_reason = "F-free chordal graph with b > chi";
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        return rec;
    };
    auto analyze = [&](std::size_t i) -> GraphRecord {
        try {
            return analyze_impl(i);
        } catch (const std::exception& e) {
            GraphRecord rec;
            rec.index = static_cast<int>(i);
            rec.n = corpus[i].vertex_count();
            rec.unknown = true;
            rec.error = e.what();
            return rec;
        }
    };
    CampaignReport rep;
    rep.records = parallel_map<GraphRecord>(corpus.size(), opt.jobs, analyze);
    detail::finish_summary(rep, "theorem-1");
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem 2: every F-free C4-free graph is b-perfect; F-free C4-free hosts
// with a C5 additionally get one reduce + verify_reduction round.

inline CampaignReport verify_theorem2(const std::vector<Graph>& corpus,
                                      const CampaignOptions& opt = {}) {
    auto analyze_impl = [&](std::size_t i) -> GraphRecord {
        auto t0 = std::chrono::steady_clock::now();
        const Graph& g = corpus[i];
        GraphRecord rec;
        rec.index = static_cast<int>(i);
        rec.g6 = emit_graph6(g);
        rec.n = g.vertex_count();
        rec.chordal = is_chordal(g).chordal();
        rec.c4_free = !find_induced(g, pattern_by_name("C4")).has_value();
        if (!rec.c4_free || rec.n == 0) {
            rec.skipped = true;
            return rec;
        }
        auto hit = scan_family(g, all_f_names());
        if (hit) {
            rec.f_found = hit->first;
            rec.f_embedding = hit->second.map;
        }
        ChiResult chi = chi_exact(g, opt.limits);
        BChromaticResult b = chi.status == SolveStatus::ok ? b_chromatic(g, opt.limits)
                                                           : BChromaticResult{};
        if (chi.status != SolveStatus::ok || b.status != SolveStatus::ok) {
            rec.unknown = true;
            return rec;
        }
        rec.chi = chi.chi;
        rec.b = b.b;
        rec.b_witness = b.witness;
        if (rec.f_found.empty() && rec.b != rec.chi) {
            rec.violation = true;
            rec.violation_reason = "F-free C4-free graph with b > chi";
        }
        if (rec.f_found.empty()) {
            auto c5s = count_and_find_c5(g);
            if (!c5s.empty()) {
                rec.reduction_ran = true;
                try {
                    C5Site site = extract_site(g, c5s.front());
                    ReductionResult res = reduce(g, site, b.witness, opt.limits);
                    ReductionReport check = verify_reduction(g, site, res);
                    rec.reduction_ok = check.all_pass;
                    if (!check.all_pass) {
                        for (const auto& c : check.checks)
                            if (!c.pass) {
                                rec.reduction_detail = c.name + ": " + c.detail;
                                break;
                            }
                        rec.violation = true;
                        rec.violation_reason = "reduction check failed: " + rec.reduction_detail;
                    }
                } catch (const std::exception& e) {
                    rec.reduction_ok = false;
                    rec.reduction_detail = e.what();
                    rec.violation = true;
                    rec.violation_reason = std::string("reduction error: ") + e.what();
                }
            }
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        return rec;
    };
    auto analyze = [&](std::size_t i) -> GraphRecord {
        try {
            return analyze_impl(i);
        } catch (const std::exception& e) {
            GraphRecord rec;
            rec.index = static_cast<int>(i);
            rec.n = corpus[i].vertex_count();
            rec.unknown = true;
            rec.error = e.what();
            return rec;
        }
    };
    CampaignReport rep;
    rep.records = parallel_map<GraphRecord>(corpus.size(), opt.jobs, analyze);
    detail::finish_summary(rep, "theorem-2");
    return rep;
}

// ---------------------------------------------------------------------------
// JSON for verdicts, claims and reductions (CLI surface)

inline json embedding_to_json(const Embedding& e) {
    return json{{"pattern", e.pattern_name}, {"map", e.map}};
}

inline json verdict_to_json(const Graph& g, const Verdict& v, int input_index) {
    json j{{"input_index", input_index},
           {"n", g.vertex_count()},
           {"chordal", v.chordal},
           {"c4free", v.c4_free},
           {"status", to_string(v.status)},
           {"basis", v.basis}};
    if (v.forbidden) j["certificate"] = embedding_to_json(*v.forbidden);
    else if (v.peo) j["certificate"] = json{{"peo", v.peo->order}};
    else if (v.status == BStatus::b_perfect && v.basis == "theorem-2")
        j["certificate"] = json{{"c4_free", true}};
    else if (v.status == BStatus::b_perfect && v.basis == "brute-force")
        j["certificate"] = json{{"all_induced_subgraphs_checked", true}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline json claim_to_json(const ClaimOutcome& c) {
    json j{{"checked", c.checked}, {"pass", c.pass}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

inline json claims_to_json(const Graph& g, const Decomposition& d, const ClaimsReport& r,
                           int input_index) {
    json j{{"input_index", input_index},
           {"n", g.vertex_count()},
           {"chordal", r.host_chordal},
           {"f_free", r.host_f_free},
           {"S", d.s.to_vector()},
           {"R", d.r.to_vector()},
           {"claim3", claim_to_json(r.claim3)},
           {"claim4", claim_to_json(r.claim4)},
           {"claim5", claim_to_json(r.claim5)},
           {"claim6", claim_to_json(r.claim6)},
           {"all_pass", r.all_pass()}};
    json comps = json::array();
    for (const auto& c : d.big_components) comps.push_back(c.to_vector());
    j["big_components"] = comps;
    if (d.z_index) j["Z"] = d.big_components[static_cast<std::size_t>(*d.z_index)].to_vector();
    return j;
}

inline json reduction_to_json(const ReductionReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"checks", checks}, {"all_pass", r.all_pass}};
}

} // namespace bperf
