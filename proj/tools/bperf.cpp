// bperf: exact b-coloring toolkit over small graphs. Subcommands compute
// chromatic and b-chromatic numbers, recognize chordal graphs, scan for the
// forbidden patterns, decide b-perfection, exercise the C5 reduction and
// the decomposition claims, and run the theorem verification campaigns.

#include "bperf/campaign.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using bperf::json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    int max_n = 0;
    int jobs = bperf::default_jobs();
    long long time_limit_ms = 0;
    std::uint64_t seed = 0;
    std::string output;
    bool quiet = false;
    bool summary = false;
    int random_count = 0;
    int random_n = 8;
    double random_p = 0.5;
    std::string random_filter = "none";

    bperf::SolveLimits limits() const {
        bperf::SolveLimits l;
        if (time_limit_ms > 0) l.time_limit = std::chrono::milliseconds(time_limit_ms);
        return l;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_corpus = false) {
    cmd->add_option("--input", opt.input, "input file (graph6 lines or edge list; auto-detected)");
    cmd->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    cmd->add_option("--max-n", opt.max_n,
                    "campaigns/enumerate: use the builtin enumeration up to this n");
    if (with_corpus) {
        cmd->add_option("--random", opt.random_count, "use a random G(n,p) corpus of this size");
        cmd->add_option("--random-n", opt.random_n, "vertex count for the random corpus");
        cmd->add_option("--random-p", opt.random_p, "edge probability for the random corpus");
        cmd->add_option("--filter", opt.random_filter, "random corpus filter")
            ->check(CLI::IsMember({"none", "chordal", "c4free"}));
    }
    cmd->add_option("--jobs", opt.jobs, "worker threads (default BPERF_JOBS or 1)");
    cmd->add_option("--time-limit-ms", opt.time_limit_ms, "per-call solver time limit");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--output", opt.output, "write JSON lines to this file");
    cmd->add_flag("--quiet", opt.quiet, "suppress per-graph human output");
    cmd->add_flag("--summary", opt.summary, "print a human summary table");
}

std::vector<bperf::Graph> load_inputs(const CommonOpts& opt) {
    if (!opt.input.empty()) return bperf::read_graphs_file(opt.input, opt.format);
    return bperf::read_graphs(std::cin, opt.format);
}

class Out {
public:
    explicit Out(const CommonOpts& opt) : quiet_(opt.quiet) {
        if (!opt.output.empty()) {
            file_.open(opt.output);
            if (!file_) throw std::runtime_error("cannot open output file: " + opt.output);
        }
    }
    // JSON lines go to the output file when given, to stdout otherwise.
    void record(const json& j) {
        if (file_.is_open()) file_ << j.dump() << '\n';
        else std::cout << j.dump() << '\n';
    }
    void human(const std::string& line) {
        if (!quiet_) std::cout << line << '\n';
    }

private:
    bool quiet_;
    std::ofstream file_;
};

int run_chordal(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto cert = bperf::is_chordal(graphs[i]);
        json j{{"index", static_cast<int>(i)}, {"n", graphs[i].vertex_count()},
               {"chordal", cert.chordal()}};
        if (cert.chordal()) j["peo"] = cert.peo->order;
        else j["hole"] = *cert.hole;
        out.record(j);
        out.human("graph " + std::to_string(i) + ": " +
                  (cert.chordal() ? "chordal" : "hole of length " +
                                                    std::to_string(cert.hole->size())));
    }
    return kExitOk;
}

int run_chi(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    bool incomplete = false;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto r = bperf::chi_exact(graphs[i], opt.limits());
        if (r.status != bperf::SolveStatus::ok) {
            incomplete = true;
            out.record(json{{"index", static_cast<int>(i)}, {"status", "timeout"}});
            out.human("graph " + std::to_string(i) + ": timeout");
            continue;
        }
        out.record(json{{"index", static_cast<int>(i)}, {"chi", r.chi},
                        {"coloring", r.witness.color}});
        out.human("graph " + std::to_string(i) + ": chi = " + std::to_string(r.chi));
    }
    return incomplete ? kExitIncomplete : kExitOk;
}

int run_bchrom(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    bool incomplete = false;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto r = bperf::b_chromatic(graphs[i], opt.limits());
        if (r.status != bperf::SolveStatus::ok) {
            incomplete = true;
            out.record(json{{"index", static_cast<int>(i)}, {"status", "timeout"}});
            out.human("graph " + std::to_string(i) + ": timeout");
            continue;
        }
        out.record(json{{"index", static_cast<int>(i)}, {"b", r.b},
                        {"coloring", r.witness.color}});
        out.human("graph " + std::to_string(i) + ": b = " + std::to_string(r.b));
    }
    return incomplete ? kExitIncomplete : kExitOk;
}

int run_scan(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto hit = bperf::scan_family(graphs[i], bperf::all_f_names());
        json j{{"index", static_cast<int>(i)}};
        if (hit) {
            j["f_member"] = hit->first;
            j["embedding"] = hit->second.map;
            out.human("graph " + std::to_string(i) + ": contains " + hit->first);
        } else {
            j["f_member"] = nullptr;
            out.human("graph " + std::to_string(i) + ": F-free");
        }
        out.record(j);
    }
    return kExitOk;
}

int run_recognize(const CommonOpts& opt, bool brute, bool full_scan) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        bperf::Verdict v = bperf::recognize(graphs[i], full_scan);
        if (brute && v.status == bperf::BStatus::conjectured_b_perfect &&
            graphs[i].vertex_count() <= 10) {
            auto b = bperf::brute_force_b_perfect(graphs[i], opt.limits());
            if (b.status == bperf::SolveStatus::ok) {
                v.status = b.b_perfect ? bperf::BStatus::b_perfect : bperf::BStatus::b_imperfect;
                v.basis = "brute-force";
                v.note = "upgraded from conjecture by exhaustive subgraph sweep";
                if (!b.b_perfect && b.witness)
                    v.note += "; subset with b > chi: " + b.witness->to_string();
            }
        }
        out.record(bperf::verdict_to_json(graphs[i], v, static_cast<int>(i)));
        out.human("graph " + std::to_string(i) + ": " + bperf::to_string(v.status) +
                  " (" + v.basis + ")");
    }
    return kExitOk;
}

int run_reduce_c5(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    bool violations = false;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        json j{{"index", static_cast<int>(i)}, {"n", g.vertex_count()}};
        auto c5s = bperf::count_and_find_c5(g);
        j["c5_count"] = c5s.size();
        if (c5s.empty()) {
            j["note"] = "no C5; nothing to reduce";
            out.record(j);
            out.human("graph " + std::to_string(i) + ": no C5");
            continue;
        }
        try {
            auto site = bperf::extract_site(g, c5s.front());
            auto b = bperf::b_chromatic(g, opt.limits());
            if (b.status != bperf::SolveStatus::ok) {
                out.record(json{{"index", static_cast<int>(i)}, {"status", "timeout"}});
                return kExitIncomplete;
            }
            auto res = bperf::reduce(g, site, b.witness, opt.limits());
            auto rep = bperf::verify_reduction(g, site, res);
            j["ell"] = res.ell;
            j["g_prime"] = bperf::emit_graph6(res.g_prime);
            j["verify"] = bperf::reduction_to_json(rep);
            violations = violations || !rep.all_pass;
            out.human("graph " + std::to_string(i) + ": reduced (ell=" +
                      std::to_string(res.ell) + "), checks " +
                      (rep.all_pass ? "pass" : "FAIL"));
        } catch (const bperf::c5_site_error& e) {
            j["site_error"] = e.what();
            j["witness_pattern"] = e.witness_pattern();
            j["witness_vertices"] = e.witness_vertices();
            violations = true;
            out.human("graph " + std::to_string(i) + ": site error: " + e.what());
        }
        out.record(j);
    }
    return violations ? kExitViolations : kExitOk;
}

int run_claims(const CommonOpts& opt) {
    Out out(opt);
    auto graphs = load_inputs(opt);
    bool violations = false;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        auto seed = bperf::find_2K2(g);
        if (!seed) {
            out.record(json{{"index", static_cast<int>(i)}, {"note", "no 2K2; claims not applicable"}});
            out.human("graph " + std::to_string(i) + ": no 2K2");
            continue;
        }
        bperf::Decomposition d = bperf::grow_maximal_S(g, *seed);
        bperf::ClaimsOptions copt;
        copt.seed = opt.seed;
        bperf::ClaimsReport rep = bperf::check_claims(g, d, copt);
        out.record(bperf::claims_to_json(g, d, rep, static_cast<int>(i)));
        violations = violations || !rep.all_pass();
        out.human("graph " + std::to_string(i) + ": claims " +
                  (rep.all_pass() ? "pass" : "FAIL"));
    }
    return violations ? kExitViolations : kExitOk;
}

int run_validate_catalog(const CommonOpts& opt) {
    Out out(opt);
    bperf::CatalogReport rep = bperf::validate_catalog(opt.limits());
    for (const auto& c : rep.checks) {
        out.record(json{{"pattern", c.pattern}, {"check", c.check}, {"ok", c.ok},
                        {"detail", c.detail}});
        if (!c.ok) out.human("FAIL " + c.pattern + " " + c.check + ": " + c.detail);
    }
    out.human(rep.all_ok ? "catalog: all checks pass" : "catalog: FAILURES");
    return rep.all_ok ? kExitOk : kExitViolations;
}

std::vector<bperf::Graph> corpus_for_campaign(const CommonOpts& opt) {
    if (opt.max_n > 0) return bperf::enumerate_all(opt.max_n);
    if (opt.random_count > 0) {
        bperf::RandomCorpus model;
        model.count = opt.random_count;
        model.n = opt.random_n;
        model.p = opt.random_p;
        model.seed = opt.seed;
        model.filter = opt.random_filter;
        return bperf::random_corpus(model);
    }
    return load_inputs(opt);
}

int finish_campaign(const bperf::CampaignReport& rep, const CommonOpts& opt, Out& out) {
    for (const auto& r : rep.records) out.record(bperf::record_to_json(r));
    out.record(bperf::summary_to_json(rep.summary));
    if (opt.summary || !opt.quiet) {
        std::cout << rep.summary.campaign << ": total " << rep.summary.total << ", analyzed "
                  << rep.summary.analyzed << ", skipped " << rep.summary.skipped
                  << ", unknowns " << rep.summary.unknowns << ", violations: "
                  << rep.summary.violations.size() << '\n';
    }
    if (!rep.summary.violations.empty()) return kExitViolations;
    if (!rep.summary.complete) return kExitIncomplete;
    return kExitOk;
}

int run_thm(const CommonOpts& opt, bool thm2, bool full_scan) {
    Out out(opt);
    auto corpus = corpus_for_campaign(opt);
    bperf::CampaignOptions copt;
    copt.jobs = opt.jobs;
    copt.limits = opt.limits();
    copt.full_scan = full_scan;
    auto rep = thm2 ? bperf::verify_theorem2(corpus, copt) : bperf::verify_theorem1(corpus, copt);
    return finish_campaign(rep, opt, out);
}

int run_enumerate(const CommonOpts& opt) {
    if (opt.max_n <= 0) throw CLI::ValidationError("enumerate", "--max-n is required");
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
    }
    bperf::enumerate_graphs(opt.max_n, [&](const bperf::Graph& g) {
        std::string line = bperf::emit_graph6(g);
        if (file.is_open()) file << line << '\n';
        if (!opt.quiet || !file.is_open()) std::cout << line << '\n';
    });
    return kExitOk;
}

int run_catalog_dump(const CommonOpts& opt) {
    if (!opt.output.empty()) {
        std::ofstream f(opt.output);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
        f << bperf::catalog_dump_json();
    } else {
        std::cout << bperf::catalog_dump_json();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact b-coloring and b-perfection toolkit"};
    app.require_subcommand(1);

    CommonOpts opt;
    bool brute = false, full_scan = false;

    auto* cmd_chordal = app.add_subcommand("chordal", "chordality with PEO or hole certificate");
    add_common(cmd_chordal, opt);
    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic number");
    add_common(cmd_chi, opt);
    auto* cmd_bchrom = app.add_subcommand("bchrom", "exact b-chromatic number");
    add_common(cmd_bchrom, opt);
    auto* cmd_scan = app.add_subcommand("scan", "scan for forbidden F members");
    add_common(cmd_scan, opt);
    auto* cmd_recognize = app.add_subcommand("recognize", "decide b-perfection with certificates");
    add_common(cmd_recognize, opt);
    cmd_recognize->add_flag("--brute", brute, "resolve conjectured cases by brute force (n <= 10)");
    cmd_recognize->add_flag("--full-scan", full_scan, "scan all 22 patterns even on chordal hosts");
    auto* cmd_reduce = app.add_subcommand("reduce-c5", "run and verify one C5 reduction round");
    add_common(cmd_reduce, opt);
    auto* cmd_claims = app.add_subcommand("claims", "decomposition claims on grow_maximal_S");
    add_common(cmd_claims, opt);
    auto* cmd_catalog = app.add_subcommand("validate-catalog", "run the catalog gates");
    add_common(cmd_catalog, opt);
    auto* cmd_thm1 = app.add_subcommand("verify-thm1", "theorem 1 campaign over a corpus");
    add_common(cmd_thm1, opt, true);
    cmd_thm1->add_flag("--full-scan", full_scan, "scan all 22 patterns instead of F1..F9");
    auto* cmd_thm2 = app.add_subcommand("verify-thm2", "theorem 2 campaign over a corpus");
    add_common(cmd_thm2, opt, true);
    auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free graphs up to --max-n");
    add_common(cmd_enum, opt, true);
    auto* cmd_dump = app.add_subcommand("catalog-dump", "patterns as JSON lines");
    add_common(cmd_dump, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_chordal)) return run_chordal(opt);
        if (app.got_subcommand(cmd_chi)) return run_chi(opt);
        if (app.got_subcommand(cmd_bchrom)) return run_bchrom(opt);
        if (app.got_subcommand(cmd_scan)) return run_scan(opt);
        if (app.got_subcommand(cmd_recognize)) return run_recognize(opt, brute, full_scan);
        if (app.got_subcommand(cmd_reduce)) return run_reduce_c5(opt);
        if (app.got_subcommand(cmd_claims)) return run_claims(opt);
        if (app.got_subcommand(cmd_catalog)) return run_validate_catalog(opt);
        if (app.got_subcommand(cmd_thm1)) return run_thm(opt, false, full_scan);
        if (app.got_subcommand(cmd_thm2)) return run_thm(opt, true, false);
        if (app.got_subcommand(cmd_enum)) return run_enumerate(opt);
        if (app.got_subcommand(cmd_dump)) return run_catalog_dump(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
