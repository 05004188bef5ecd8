#pragma once

// b-perfection recognition: an induced F member certifies b-imperfection
// for any graph; otherwise chordal hosts are b-perfect (Theorem 1), C4-free
// hosts are b-perfect (Theorem 2), and the remaining F-free hosts surface
// the open conjecture instead of an answer.

#include "bperf/canonical.hpp"
#include "bperf/chordal.hpp"
#include "bperf/coloring.hpp"
#include "bperf/graph.hpp"
#include "bperf/patterns.hpp"

#include <map>
#include <optional>
#include <string>

namespace bperf {

enum class BStatus { b_perfect, b_imperfect, conjectured_b_perfect, unknown };

inline const char* to_string(BStatus s) {
    switch (s) {
        case BStatus::b_perfect: return "B_PERFECT";
        case BStatus::b_imperfect: return "B_IMPERFECT";
        case BStatus::conjectured_b_perfect: return "CONJECTURED_B_PERFECT";
        case BStatus::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct Verdict {
    BStatus status = BStatus::unknown;
    std::string basis;
    bool chordal = false;
    bool c4_free = false;
    std::optional<Embedding> forbidden;        // B_IMPERFECT certificate
    std::optional<EliminationOrdering> peo;    // Theorem 1 class evidence
    std::string note;
};

/// Decide b-perfection. On chordal hosts the scan restricts to F1..F9
/// (identical verdict); full_scan forces all 22 patterns for cross-checks.
inline Verdict recognize(const Graph& g, bool full_scan = false) {
    Verdict v;
    ChordalityCertificate cert = is_chordal(g);
    v.chordal = cert.chordal();
    v.c4_free = !find_induced(g, pattern_by_name("C4")).has_value();
    auto hit = scan_family(g, (v.chordal && !full_scan) ? chordal_f_names() : all_f_names());
    if (hit) {
        v.status = BStatus::b_imperfect;
        v.basis = "forbidden-pattern";
        v.forbidden = hit->second;
        return v;
    }
    if (v.chordal) {
        v.status = BStatus::b_perfect;
        v.basis = "theorem-1";
        v.peo = cert.peo;
        return v;
    }
    if (v.c4_free) {
        v.status = BStatus::b_perfect;
        v.basis = "theorem-2";
        return v;
    }
    v.status = BStatus::conjectured_b_perfect;
    v.basis = "conjecture";
    v.note = "F-free but contains a C4 and a hole; outside both theorem classes";
    return v;
}

struct BPerfectBrute {
    SolveStatus status = SolveStatus::ok;
    bool b_perfect = false;
    std::optional<VertexSet> witness;  // subset with b > chi, on failure
};

/// Exhaustive check of b(H) = chi(H) over all induced subgraphs, memoized
/// on canonical forms. Budgeted at n <= 10.
inline BPerfectBrute brute_force_b_perfect(const Graph& g, const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("brute_force_b_perfect: budget is n <= 10");
    BPerfectBrute out;
    std::map<std::string, std::pair<int, int>> memo;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.set(v);
        Graph h = induced_subgraph(g, s).graph;
        std::string key = canonical_certificate(h);
        auto it = memo.find(key);
        std::pair<int, int> chib;
        if (it != memo.end()) {
            chib = it->second;
        } else {
            ChiResult chi = chi_exact(h, limits);
            if (chi.status == SolveStatus::timeout) {
                out.status = SolveStatus::timeout;
                return out;
            }
            BChromaticResult b = b_chromatic(h, limits);
            if (b.status == SolveStatus::timeout) {
                out.status = SolveStatus::timeout;
                return out;
            }
            chib = {chi.chi, b.b};
            memo.emplace(std::move(key), chib);
        }
        if (chib.first != chib.second) {
            out.witness = s;
            return out;
        }
    }
    out.b_perfect = true;
    return out;
}

} // namespace bperf
