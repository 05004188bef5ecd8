#pragma once

// The C5-elimination step of the Theorem 2 proof: replace an induced C5
// whose b-coloring uses ell colors (3 <= ell <= 5) by ell new vertices
// wired to the site clique X, lift the b-coloring and rebuild a chromatic
// coloring, then verify the claims behind the construction.

#include "bperf/coloring.hpp"
#include "bperf/graph.hpp"
#include "bperf/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bperf {

/// An induced C5 in cyclic order plus the set X of outside vertices with a
/// neighbour in it. Site validity forces every X member adjacent to all of
/// the cycle and X a clique.
struct C5Site {
    std::array<int, 5> cycle{};
    VertexSet x_set;
};

/// All induced 5-cycles, deduplicated as vertex sets, each in cyclic order.
inline std::vector<std::array<int, 5>> count_and_find_c5(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64)
        throw std::invalid_argument("count_and_find_c5: budget is n <= 64");
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> pick{};
    auto rec = [&](auto&& self, int depth, int from) -> void {
        if (depth == 5) {
            int degsum = 0;
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) {
                int deg = 0;
                for (int j = 0; j < 5; ++j)
                    if (i != j && g.adjacent(pick[static_cast<std::size_t>(i)],
                                             pick[static_cast<std::size_t>(j)]))
                        ++deg;
                if (deg != 2) ok = false;
                degsum += deg;
            }
            if (!ok || degsum != 10) return;
            // 2-regular on 5 vertices is either C5 or C3+C2; the latter is
            // impossible (a 2-vertex cycle needs a multi-edge), so walk it.
            std::array<int, 5> cyc{};
            cyc[0] = pick[0];
            VertexSet used(g.vertex_count());
            used.set(cyc[0]);
            for (int i = 1; i < 5; ++i) {
                int prev = cyc[static_cast<std::size_t>(i - 1)];
                int next = -1;
                for (int j = 0; j < 5; ++j) {
                    int v = pick[static_cast<std::size_t>(j)];
                    if (!used.test(v) && g.adjacent(prev, v) && (next == -1 || v < next))
                        next = v;
                }
                if (next == -1) return;  // disconnected: not a C5
                cyc[static_cast<std::size_t>(i)] = next;
                used.set(next);
            }
            if (!g.adjacent(cyc[4], cyc[0])) return;
            out.push_back(cyc);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

enum class c5_site_errc { not_a_c5, partial_attachment, x_not_clique };

class c5_site_error : public std::runtime_error {
public:
    c5_site_error(c5_site_errc kind, const std::string& what,
                  std::string witness_pattern = {}, std::vector<int> witness_vertices = {})
        : std::runtime_error(what), kind_(kind),
          witness_pattern_(std::move(witness_pattern)),
          witness_vertices_(std::move(witness_vertices)) {}

    c5_site_errc kind() const { return kind_; }
    const std::string& witness_pattern() const { return witness_pattern_; }
    const std::vector<int>& witness_vertices() const { return witness_vertices_; }

private:
    c5_site_errc kind_;
    std::string witness_pattern_;
    std::vector<int> witness_vertices_;
};

namespace detail {

inline std::optional<std::array<int, 5>> cycle_order_of(const Graph& g,
                                                        const std::array<int, 5>& z) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)])
                return std::nullopt;
    std::array<int, 5> cyc{};
    cyc[0] = z[0];
    std::set<int> used{z[0]};
    for (int i = 1; i < 5; ++i) {
        int prev = cyc[static_cast<std::size_t>(i - 1)];
        int next = -1;
        for (int v : z)
            if (!used.count(v) && g.adjacent(prev, v) && (next == -1 || v < next)) next = v;
        if (next == -1) return std::nullopt;
        cyc[static_cast<std::size_t>(i)] = next;
        used.insert(next);
    }
    // exactly the five cycle edges
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == 4);
            if (g.adjacent(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)]) !=
                consecutive)
                return std::nullopt;
        }
    return cyc;
}

} // namespace detail

/// Validate Z and collect X. A vertex with both a neighbour and a
/// non-neighbour in Z yields the proof's P5 / C4 / F16 witness; two
/// non-adjacent X members yield the C4 {x, z1, y, z3}.
inline C5Site extract_site(const Graph& g, const std::array<int, 5>& z) {
    auto cyc = detail::cycle_order_of(g, z);
    if (!cyc)
        throw c5_site_error(c5_site_errc::not_a_c5, "extract_site: Z does not induce a C5");
    const int n = g.vertex_count();
    C5Site site;
    site.cycle = *cyc;
    site.x_set = VertexSet(n);
    VertexSet zset(n);
    for (int v : *cyc) zset.set(v);
    for (int v = 0; v < n; ++v) {
        if (zset.test(v)) continue;
        VertexSet nb = g.neighbors(v) & zset;
        int hits = nb.count();
        if (hits == 0) continue;
        if (hits < 5) {
            // the proof's obligation: Z + {v} contains a P5, a C4 or an F16
            VertexSet sub = zset;
            sub.set(v);
            InducedSubgraph is = induced_subgraph(g, sub);
            for (const char* name : {"P5", "C4", "F16"}) {
                if (auto emb = find_induced(is.graph, pattern_by_name(name))) {
                    std::vector<int> host_vertices;
                    for (int pv : emb->map)
                        host_vertices.push_back(is.to_old[static_cast<std::size_t>(pv)]);
                    throw c5_site_error(
                        c5_site_errc::partial_attachment,
                        "extract_site: vertex " + std::to_string(v) +
                            " has a neighbour and a non-neighbour in Z; witness " + name,
                        name, host_vertices);
                }
            }
            throw std::logic_error("extract_site: partial attachment without witness");
        }
        site.x_set.set(v);
    }
    std::vector<int> xs = site.x_set.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!g.adjacent(xs[i], xs[j]))
                throw c5_site_error(
                    c5_site_errc::x_not_clique,
                    "extract_site: X members " + std::to_string(xs[i]) + "," +
                        std::to_string(xs[j]) + " are non-adjacent; witness C4",
                    "C4",
                    {xs[i], site.cycle[0], xs[j], site.cycle[2]});
    return site;
}

struct ReductionResult {
    Graph g_prime;
    std::vector<int> new_vertices;  // indices in g_prime
    int ell = 0;                    // colors of c on Z
    Coloring lifted_b;              // b-coloring of g_prime, same k as c
    Coloring recolored_chi;         // proper, at most chi(g) colors
    int host_chi = 0;
    int host_b_colors = 0;          // k of the supplied b-coloring
    std::vector<int> old_to_new;    // -1 for removed Z vertices
    std::vector<int> color_rename;  // 1-based: old color -> renamed color
};

namespace detail {

// Rename colors so those on Z become 1..ell (ascending by original value)
// and the rest follow, order preserved.
inline std::vector<int> z_first_rename(const Coloring& c, const VertexSet& zset) {
    std::set<int> zc, other;
    for (int v = 0; v < static_cast<int>(c.color.size()); ++v)
        (zset.test(v) ? zc : other).insert(c.color[static_cast<std::size_t>(v)]);
    for (int col : zc) other.erase(col);
    std::vector<int> rename(static_cast<std::size_t>(c.k) + 1, 0);
    int next = 1;
    for (int col : zc) rename[static_cast<std::size_t>(col)] = next++;
    for (int col : other) rename[static_cast<std::size_t>(col)] = next++;
    return rename;
}

inline Coloring compact_colors(std::vector<int> raw) {
    std::set<int> used(raw.begin(), raw.end());
    std::map<int, int> to_new;
    int next = 1;
    for (int c : used) to_new[c] = next++;
    Coloring out;
    out.k = next - 1;
    out.color.reserve(raw.size());
    for (int c : raw) out.color.push_back(to_new[c]);
    return out;
}

} // namespace detail

/// Build G' = (G - Z) + a_1..a_ell with the proof's wiring, the lifted
/// b-coloring (a_i gets color i) and the chromatic recoloring (a_i gets i
/// when ell = 3, color 1 otherwise).
inline ReductionResult reduce(const Graph& g, const C5Site& site, const Coloring& c,
                              const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    // site freshness
    C5Site fresh = extract_site(g, site.cycle);
    if (!(fresh.x_set == site.x_set))
        throw std::invalid_argument("reduce: site is stale for this graph");
    BAnalysis analysis = validate_coloring(g, c);
    if (!analysis.proper() || !analysis.is_b_coloring)
        throw std::invalid_argument("reduce: c is not a b-coloring of g");

    VertexSet zset(n);
    for (int v : site.cycle) zset.set(v);

    std::vector<int> rename = detail::z_first_rename(c, zset);
    std::set<int> zcolors;
    for (int v : site.cycle) zcolors.insert(rename[static_cast<std::size_t>(c.color[static_cast<std::size_t>(v)])]);
    const int ell = static_cast<int>(zcolors.size());
    if (ell < 3 || ell > 5)
        throw std::logic_error("reduce: a proper coloring puts 3..5 colors on a C5");

    ReductionResult res;
    res.ell = ell;
    res.color_rename = rename;
    res.host_b_colors = c.k;
    res.old_to_new.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> survivors;
    for (int v = 0; v < n; ++v) {
        if (zset.test(v)) continue;
        res.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(survivors.size());
        survivors.push_back(v);
    }
    const int np = static_cast<int>(survivors.size()) + ell;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = i + 1; j < survivors.size(); ++j)
            if (g.adjacent(survivors[i], survivors[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (int i = 0; i < ell; ++i) {
        int ai = static_cast<int>(survivors.size()) + i;
        res.new_vertices.push_back(ai);
        if (ell == 3)
            for (int j = 0; j < i; ++j)
                edges.emplace_back(static_cast<int>(survivors.size()) + j, ai);
        site.x_set.for_each([&](int x) {
            edges.emplace_back(res.old_to_new[static_cast<std::size_t>(x)], ai);
        });
    }
    res.g_prime = Graph::from_edge_list(np, edges);

    res.lifted_b.k = c.k;
    res.lifted_b.color.assign(static_cast<std::size_t>(np), 0);
    for (int v : survivors)
        res.lifted_b.color[static_cast<std::size_t>(res.old_to_new[static_cast<std::size_t>(v)])] =
            rename[static_cast<std::size_t>(c.color[static_cast<std::size_t>(v)])];
    for (int i = 0; i < ell; ++i)
        res.lifted_b.color[static_cast<std::size_t>(res.new_vertices[static_cast<std::size_t>(i)])] = i + 1;

    // chromatic recoloring from any chi(g)-coloring
    ChiResult chi = chi_exact(g, limits);
    if (chi.status != SolveStatus::ok)
        throw std::runtime_error("reduce: chi_exact timed out");
    res.host_chi = chi.chi;
    std::vector<int> gamma_rename = detail::z_first_rename(chi.witness, zset);
    std::vector<int> raw(static_cast<std::size_t>(np), 0);
    for (int v : survivors)
        raw[static_cast<std::size_t>(res.old_to_new[static_cast<std::size_t>(v)])] =
            gamma_rename[static_cast<std::size_t>(chi.witness.color[static_cast<std::size_t>(v)])];
    for (int i = 0; i < ell; ++i)
        raw[static_cast<std::size_t>(res.new_vertices[static_cast<std::size_t>(i)])] =
            (ell == 3) ? i + 1 : 1;
    res.recolored_chi = detail::compact_colors(std::move(raw));
    return res;
}

struct ReductionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReductionReport {
    std::vector<ReductionCheck> checks;
    bool all_pass = true;

    void add(std::string name, bool pass, std::string detail = "") {
        all_pass = all_pass && pass;
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// Checks, in order: the lifted coloring is a b-coloring of g' with the
/// same k; the recoloring is proper with at most chi(g) colors; g' is
/// F-free and C4-free; g' has strictly fewer C5s; new vertices simplicial.
inline ReductionReport verify_reduction(const Graph& g, const C5Site& site,
                                        const ReductionResult& res) {
    ReductionReport rep;
    {
        bool ok = false;
        std::string detail;
        try {
            BAnalysis a = validate_coloring(res.g_prime, res.lifted_b);
            ok = a.proper() && a.is_b_coloring && res.lifted_b.k == res.host_b_colors;
            if (!a.proper())
                detail = "improper at edge (" + std::to_string(a.improper_edge->first) + "," +
                         std::to_string(a.improper_edge->second) + ")";
            else if (!a.is_b_coloring)
                detail = "some color class lost its b-vertex";
            else if (res.lifted_b.k != res.host_b_colors)
                detail = "color count changed";
        } catch (const std::invalid_argument& e) {
            detail = e.what();
        }
        rep.add("lifted_b_coloring_same_k", ok, detail);
    }
    {
        bool ok = false;
        std::string detail;
        try {
            BAnalysis a = validate_coloring(res.g_prime, res.recolored_chi);
            ok = a.proper() && res.recolored_chi.k <= res.host_chi;
            if (!a.proper())
                detail = "improper recoloring";
            else if (!ok)
                detail = "uses " + std::to_string(res.recolored_chi.k) + " > chi(g) = " +
                         std::to_string(res.host_chi);
        } catch (const std::invalid_argument& e) {
            detail = e.what();
        }
        rep.add("recolored_chi_within_chi", ok, detail);
    }
    {
        auto hit = scan_family(res.g_prime, all_f_names());
        bool c4 = find_induced(res.g_prime, pattern_by_name("C4")).has_value();
        rep.add("g_prime_f_free_c4_free", !hit && !c4,
                hit ? ("contains " + hit->first) : (c4 ? "contains C4" : ""));
    }
    {
        auto before = count_and_find_c5(g).size();
        auto after = count_and_find_c5(res.g_prime).size();
        rep.add("strictly_fewer_c5", after < before,
                "before=" + std::to_string(before) + " after=" + std::to_string(after));
    }
    {
        bool ok = true;
        std::string detail;
        for (int a : res.new_vertices)
            if (!is_simplicial(res.g_prime, a)) {
                ok = false;
                detail = "new vertex " + std::to_string(a) + " is not simplicial";
                break;
            }
        rep.add("new_vertices_simplicial", ok, detail);
    }
    (void)site;
    return rep;
}

} // namespace bperf
