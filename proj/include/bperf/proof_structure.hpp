#pragma once

// The Theorem 1 decomposition: a maximal set S inducing at least two big
// components, R = V \ S, the designated component Z and T = S \ Z, plus
// checkers for the proof's coloring-free structural claims.

#include "bperf/chordal.hpp"
#include "bperf/graph.hpp"
#include "bperf/patterns.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bperf {

struct Decomposition {
    VertexSet s;
    VertexSet r;
    std::vector<VertexSet> big_components;  // big components of G[S]
    std::optional<int> z_index;             // into big_components, set by claim 5

    VertexSet t(const Graph& g) const {
        VertexSet out = s;
        (void)g;
        if (z_index) out -= big_components[static_cast<std::size_t>(*z_index)];
        return out;
    }
};

/// Four vertices inducing exactly two disjoint edges {a,b} and {c,d}.
inline std::optional<std::array<int, 4>> find_2K2(const Graph& g) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
                continue;
            return std::array<int, 4>{a, b, c, d};
        }
    return std::nullopt;
}

namespace detail {

inline int big_component_count(const Graph& g, const VertexSet& s) {
    int big = 0;
    for (const auto& comp : components_within(g, s))
        if (comp.count() >= 2) ++big;
    return big;
}

} // namespace detail

/// Decomposition induced by an S that already has >= 2 big components.
inline Decomposition decomposition_from_s(const Graph& g, const VertexSet& s) {
    Decomposition d;
    d.s = s;
    d.r = VertexSet::full(g.vertex_count()) - s;
    for (auto& comp : components_within(g, s))
        if (comp.count() >= 2) d.big_components.push_back(std::move(comp));
    if (d.big_components.size() < 2)
        throw std::invalid_argument("decomposition_from_s: S induces fewer than two big components");
    return d;
}

/// All maximal S (>= 2 big components, no single vertex addable), by
/// subset sweep. The greedy grow_maximal_S picks one of these; the claims
/// are asserted for every choice. Budgeted at n <= 8.
inline std::vector<VertexSet> all_maximal_S(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("all_maximal_S: budget is n <= 8");
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.set(v);
        if (detail::big_component_count(g, s) < 2) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (s.test(v)) continue;
            VertexSet bigger = s;
            bigger.set(v);
            if (detail::big_component_count(g, bigger) >= 2) maximal = false;
        }
        if (maximal) out.push_back(std::move(s));
    }
    return out;
}

/// Grow S greedily from a 2K2 seed (ascending vertex index, repeated
/// passes) while G[S] keeps at least two big components, until no single
/// vertex can be added.
inline Decomposition grow_maximal_S(const Graph& g, const std::array<int, 4>& seed) {
    const int n = g.vertex_count();
    VertexSet s(n);
    for (int v : seed) {
        if (v < 0 || v >= n || s.test(v))
            throw std::invalid_argument("grow_maximal_S: bad seed vertices");
        s.set(v);
    }
    if (!g.adjacent(seed[0], seed[1]) || !g.adjacent(seed[2], seed[3]) ||
        g.adjacent(seed[0], seed[2]) || g.adjacent(seed[0], seed[3]) ||
        g.adjacent(seed[1], seed[2]) || g.adjacent(seed[1], seed[3]))
        throw std::invalid_argument("grow_maximal_S: seed does not induce a 2K2");

    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < n; ++v) {
            if (s.test(v)) continue;
            VertexSet candidate = s;
            candidate.set(v);
            if (detail::big_component_count(g, candidate) >= 2) {
                s = candidate;
                grew = true;
            }
        }
    }
    return decomposition_from_s(g, s);
}

struct ClaimOutcome {
    bool checked = false;
    bool pass = false;
    std::string witness;  // describes the violating structure on failure
};

struct ClaimsOptions {
    // Y enumeration is exhaustive whenever Z \ N(a) has at most this many
    // vertices; beyond that, all Y up to y_size_cap plus random larger ones.
    int exhaustive_universe_limit = 16;
    int y_size_cap = 4;
    int random_y_samples = 64;
    std::uint64_t seed = 0;
};

struct ClaimsReport {
    bool host_chordal = false;
    bool host_f_free = false;
    ClaimOutcome claim3, claim4, claim5, claim6;

    bool all_pass() const {
        for (const ClaimOutcome* c : {&claim3, &claim4, &claim5, &claim6})
            if (c->checked && !c->pass) return false;
        return true;
    }
};

namespace detail {

// All non-empty vertex subsets of `universe` inducing a connected subgraph.
inline std::vector<VertexSet> connected_subsets(const Graph& g, const std::vector<int>& universe) {
    std::vector<VertexSet> out;
    const int m = static_cast<int>(universe.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        VertexSet y(g.vertex_count());
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) y.set(universe[static_cast<std::size_t>(i)]);
        if (static_cast<int>(components_within(g, y).size()) == 1) out.push_back(std::move(y));
    }
    return out;
}

} // namespace detail

/// Check Claims 3 (every R-vertex meets every big component), 4 (R is a
/// clique), 5 (a component Z exists with R complete to every other big
/// component; designated in d on success) and 6 (for each a in R and each
/// connected Y in Z missing N(a), some z in Z dominates Y + {a}).
inline ClaimsReport check_claims(const Graph& g, Decomposition& d, const ClaimsOptions& opt = {}) {
    const int n = g.vertex_count();
    if (d.s.universe() != n)
        throw std::invalid_argument("check_claims: decomposition is stale for this graph");
    ClaimsReport rep;
    rep.host_chordal = is_chordal(g).chordal();
    rep.host_f_free = is_f_free(g, rep.host_chordal);

    std::vector<int> r = d.r.to_vector();

    // Claim 3
    rep.claim3.checked = true;
    rep.claim3.pass = true;
    for (int x : r) {
        VertexSet nb = g.neighbors(x);
        for (std::size_t ci = 0; ci < d.big_components.size(); ++ci)
            if (!nb.intersects(d.big_components[ci])) {
                rep.claim3.pass = false;
                rep.claim3.witness = "vertex " + std::to_string(x) +
                                     " misses big component " +
                                     d.big_components[ci].to_string();
                break;
            }
        if (!rep.claim3.pass) break;
    }

    // Claim 4
    rep.claim4.checked = true;
    rep.claim4.pass = true;
    for (std::size_t i = 0; i < r.size() && rep.claim4.pass; ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (!g.adjacent(r[i], r[j])) {
                rep.claim4.pass = false;
                rep.claim4.witness = "non-adjacent R pair (" + std::to_string(r[i]) + "," +
                                     std::to_string(r[j]) + ")";
                break;
            }

    // Claim 5
    rep.claim5.checked = true;
    rep.claim5.pass = false;
    for (std::size_t zi = 0; zi < d.big_components.size() && !rep.claim5.pass; ++zi) {
        bool ok = true;
        for (std::size_t ci = 0; ci < d.big_components.size() && ok; ++ci) {
            if (ci == zi) continue;
            std::vector<int> comp = d.big_components[ci].to_vector();
            for (int x : r) {
                for (int v : comp)
                    if (!g.adjacent(x, v)) { ok = false; break; }
                if (!ok) break;
            }
        }
        if (ok) {
            rep.claim5.pass = true;
            d.z_index = static_cast<int>(zi);
        }
    }
    if (!rep.claim5.pass) {
        rep.claim5.witness = "no big component Z has R complete to all other big components";
        if (d.big_components.empty()) rep.claim5.witness = "no big components in S";
    }

    // Claim 6 needs the designated Z
    if (d.z_index) {
        rep.claim6.checked = true;
        rep.claim6.pass = true;
        const VertexSet& z = d.big_components[static_cast<std::size_t>(*d.z_index)];
        std::mt19937_64 rng(opt.seed);
        for (int a : r) {
            VertexSet far = z - g.neighbors(a);
            std::vector<int> universe = far.to_vector();
            std::vector<VertexSet> ys;
            if (static_cast<int>(universe.size()) <= opt.exhaustive_universe_limit) {
                ys = detail::connected_subsets(g, universe);
            } else {
                for (const auto& y : detail::connected_subsets(g, universe))
                    if (y.count() <= opt.y_size_cap) ys.push_back(y);
                for (int s = 0; s < opt.random_y_samples; ++s) {
                    // random connected subset grown from a random start
                    int start = universe[rng() % universe.size()];
                    VertexSet y(n);
                    y.set(start);
                    int target = 1 + static_cast<int>(rng() % universe.size());
                    while (y.count() < target) {
                        VertexSet frontier(n);
                        y.for_each([&](int v) {
                            g.for_each_neighbor(v, [&](int u) {
                                if (far.test(u) && !y.test(u)) frontier.set(u);
                            });
                        });
                        if (frontier.empty()) break;
                        std::vector<int> f = frontier.to_vector();
                        y.set(f[rng() % f.size()]);
                    }
                    ys.push_back(std::move(y));
                }
            }
            for (const auto& y : ys) {
                bool found = false;
                z.for_each([&](int cand) {
                    if (found || y.test(cand)) return;
                    if (!g.adjacent(cand, a)) return;
                    bool dominates = true;
                    y.for_each([&](int u) {
                        if (!g.adjacent(cand, u)) dominates = false;
                    });
                    if (dominates) found = true;
                });
                if (!found) {
                    rep.claim6.pass = false;
                    rep.claim6.witness = "a=" + std::to_string(a) + " Y=" + y.to_string() +
                                         " has no dominating z in Z";
                    break;
                }
            }
            if (!rep.claim6.pass) break;
        }
    }
    return rep;
}

} // namespace bperf
