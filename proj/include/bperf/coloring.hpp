#pragma once

// Exact chromatic number, b-coloring validation and exact b-chromatic
// number with witness colorings. Designed for the exhaustive small-graph
// searches: chi_exact for n <= 32, exists_b_coloring for n around 20.

#include "bperf/graph.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bperf {

/// Total map vertex -> color in {1..k}; every color class non-empty.
struct Coloring {
    int k = 0;
    std::vector<int> color;
};

struct SolveLimits {
    std::optional<std::chrono::milliseconds> time_limit;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(const SolveLimits& limits) {
        if (limits.time_limit)
            at_ = std::chrono::steady_clock::now() + *limits.time_limit;
    }
    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

} // namespace detail

/// Per-color b-vertex analysis of a proper coloring; improper colorings
/// report the violating edge instead.
struct BAnalysis {
    std::optional<std::pair<int, int>> improper_edge;
    std::vector<VertexSet> b_vertices_per_color;  // index = color - 1
    bool is_b_coloring = false;

    bool proper() const { return !improper_edge.has_value(); }
};

inline BAnalysis validate_coloring(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n)
        throw std::invalid_argument("validate_coloring: coloring does not assign all vertices");
    if (c.k < 0 || (n > 0 && c.k < 1))
        throw std::invalid_argument("validate_coloring: bad color count");
    std::vector<int> class_size(static_cast<std::size_t>(c.k), 0);
    for (int v = 0; v < n; ++v) {
        int col = c.color[static_cast<std::size_t>(v)];
        if (col < 1 || col > c.k)
            throw std::invalid_argument("validate_coloring: color " + std::to_string(col) +
                                        " of vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(c.k));
        ++class_size[static_cast<std::size_t>(col - 1)];
    }
    for (int i = 0; i < c.k; ++i)
        if (class_size[static_cast<std::size_t>(i)] == 0)
            throw std::invalid_argument("validate_coloring: color class " + std::to_string(i + 1) +
                                        " is empty");

    BAnalysis out;
    for (int u = 0; u < n; ++u) {
        std::optional<std::pair<int, int>> bad;
        g.for_each_neighbor(u, [&](int v) {
            if (u < v && !bad && c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)])
                bad = std::make_pair(u, v);
        });
        if (bad) { out.improper_edge = bad; return out; }
    }

    out.b_vertices_per_color.assign(static_cast<std::size_t>(c.k), VertexSet(n));
    if (c.k <= 64) {
        const std::uint64_t all =
            (c.k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << c.k) - 1);
        for (int v = 0; v < n; ++v) {
            std::uint64_t seen = 0;
            g.for_each_neighbor(v, [&](int u) {
                seen |= std::uint64_t{1} << (c.color[static_cast<std::size_t>(u)] - 1);
            });
            int col = c.color[static_cast<std::size_t>(v)];
            std::uint64_t needed = all & ~(std::uint64_t{1} << (col - 1));
            if ((seen & needed) == needed)
                out.b_vertices_per_color[static_cast<std::size_t>(col - 1)].set(v);
        }
    } else {
        std::vector<int> seen_at(static_cast<std::size_t>(c.k) + 1, -1);
        for (int v = 0; v < n; ++v) {
            int distinct = 0;
            int col = c.color[static_cast<std::size_t>(v)];
            g.for_each_neighbor(v, [&](int u) {
                int cu = c.color[static_cast<std::size_t>(u)];
                if (cu != col && seen_at[static_cast<std::size_t>(cu)] != v) {
                    seen_at[static_cast<std::size_t>(cu)] = v;
                    ++distinct;
                }
            });
            if (distinct == c.k - 1)
                out.b_vertices_per_color[static_cast<std::size_t>(col - 1)].set(v);
        }
    }
    out.is_b_coloring = true;
    for (const auto& s : out.b_vertices_per_color)
        if (s.empty()) { out.is_b_coloring = false; break; }
    return out;
}

/// Largest k such that g has at least k vertices of degree >= k-1.
/// Standard upper bound b(G) <= m(G).
inline int m_degree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("m_degree: empty graph");
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<int>{});
    int m = 1;
    for (int k = 1; k <= n; ++k)
        if (deg[static_cast<std::size_t>(k - 1)] >= k - 1) m = k;
    return m;
}

enum class SolveStatus { ok, timeout };

struct ChiResult {
    SolveStatus status = SolveStatus::ok;
    int chi = 0;
    Coloring witness;
};

namespace detail {

inline std::vector<int> greedy_clique(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = popcount64(adj[static_cast<std::size_t>(a)]);
        int db = popcount64(adj[static_cast<std::size_t>(b)]);
        return da != db ? da > db : a < b;
    });
    std::vector<int> best;
    for (int start : order) {
        std::vector<int> clique{start};
        std::uint64_t cand = adj[static_cast<std::size_t>(start)];
        while (cand) {
            int pick = -1, pick_deg = -1;
            std::uint64_t x = cand;
            while (x) {
                int v = ctz64(x);
                x &= x - 1;
                int d = popcount64(adj[static_cast<std::size_t>(v)] & cand);
                if (d > pick_deg) { pick_deg = d; pick = v; }
            }
            clique.push_back(pick);
            cand &= adj[static_cast<std::size_t>(pick)];
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

// Backtracking k-colorability with forward checking. colors use bits 0..k-1.
struct KColorSearch {
    const std::vector<std::uint64_t>& adj;
    int n;
    int k;
    std::vector<int> color;            // 0 = unassigned, else 1..k
    std::vector<std::uint64_t> allowed;
    const Deadline& deadline;
    bool timed_out = false;
    std::uint64_t nodes = 0;

    KColorSearch(const std::vector<std::uint64_t>& a, int n_, int k_, const Deadline& d)
        : adj(a), n(n_), k(k_),
          color(static_cast<std::size_t>(n_), 0),
          allowed(static_cast<std::size_t>(n_), (k_ >= 64) ? ~std::uint64_t{0}
                                                           : ((std::uint64_t{1} << k_) - 1)),
          deadline(d) {}

    bool assign_clique(const std::vector<int>& clique) {
        int c = 0;
        for (int v : clique) {
            if (c >= k) break;
            ++c;
            color[static_cast<std::size_t>(v)] = c;
            std::uint64_t bit = std::uint64_t{1} << (c - 1);
            std::uint64_t nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                int u = ctz64(nb);
                nb &= nb - 1;
                allowed[static_cast<std::size_t>(u)] &= ~bit;
            }
        }
        return true;
    }

    bool solve(int colored, int used) {
        if ((nodes++ & 2047) == 0 && deadline.expired()) {
            timed_out = true;
            return false;
        }
        if (colored == n) return true;
        // most-constrained uncolored vertex
        int pick = -1, pick_opts = 65;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)]) continue;
            int opts = popcount64(allowed[static_cast<std::size_t>(v)]);
            if (opts == 0) return false;
            if (opts < pick_opts) { pick_opts = opts; pick = v; }
        }
        std::uint64_t opts = allowed[static_cast<std::size_t>(pick)];
        // colors beyond the first unused one are interchangeable
        int cap = std::min(k, used + 1);
        while (opts) {
            int c = ctz64(opts) + 1;
            opts &= opts - 1;
            if (c > cap) break;
            color[static_cast<std::size_t>(pick)] = c;
            std::uint64_t bit = std::uint64_t{1} << (c - 1);
            std::vector<int> touched;
            bool dead = false;
            std::uint64_t nb = adj[static_cast<std::size_t>(pick)];
            while (nb) {
                int u = ctz64(nb);
                nb &= nb - 1;
                if (!color[static_cast<std::size_t>(u)] && (allowed[static_cast<std::size_t>(u)] & bit)) {
                    allowed[static_cast<std::size_t>(u)] &= ~bit;
                    touched.push_back(u);
                    if (!allowed[static_cast<std::size_t>(u)]) dead = true;
                }
            }
            if (!dead && solve(colored + 1, std::max(used, c))) return true;
            for (int u : touched) allowed[static_cast<std::size_t>(u)] |= bit;
            color[static_cast<std::size_t>(pick)] = 0;
            if (timed_out) return false;
        }
        return false;
    }
};

} // namespace detail

/// Minimum number of colors in a proper coloring, with witness.
inline ChiResult chi_exact(const Graph& g, const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("chi_exact: empty graph");
    if (n > 64) throw std::invalid_argument("chi_exact: exactness budget is n <= 64");
    detail::Deadline deadline(limits);
    auto adj = g.rows64();

    // greedy upper bound along descending degree
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    Coloring greedy;
    greedy.color.assign(static_cast<std::size_t>(n), 0);
    int ub = 0;
    for (int v : order) {
        std::uint64_t used = 0;
        std::uint64_t nb = adj[static_cast<std::size_t>(v)];
        while (nb) {
            int u = detail::ctz64(nb);
            nb &= nb - 1;
            if (greedy.color[static_cast<std::size_t>(u)])
                used |= std::uint64_t{1} << (greedy.color[static_cast<std::size_t>(u)] - 1);
        }
        int c = 1;
        while (used & (std::uint64_t{1} << (c - 1))) ++c;
        greedy.color[static_cast<std::size_t>(v)] = c;
        ub = std::max(ub, c);
    }
    greedy.k = ub;

    std::vector<int> clique = detail::greedy_clique(adj, n);
    int lb = std::max<int>(1, static_cast<int>(clique.size()));

    ChiResult out;
    out.witness = greedy;
    out.chi = ub;
    for (int k = lb; k < ub; ++k) {
        detail::KColorSearch search(adj, n, k, deadline);
        search.assign_clique(clique);
        if (search.solve(std::min<int>(k, static_cast<int>(clique.size())),
                         std::min<int>(k, static_cast<int>(clique.size())))) {
            Coloring w;
            w.k = k;
            w.color = search.color;
            out.chi = k;
            out.witness = w;
            return out;
        }
        if (search.timed_out) {
            out.status = SolveStatus::timeout;
            return out;
        }
    }
    return out;
}

enum class BSearchOutcome { found, none_exists, timeout };

struct BSearchResult {
    BSearchOutcome outcome = BSearchOutcome::none_exists;
    Coloring coloring;  // meaningful when outcome == found
};

namespace detail {

// Search for a proper k-coloring where system[i] is a b-vertex of color i+1.
// System vertices are pre-colored; remaining vertices are assigned with
// forward checking on both properness and the unmet b-vertex demands.
struct BSystemSearch {
    const std::vector<std::uint64_t>& adj;
    int n;
    int k;
    std::vector<int> color;             // 0 unassigned
    std::vector<std::uint64_t> allowed;
    std::vector<std::uint64_t> demand;  // demand[i] = colors u_i still needs to see
    const std::vector<int>& system;
    const Deadline& deadline;
    bool timed_out = false;
    std::uint64_t nodes = 0;

    BSystemSearch(const std::vector<std::uint64_t>& a, int n_, int k_,
                  const std::vector<int>& sys, const Deadline& d)
        : adj(a), n(n_), k(k_),
          color(static_cast<std::size_t>(n_), 0),
          allowed(static_cast<std::size_t>(n_),
                  k_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1),
          demand(static_cast<std::size_t>(k_), 0),
          system(sys), deadline(d) {}

    // Returns false when the system itself is inconsistent.
    bool seed() {
        const std::uint64_t all = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        for (int i = 0; i < k; ++i) {
            int v = system[static_cast<std::size_t>(i)];
            if (color[static_cast<std::size_t>(v)]) return false;  // duplicate vertex
            color[static_cast<std::size_t>(v)] = i + 1;
        }
        for (int i = 0; i < k; ++i) {
            int v = system[static_cast<std::size_t>(i)];
            std::uint64_t bit = std::uint64_t{1} << i;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                int u = ctz64(nb);
                nb &= nb - 1;
                if (color[static_cast<std::size_t>(u)] == i + 1) return false;  // adjacent same color
                if (!color[static_cast<std::size_t>(u)])
                    allowed[static_cast<std::size_t>(u)] &= ~bit;
            }
            demand[static_cast<std::size_t>(i)] = all & ~bit;
        }
        for (int i = 0; i < k; ++i) {
            int v = system[static_cast<std::size_t>(i)];
            std::uint64_t nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                int u = ctz64(nb);
                nb &= nb - 1;
                if (color[static_cast<std::size_t>(u)])
                    demand[static_cast<std::size_t>(i)] &=
                        ~(std::uint64_t{1} << (color[static_cast<std::size_t>(u)] - 1));
            }
        }
        return feasible();
    }

    // Every unmet demand (i, c) must have an uncolored neighbour of u_i that
    // can still take color c.
    bool feasible() const {
        for (int i = 0; i < k; ++i) {
            std::uint64_t need = demand[static_cast<std::size_t>(i)];
            if (!need) continue;
            int v = system[static_cast<std::size_t>(i)];
            std::uint64_t can = 0;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                int u = ctz64(nb);
                nb &= nb - 1;
                if (!color[static_cast<std::size_t>(u)])
                    can |= allowed[static_cast<std::size_t>(u)];
            }
            if (need & ~can) return false;
        }
        return true;
    }

    bool solve(int colored) {
        if ((nodes++ & 2047) == 0 && deadline.expired()) {
            timed_out = true;
            return false;
        }
        if (colored == n) {
            for (int i = 0; i < k; ++i)
                if (demand[static_cast<std::size_t>(i)]) return false;
            return true;
        }
        int pick = -1, pick_opts = 65;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)]) continue;
            int opts = popcount64(allowed[static_cast<std::size_t>(v)]);
            if (opts == 0) return false;
            if (opts < pick_opts) { pick_opts = opts; pick = v; }
        }
        std::uint64_t opts = allowed[static_cast<std::size_t>(pick)];
        // try demand-satisfying colors first
        std::uint64_t urgent = 0;
        for (int i = 0; i < k; ++i)
            if (adj[static_cast<std::size_t>(system[static_cast<std::size_t>(i)])] &
                (std::uint64_t{1} << pick))
                urgent |= demand[static_cast<std::size_t>(i)];
        for (int phase = 0; phase < 2; ++phase) {
            std::uint64_t todo = phase == 0 ? (opts & urgent) : (opts & ~urgent);
            while (todo) {
                int c = ctz64(todo) + 1;
                todo &= todo - 1;
                if (try_color(pick, c, colored)) return true;
                if (timed_out) return false;
            }
        }
        return false;
    }

    bool try_color(int v, int c, int colored) {
        std::uint64_t bit = std::uint64_t{1} << (c - 1);
        color[static_cast<std::size_t>(v)] = c;
        std::vector<int> touched;
        std::vector<int> met;
        bool dead = false;
        std::uint64_t nb = adj[static_cast<std::size_t>(v)];
        while (nb) {
            int u = ctz64(nb);
            nb &= nb - 1;
            if (!color[static_cast<std::size_t>(u)] && (allowed[static_cast<std::size_t>(u)] & bit)) {
                allowed[static_cast<std::size_t>(u)] &= ~bit;
                touched.push_back(u);
                if (!allowed[static_cast<std::size_t>(u)]) dead = true;
            }
        }
        for (int i = 0; i < k; ++i) {
            int s = system[static_cast<std::size_t>(i)];
            if ((adj[static_cast<std::size_t>(s)] & (std::uint64_t{1} << v)) &&
                (demand[static_cast<std::size_t>(i)] & bit)) {
                demand[static_cast<std::size_t>(i)] &= ~bit;
                met.push_back(i);
            }
        }
        if (!dead && feasible() && solve(colored + 1)) return true;
        for (int u : touched) allowed[static_cast<std::size_t>(u)] |= bit;
        for (int i : met) demand[static_cast<std::size_t>(i)] |= bit;
        color[static_cast<std::size_t>(v)] = 0;
        return false;
    }
};

} // namespace detail

/// Search for a b-coloring with exactly k colors where the given vertices
/// (one per color, system[i] colored i+1) are the designated b-vertices.
inline BSearchResult exists_b_coloring_with_system(const Graph& g, int k,
                                                   const std::vector<int>& system,
                                                   const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("exists_b_coloring: k must be >= 1");
    if (static_cast<int>(system.size()) != k)
        throw std::invalid_argument("exists_b_coloring: system must have k vertices");
    if (n > 64) throw std::invalid_argument("exists_b_coloring: budget is n <= 64");
    detail::Deadline deadline(limits);
    auto adj = g.rows64();
    detail::BSystemSearch search(adj, n, k, system, deadline);
    BSearchResult out;
    if (!search.seed()) return out;
    if (search.solve(k)) {
        out.outcome = BSearchOutcome::found;
        out.coloring.k = k;
        out.coloring.color = search.color;
        return out;
    }
    if (search.timed_out) out.outcome = BSearchOutcome::timeout;
    return out;
}

/// A proper coloring with exactly k color classes, each containing a
/// b-vertex, or none-exists. Timeout is reported distinctly.
inline BSearchResult exists_b_coloring(const Graph& g, int k, const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("exists_b_coloring: k must be >= 1");
    if (n > 64) throw std::invalid_argument("exists_b_coloring: budget is n <= 64");
    BSearchResult out;
    if (k > n) return out;
    if (k == 1) {
        if (g.edge_count() != 0) return out;
        out.outcome = BSearchOutcome::found;
        out.coloring.k = 1;
        out.coloring.color.assign(static_cast<std::size_t>(n), 1);
        return out;
    }
    detail::Deadline deadline(limits);
    std::vector<int> eligible;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= k - 1) eligible.push_back(v);
    if (static_cast<int>(eligible.size()) < k) return out;

    // Any b-coloring can be renamed so its per-color b-vertices, listed
    // ascending, carry colors 1..k; enumerating ascending systems is complete.
    auto adj = g.rows64();
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::vector<int> system(static_cast<std::size_t>(k), 0);
    bool timed_out = false;

    auto enumerate = [&](auto&& self, int depth, int from) -> bool {
        if (deadline.expired()) { timed_out = true; return false; }
        if (depth == k) {
            for (int i = 0; i < k; ++i)
                system[static_cast<std::size_t>(i)] =
                    eligible[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            detail::BSystemSearch search(adj, n, k, system, deadline);
            if (search.seed() && search.solve(k)) {
                out.outcome = BSearchOutcome::found;
                out.coloring.k = k;
                out.coloring.color = search.color;
                return true;
            }
            if (search.timed_out) { timed_out = true; return false; }
            return false;
        }
        for (int i = from; i <= static_cast<int>(eligible.size()) - (k - depth); ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            if (self(self, depth + 1, i + 1)) return true;
            if (timed_out) return false;
        }
        return false;
    };
    if (enumerate(enumerate, 0, 0)) return out;
    if (timed_out) out.outcome = BSearchOutcome::timeout;
    return out;
}

struct BChromaticResult {
    SolveStatus status = SolveStatus::ok;
    int b = 0;
    Coloring witness;
};

/// Largest k with a b-coloring of exactly k colors. Candidates are tested
/// independently, descending from m_degree; chi is the guaranteed floor.
inline BChromaticResult b_chromatic(const Graph& g, const SolveLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("b_chromatic: empty graph");
    BChromaticResult out;
    ChiResult chi = chi_exact(g, limits);
    if (chi.status == SolveStatus::timeout) {
        out.status = SolveStatus::timeout;
        return out;
    }
    const int m = m_degree(g);
    for (int k = m; k > chi.chi; --k) {
        BSearchResult r = exists_b_coloring(g, k, limits);
        if (r.outcome == BSearchOutcome::found) {
            out.b = k;
            out.witness = r.coloring;
            return out;
        }
        if (r.outcome == BSearchOutcome::timeout) {
            out.status = SolveStatus::timeout;
            return out;
        }
    }
    // every coloring with chi colors is a b-coloring
    out.b = chi.chi;
    out.witness = chi.witness;
    return out;
}

} // namespace bperf
