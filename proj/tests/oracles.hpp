#pragma once

// Independent brute-force oracles for the test and acceptance suites.
// These deliberately avoid the library's search paths: set partitions for
// coloring numbers, subset sweeps for holes, permutation enumeration for
// isomorphism. Slow and obviously correct.

#include "bperf/coloring.hpp"
#include "bperf/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace oracles {

using bperf::Coloring;
using bperf::Graph;
using bperf::VertexSet;

/// All set partitions of {0..n-1} as restricted growth strings.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int maxc) -> void {
        if (i == n) {
            f(a, maxc + 1);
            return;
        }
        for (int c = 0; c <= maxc + 1; ++c) {
            a[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, std::max(maxc, c));
        }
    };
    if (n == 0) return;
    rec(rec, 1, 0);  // a[0] = 0 fixed
}

inline bool partition_proper(const Graph& g, const std::vector<int>& part) {
    for (auto [u, v] : g.edges())
        if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) return false;
    return true;
}

/// Minimum class count over proper partitions.
inline int brute_chi(const Graph& g) {
    int best = g.vertex_count();
    for_each_partition(g.vertex_count(), [&](const std::vector<int>& part, int k) {
        if (k < best && partition_proper(g, part)) best = k;
    });
    return g.vertex_count() == 0 ? 0 : best;
}

/// Maximum class count over all colorings accepted as b-colorings by
/// validate_coloring. Colorings are enumerated as set partitions; b only
/// depends on the partition.
inline int brute_b(const Graph& g) {
    int best = 0;
    for_each_partition(g.vertex_count(), [&](const std::vector<int>& part, int k) {
        if (k <= best || !partition_proper(g, part)) return;
        Coloring c;
        c.k = k;
        c.color.reserve(part.size());
        for (int x : part) c.color.push_back(x + 1);
        bperf::BAnalysis a = bperf::validate_coloring(g, c);
        if (a.proper() && a.is_b_coloring) best = k;
    });
    return best;
}

/// Chordality by subset sweep: no vertex subset of size >= 4 induces a
/// single chordless cycle.
inline bool brute_chordal(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        if (vs.size() < 4) continue;
        bool cycle = true;
        int edges = 0;
        for (std::size_t i = 0; i < vs.size() && cycle; ++i) {
            int deg = 0;
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (i != j && g.adjacent(vs[i], vs[j])) ++deg;
            if (deg != 2) cycle = false;
            edges += deg;
        }
        if (!cycle || edges != 2 * static_cast<int>(vs.size())) continue;
        // 2-regular: a disjoint union of cycles; connected means one cycle
        VertexSet sub(n);
        for (int v : vs) sub.set(v);
        if (bperf::components_within(g, sub).size() == 1) return false;
    }
    return true;
}

/// Minimal adjacency bit string over all vertex permutations.
inline std::string perm_min_certificate(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.adjacent(perm[static_cast<std::size_t>(i)],
                                          perm[static_cast<std::size_t>(j)])
                                   ? '1'
                                   : '0');
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

/// Induced containment by subset + permutation enumeration.
inline bool brute_contains_induced(const Graph& host, const Graph& pattern) {
    const int hn = host.vertex_count();
    const int pn = pattern.vertex_count();
    if (pn > hn) return false;
    std::vector<int> subset;
    auto try_subset = [&](const std::vector<int>& vs) -> bool {
        std::vector<int> perm(vs.begin(), vs.end());
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (int i = 0; i < pn && ok; ++i)
                for (int j = i + 1; j < pn && ok; ++j)
                    if (pattern.adjacent(i, j) !=
                        host.adjacent(perm[static_cast<std::size_t>(i)],
                                      perm[static_cast<std::size_t>(j)]))
                        ok = false;
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    bool found = false;
    auto rec = [&](auto&& self, int from) -> void {
        if (found) return;
        if (static_cast<int>(subset.size()) == pn) {
            if (try_subset(subset)) found = true;
            return;
        }
        for (int v = from; v < hn && !found; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

/// All labeled graphs on n vertices, by edge mask.
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(pairs[i]);
        f(Graph::from_edge_list(n, edges));
    }
}

} // namespace oracles
