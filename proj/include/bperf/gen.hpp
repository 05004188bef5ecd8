#pragma once

// Random graph models for the verification campaigns: plain G(n,p),
// incremental chordal graphs, chordal F-free hosts with a 2K2 (claims
// suite), and F-free C4-free hosts with a C5 (reduction suite). The
// structured generators are rejection-sampled against the real predicates.

#include "bperf/chordal.hpp"
#include "bperf/graph.hpp"
#include "bperf/patterns.hpp"
#include "bperf/proof_structure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace bperf {

using Rng = std::mt19937_64;

inline Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// Chordal by construction: each new vertex's neighbourhood is a clique of
/// the current graph (the insertion order reversed is a PEO).
inline Graph random_chordal(int n, Rng& rng, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) {
        if (!keep(rng)) continue;  // occasionally isolated-at-birth
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        std::vector<int> clique{anchor};
        std::vector<int> cand = adj[static_cast<std::size_t>(anchor)];
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int u : cand) {
            if (!keep(rng)) continue;
            bool ok = true;
            for (int w : clique)
                if (u != w && std::find(adj[static_cast<std::size_t>(u)].begin(),
                                        adj[static_cast<std::size_t>(u)].end(),
                                        w) == adj[static_cast<std::size_t>(u)].end())
                    ok = false;
            if (ok) clique.push_back(u);
        }
        for (int u : clique) {
            edges.emplace_back(u, v);
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    return Graph::from_edge_list(n, edges);
}

struct ClaimsHostOptions {
    int min_n = 6;
    int max_n = 14;
    int max_attempts = 100000;
};

/// A chordal F-free graph containing a 2K2: a few clique-core clusters with
/// simplicial satellites, optional universal apexes, rejection-checked
/// against F1..F9 and the 2K2 requirement.
inline Graph random_chordal_ffree_with_2k2(Rng& rng, const ClaimsHostOptions& opt = {}) {
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        int n = 0;
        int parts = 2 + static_cast<int>(rng() % 2);
        for (int p = 0; p < parts; ++p) {
            int q = 1 + static_cast<int>(rng() % 3);
            int base = n;
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j) edges.emplace_back(base + i, base + j);
            n += q;
            int sats = static_cast<int>(rng() % 3);
            for (int s = 0; s < sats; ++s) {
                std::uint64_t mask = 1 + (rng() % ((std::uint64_t{1} << q) - 1));
                for (int i = 0; i < q; ++i)
                    if ((mask >> i) & 1) edges.emplace_back(base + i, n);
                ++n;
            }
        }
        int apexes = static_cast<int>(rng() % 3);
        for (int a = 0; a < apexes; ++a) {
            for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
            ++n;
        }
        if (n < opt.min_n || n > opt.max_n) continue;
        Graph g = Graph::from_edge_list(n, edges);
        if (!is_chordal(g).chordal()) continue;  // holds by construction
        if (!find_2K2(g)) continue;
        if (scan_family(g, chordal_f_names())) continue;
        return g;
    }
    throw std::runtime_error("random_chordal_ffree_with_2k2: no host found within attempts");
}

struct C5HostOptions {
    int max_n = 12;
    int max_attempts = 100000;
};

/// An F-free C4-free graph with at least one C5: the cycle, an X-clique
/// joined to all of it, satellites on X and an optional far clique,
/// rejection-checked against the full family and C4.
inline Graph random_c5_host(Rng& rng, const C5HostOptions& opt = {}) {
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
        int n = 5;
        int xsize = static_cast<int>(rng() % 4);
        std::vector<int> xs;
        for (int i = 0; i < xsize; ++i) {
            for (int z = 0; z < 5; ++z) edges.emplace_back(z, n);
            for (int x : xs) edges.emplace_back(x, n);
            xs.push_back(n);
            ++n;
        }
        int sats = xsize ? static_cast<int>(rng() % 4) : 0;
        std::vector<int> sat;
        for (int s = 0; s < sats; ++s) {
            std::uint64_t mask = 1 + (rng() % ((std::uint64_t{1} << xs.size()) - 1));
            for (std::size_t i = 0; i < xs.size(); ++i)
                if ((mask >> i) & 1) edges.emplace_back(xs[i], n);
            for (int t : sat)
                if (rng() % 2) edges.emplace_back(t, n);
            sat.push_back(n);
            ++n;
        }
        if (rng() % 3 == 0) {
            int q = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j) edges.emplace_back(n + i, n + j);
            n += q;
        }
        if (n > opt.max_n) continue;
        Graph g = Graph::from_edge_list(n, edges);
        if (find_induced(g, pattern_by_name("C4"))) continue;
        if (scan_family(g, all_f_names())) continue;
        return g;
    }
    throw std::runtime_error("random_c5_host: no host found within attempts");
}

} // namespace bperf
