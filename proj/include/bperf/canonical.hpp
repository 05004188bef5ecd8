#pragma once

// Canonical labeling of small graphs by individualization-refinement with
// certificate-prefix pruning. Used for isomorph rejection in the enumerator
// and for memoizing solved subgraphs by isomorphism class.

#include "bperf/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bperf {

namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::string best;             // empty until the first leaf
    std::vector<int> best_perm;   // new position -> old vertex

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // Order-preserving equitable refinement: cells only subdivide in place,
    // so the leading singleton run is stable down the search tree.
    void refine(std::vector<std::vector<int>>& cells) const {
        std::vector<int> cell_of(static_cast<std::size_t>(n), 0);
        for (;;) {
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (int v : cells[ci]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
            std::vector<std::vector<int>> next;
            for (auto& cell : cells) {
                if (cell.size() <= 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    g.for_each_neighbor(v, [&](int u) {
                        ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
                    });
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> group{keyed.front().second};
                for (std::size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                    }
                    group.push_back(keyed[i].second);
                }
                next.push_back(std::move(group));
            }
            bool split = next.size() != cells.size();
            cells = std::move(next);
            if (!split) break;
        }
    }

    // Upper-triangle bits in column order over the first t placed vertices;
    // pairs among a prefix of vertices form a prefix of the certificate.
    std::string partial_bits(const std::vector<int>& placed) const {
        std::string bits;
        bits.reserve(placed.size() * placed.size() / 2);
        for (std::size_t j = 1; j < placed.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                bits.push_back(g.adjacent(placed[i], placed[j]) ? '1' : '0');
        return bits;
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        std::vector<int> placed;
        for (const auto& cell : cells) {
            if (cell.size() != 1) break;
            placed.push_back(cell.front());
        }
        std::string partial = partial_bits(placed);
        if (!best.empty()) {
            int cmp = partial.compare(0, partial.size(), best, 0, partial.size());
            if (cmp > 0) return;  // every leaf below starts with this prefix
        }
        if (static_cast<int>(placed.size()) == n) {
            if (best.empty() || partial < best) {
                best = partial;
                best_perm = placed;
            }
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1) ++target;
        std::vector<int> tried;
        for (int v : cells[target]) {
            // transposing two twins in one cell maps the branches onto each
            // other, so one representative suffices
            bool dup = false;
            for (int u : tried) {
                VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
                nu.reset(u); nu.reset(v);
                nv.reset(u); nv.reset(v);
                if (nu == nv) { dup = true; break; }
            }
            if (dup) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < target; ++i) child.push_back(cells[i]);
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (std::size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            search(std::move(child));
        }
    }
};

} // namespace detail

/// Canonical labeling: perm[new_index] = old vertex.
inline std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    detail::CanonSearch s(g);
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    s.search(std::move(cells));
    return s.best_perm;
}

/// Isomorphism-class key: vertex count plus the canonical adjacency bits.
inline std::string canonical_certificate(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    const int n = g.vertex_count();
    std::string out = std::to_string(n);
    out.push_back(':');
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) |
                    (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

/// The canonically relabeled copy of g.
inline Graph canonical_form(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return Graph::from_edge_list(n, edges);
}

} // namespace bperf
