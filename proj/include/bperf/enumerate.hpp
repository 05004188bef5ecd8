#pragma once

// Isomorph-free exhaustive generation of small graphs: each n-vertex class
// is reached by adding one vertex to an (n-1)-vertex representative, with
// canonical-certificate rejection. A hereditary filter (chordal, F-free,
// C4-free, ...) may prune at every level; that stays exhaustive for the
// filtered class because such classes are closed under vertex deletion.

#include "bperf/canonical.hpp"
#include "bperf/graph.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace bperf {

inline constexpr int kEnumeratePlainBudget = 8;
inline constexpr int kEnumerateFilteredBudget = 12;

/// One canonical representative per isomorphism class of graphs that pass
/// the hereditary predicate, ascending n from 1 to max_n.
inline void enumerate_graphs_filtered(int max_n,
                                      const std::function<bool(const Graph&)>& hereditary_keep,
                                      const std::function<void(const Graph&)>& sink) {
    if (max_n < 0) throw std::invalid_argument("enumerate: negative max_n");
    if (max_n > kEnumerateFilteredBudget)
        throw std::invalid_argument("enumerate: max_n " + std::to_string(max_n) +
                                    " over filtered budget " +
                                    std::to_string(kEnumerateFilteredBudget));
    std::vector<Graph> current;
    {
        Graph k1 = Graph::from_edge_list(1, {});
        if (max_n >= 1 && hereditary_keep(k1)) {
            sink(k1);
            current.push_back(std::move(k1));
        }
    }
    for (int n = 2; n <= max_n; ++n) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& parent : current) {
            std::vector<std::pair<int, int>> base = parent.edges();
            const std::uint64_t masks = std::uint64_t{1} << (n - 1);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                std::vector<std::pair<int, int>> edges = base;
                for (int u = 0; u < n - 1; ++u)
                    if ((mask >> u) & 1) edges.emplace_back(u, n - 1);
                Graph child = Graph::from_edge_list(n, edges);
                if (!hereditary_keep(child)) continue;
                std::string cert = canonical_certificate(child);
                if (!seen.insert(std::move(cert)).second) continue;
                Graph canon = canonical_form(child);
                sink(canon);
                next.push_back(std::move(canon));
            }
        }
        current = std::move(next);
    }
}

/// One representative per isomorphism class, all graphs, ascending n.
/// The unfiltered generator is budgeted at n <= 8 (12346 classes at n=8);
/// larger corpora come from external graph6 files.
inline void enumerate_graphs(int max_n, const std::function<void(const Graph&)>& sink) {
    if (max_n > kEnumeratePlainBudget)
        throw std::invalid_argument("enumerate: max_n " + std::to_string(max_n) +
                                    " over builtin budget " + std::to_string(kEnumeratePlainBudget));
    enumerate_graphs_filtered(max_n, [](const Graph&) { return true; }, sink);
}

inline std::vector<Graph> enumerate_all(int max_n) {
    std::vector<Graph> out;
    enumerate_graphs(max_n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace bperf
