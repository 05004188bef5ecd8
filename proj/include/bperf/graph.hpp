#pragma once

// Immutable simple undirected graphs over dense vertex indices 0..n-1,
// with adjacency stored as fixed-width bit rows. All set algebra used by
// the solvers runs on these bit vectors.

#include <cstdint>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bperf {

namespace detail {

inline int popcount64(std::uint64_t x) {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_popcountll(x);
#else
    int c = 0;
    while (x) { x &= x - 1; ++c; }
    return c;
#endif
}

inline int ctz64(std::uint64_t x) {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_ctzll(x);
#else
    int c = 0;
    while (!(x & 1)) { x >>= 1; ++c; }
    return c;
#endif
}

inline int words_for(int n) { return (n + 63) / 64; }

} // namespace detail

/// Subset of the vertices {0,...,n-1} of a host graph, packed 64 per word.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), w_(detail::words_for(universe), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) { w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += detail::popcount64(x);
        return c;
    }

    bool empty() const {
        for (std::uint64_t x : w_) if (x) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    /// Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + detail::ctz64(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(static_cast<int>(i * 64) + detail::ctz64(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        });
        s += "}";
        return s;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Immutable simple undirected graph. Adjacency is symmetric and
/// irreflexive by construction; all operations are pure.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range for n=" +
                                            std::to_string(n));
            if (u == v)
                throw std::invalid_argument("graph: self-loop (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") rejected");
            g.set_edge_internal(u, v);
        }
        return g;
    }

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const {
        return (bits_[row_index(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        int d = 0;
        for (int i = 0; i < words_; ++i)
            d += detail::popcount64(bits_[row_index(v) + static_cast<std::size_t>(i)]);
        return d;
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    VertexSet neighbors(int v) const {
        VertexSet s(n_);
        for_each_neighbor(v, [&](int u) { s.set(u); });
        return s;
    }

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        for (int i = 0; i < words_; ++i) {
            std::uint64_t x = bits_[row_index(v) + static_cast<std::size_t>(i)];
            while (x) {
                f(i * 64 + detail::ctz64(x));
                x &= x - 1;
            }
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    /// True when all rows fit one machine word (n <= 64).
    bool fits_word() const { return n_ <= 64; }

    /// Single-word adjacency row; only valid when fits_word().
    std::uint64_t row64(int v) const { return words_ ? bits_[row_index(v)] : 0; }

    /// All single-word rows at once, for the search kernels.
    std::vector<std::uint64_t> rows64() const {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) rows[static_cast<std::size_t>(v)] = row64(v);
        return rows;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    explicit Graph(int n)
        : n_(n), words_(detail::words_for(n)),
          bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(detail::words_for(n)), 0) {}

    std::size_t row_index(int v) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
    }

    void set_edge_internal(int u, int v) {
        bits_[row_index(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[row_index(v) + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Result of taking the subgraph induced by a vertex set: the new graph
/// plus the index maps in both directions.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;  // new index -> old index
    std::vector<int> to_new;  // old index -> new index, -1 outside
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    InducedSubgraph out;
    out.to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    s.for_each([&](int v) {
        out.to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.to_old.size());
        out.to_old.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < out.to_old.size(); ++i)
        for (std::size_t j = i + 1; j < out.to_old.size(); ++j)
            if (g.adjacent(out.to_old[i], out.to_old[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.graph = Graph::from_edge_list(static_cast<int>(out.to_old.size()), edges);
    return out;
}

/// Partition of V(G) into maximal connected components; a component is
/// "big" when it has at least two vertices.
struct ComponentPartition {
    std::vector<VertexSet> components;
    std::vector<bool> big_flags;

    int big_count() const {
        int c = 0;
        for (bool b : big_flags) c += b ? 1 : 0;
        return c;
    }
};

inline ComponentPartition components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentPartition part;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        VertexSet comp(n);
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            g.for_each_neighbor(v, [&](int u) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
            });
        }
        part.big_flags.push_back(comp.count() >= 2);
        part.components.push_back(std::move(comp));
    }
    return part;
}

/// Connected components restricted to an induced vertex subset.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& inside) {
    std::vector<VertexSet> out;
    VertexSet todo = inside;
    while (!todo.empty()) {
        int start = todo.first();
        VertexSet comp(g.vertex_count());
        std::vector<int> stack{start};
        todo.reset(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            g.for_each_neighbor(v, [&](int u) {
                if (todo.test(u)) {
                    todo.reset(u);
                    stack.push_back(u);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Twins: every vertex outside {x,y} adjacent to either is adjacent to
/// both. Twins may be adjacent or not.
inline bool are_twins(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("are_twins: x and y must differ");
    VertexSet nx = g.neighbors(x);
    VertexSet ny = g.neighbors(y);
    nx.reset(x); nx.reset(y);
    ny.reset(x); ny.reset(y);
    return nx == ny;
}

/// A vertex whose neighbourhood induces a clique.
inline bool is_simplicial(const Graph& g, int v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    std::vector<int> v = s.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!g.adjacent(v[i], v[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
// '#' starts a comment anywhere on a line.

inline Graph read_edge_list(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (!blank) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::invalid_argument("edge list: missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: bad header line \"" + line + "\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v))
            throw std::invalid_argument("edge list: bad edge line \"" + line + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto e = g.edges();
    out << g.vertex_count() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

} // namespace bperf
