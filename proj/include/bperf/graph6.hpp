#pragma once

// graph6 text encoding: header byte n+63 for n <= 62, '~' + 3 bytes for
// 63 <= n <= 258047, then the upper-triangle adjacency bits in column order
// (0,1),(0,2),(1,2),(0,3),... packed 6 per byte MSB-first, each byte + 63.

#include "bperf/graph.hpp"

#include <string>
#include <string_view>

namespace bperf {

enum class graph6_errc {
    bad_header,
    truncated_payload,
    byte_out_of_range,
    trailing_data,
};

class graph6_error : public std::runtime_error {
public:
    graph6_error(graph6_errc kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    graph6_errc kind() const { return kind_; }

private:
    graph6_errc kind_;
};

namespace detail {

inline void check_g6_byte(char c, std::size_t pos) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw graph6_error(graph6_errc::byte_out_of_range,
                           "graph6: byte " + std::to_string(static_cast<int>(u)) +
                           " at position " + std::to_string(pos) + " outside [63,126]");
}

} // namespace detail

inline Graph parse_graph6(std::string_view line) {
    if (line.empty())
        throw graph6_error(graph6_errc::bad_header, "graph6: empty line");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw graph6_error(graph6_errc::bad_header,
                               "graph6: 8-byte header (n > 258047) not supported");
        if (line.size() < 4)
            throw graph6_error(graph6_errc::bad_header, "graph6: truncated long header");
        for (std::size_t i = 1; i <= 3; ++i) detail::check_g6_byte(line[i], i);
        n = (static_cast<long long>(line[1] - 63) << 12) |
            (static_cast<long long>(line[2] - 63) << 6) |
            static_cast<long long>(line[3] - 63);
        if (n < 63)
            throw graph6_error(graph6_errc::bad_header,
                               "graph6: long header used for n=" + std::to_string(n));
        pos = 4;
    } else {
        detail::check_g6_byte(line[0], 0);
        n = line[0] - 63;
        if (n > 62)
            throw graph6_error(graph6_errc::bad_header, "graph6: bad short header byte");
        pos = 1;
    }

    const long long pairs = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((pairs + 5) / 6);
    if (line.size() - pos < payload)
        throw graph6_error(graph6_errc::truncated_payload,
                           "graph6: payload needs " + std::to_string(payload) +
                           " bytes, found " + std::to_string(line.size() - pos));
    if (line.size() - pos > payload)
        throw graph6_error(graph6_errc::trailing_data,
                           "graph6: trailing data after payload");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int i = 0, j = 1;
    for (std::size_t b = 0; b < payload; ++b) {
        detail::check_g6_byte(line[pos + b], pos + b);
        int chunk = line[pos + b] - 63;
        for (int s = 5; s >= 0 && bit < pairs; --s, ++bit) {
            if ((chunk >> s) & 1) edges.emplace_back(i, j);
            if (++i == j) { i = 0; ++j; }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > 258047)
        throw graph6_error(graph6_errc::bad_header,
                           "graph6: n > 258047 not supported by this encoder");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        chunk <<= (6 - filled);
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

} // namespace bperf
