#pragma once

#include "murlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace murlab {

/// Malformed graph input; `offset` is the byte (graph6) or line (edge list)
/// where decoding failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 token (optionally preceded by the ">>graph6<<" header).
/// Trailing whitespace is ignored; padding bits must be zero.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

    auto take = [&](std::size_t at) -> int {
        if (at >= end) throw ParseError("graph6: unexpected end of input", at);
        const int c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character", at);
        return c - 63;
    };

    if (pos >= end) throw ParseError("graph6: empty input", pos);
    long n = take(pos);
    std::size_t at = pos + 1;
    if (n == 63) {
        if (at < end && text[at] == '~') throw ParseError("graph6: orders above 258047 are not supported", at);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | take(at++);
    }
    if (static_cast<std::size_t>(n) > kMaxDimension)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds maximum " + std::to_string(kMaxDimension), pos);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (end - at != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                             std::to_string(end - at),
                         end < at + bytes ? end : at + bytes);

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = take(at + k / 6);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (k % 6 != 0) {
        const int byte = take(at + k / 6);
        if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", at + k / 6);
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

/// Edge-list text: one "u v" pair per line, 0-indexed. Blank lines and lines
/// starting with '#' are skipped; an optional "n N" line fixes the order
/// (otherwise it is one more than the largest vertex index).
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long order = -1;
    long max_vertex = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (first == "n") {
            if (!(ls >> order) || order < 0) throw ParseError("edge list: malformed order line", lineno);
            continue;
        }
        long u = 0, v = 0;
        try {
            std::size_t used = 0;
            u = std::stol(first, &used);
            if (used != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw ParseError("edge list: expected vertex index", lineno);
        }
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) throw ParseError("edge list: expected exactly two vertex indices", lineno);
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex index", lineno);
        if (u == v) throw ParseError("edge list: loop edge", lineno);
        max_vertex = std::max({max_vertex, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (order < 0) order = max_vertex + 1;
    if (max_vertex >= order) throw ParseError("edge list: vertex index exceeds declared order", lineno);
    if (static_cast<std::size_t>(order) > kMaxDimension) throw ParseError("edge list: order exceeds maximum", lineno);
    return Graph(static_cast<int>(order), edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace murlab
