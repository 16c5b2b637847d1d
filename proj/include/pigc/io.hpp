#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pigc/graph.hpp"

namespace pigc {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line) {
    if (tok.empty()) throw InputError("line " + std::to_string(line) + ": expected an integer");
    std::size_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw InputError("line " + std::to_string(line) + ": not a non-negative integer: '" + std::string(tok) +
                             "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace detail

/// Parses the edge-list format (`# comment`, `<n>`, then `u v` per line,
/// 0-indexed) or DIMACS (`c` comments, `p edge n m`, `e u v` 1-indexed). The
/// format is chosen by whether the first non-comment line starts with "p ".
inline Graph parse_graph(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        auto line = detail::trim(text.substr(pos, nl - pos));
        if (!line.empty() && line.front() != '#') lines.emplace_back(line, lineno);
        pos = nl + 1;
    }
    if (lines.empty()) throw InputError("no vertex count found");

    bool dimacs = false;
    for (auto [line, no] : lines) {
        if (line.front() == 'c') continue;
        dimacs = line.starts_with("p ") || line.starts_with("p\t");
        break;
    }
    std::vector<Edge> edges;
    std::size_t n = 0;
    if (dimacs) {
        bool have_header = false;
        for (auto [line, no] : lines) {
            if (line.front() == 'c') continue;
            auto tok = detail::split_ws(line);
            if (tok[0] == "p") {
                if (have_header) throw InputError("line " + std::to_string(no) + ": duplicate problem line");
                if (tok.size() != 4) throw InputError("line " + std::to_string(no) + ": expected 'p edge n m'");
                n = detail::parse_count(tok[2], no);
                (void)detail::parse_count(tok[3], no);
                have_header = true;
            } else if (tok[0] == "e") {
                if (!have_header) throw InputError("line " + std::to_string(no) + ": edge before problem line");
                if (tok.size() != 3) throw InputError("line " + std::to_string(no) + ": expected 'e u v'");
                const auto u = detail::parse_count(tok[1], no);
                const auto v = detail::parse_count(tok[2], no);
                if (u == 0 || v == 0 || u > n || v > n)
                    throw InputError("line " + std::to_string(no) + ": DIMACS vertex out of range 1.." +
                                     std::to_string(n));
                if (u == v) throw InputError("line " + std::to_string(no) + ": self-loop");
                edges.emplace_back(u - 1, v - 1);
            } else {
                throw InputError("line " + std::to_string(no) + ": unknown DIMACS record '" + std::string(tok[0]) +
                                 "'");
            }
        }
    } else {
        auto head = detail::split_ws(lines.front().first);
        if (head.size() != 1) throw InputError("line " + std::to_string(lines.front().second) + ": expected <n>");
        n = detail::parse_count(head[0], lines.front().second);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto [line, no] = lines[i];
            auto tok = detail::split_ws(line);
            if (tok.size() != 2) throw InputError("line " + std::to_string(no) + ": expected 'u v'");
            const auto u = detail::parse_count(tok[0], no);
            const auto v = detail::parse_count(tok[1], no);
            if (u >= n || v >= n)
                throw InputError("line " + std::to_string(no) + ": vertex out of range 0.." +
                                 std::to_string(n == 0 ? 0 : n - 1));
            if (u == v) throw InputError("line " + std::to_string(no) + ": self-loop");
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::span<const Edge>(edges));
}

/// Edge-list format, edges in lexicographic order.
inline std::string serialize(const Graph& g) {
    std::ostringstream os;
    os << g.size() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << serialize(g);
}

/// FNV-1a over the canonical serialization.
inline std::uint64_t graph_digest(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : serialize(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace pigc
