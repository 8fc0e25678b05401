#pragma once

#include "graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace indsat {

// canonical ascii encoding: size header then the upper triangle column-major,
// packed big-endian into 6-bit groups offset by 63
inline std::string emit_graph6(const Graph& g) {
    if (g.n > 258047) throw std::invalid_argument("graph too large for short size header");
    std::string out;
    if (g.n <= 62) {
        out.push_back((char)(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back((char)(((g.n >> 12) & 63) + 63));
        out.push_back((char)(((g.n >> 6) & 63) + 63));
        out.push_back((char)((g.n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back((char)((acc << (6 - nb)) + 63));
    return out;
}

inline Graph parse_graph6(const std::string& s) {
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    size_t pos = 0;
    long n;
    if (s.empty()) throw std::invalid_argument("graph6: empty");
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') throw std::invalid_argument("graph6: size over 258047 unsupported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size header");
        n = ((long)(s[1] - 63) << 12) | ((long)(s[2] - 63) << 6) | (long)(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 0 || n > 258047) throw std::invalid_argument("graph6: bad size");
    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if ((long)(s.size() - pos) != need) throw std::invalid_argument("graph6: wrong body length");
    Graph g((int)n);
    long bi = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row, ++bi) {
            int group = s[pos + bi / 6] - 63;
            if ((group >> (5 - bi % 6)) & 1) g.add_edge(row, col);
        }
    // padding bits must be zero
    for (long b = bits; b < need * 6; ++b) {
        int group = s[pos + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

// "n:a-b,c-d,..." explicit edge list; ":" after the order, "" edge part allowed
inline Graph parse_edge_list(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("edge list: missing ':'");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("edge list: bad vertex count");
    }
    if (n < 0) throw std::invalid_argument("edge list: negative order");
    Graph g(n);
    size_t pos = colon + 1;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("edge list: token lacks '-'");
        int u, v;
        try {
            u = std::stoi(tok.substr(0, dash));
            v = std::stoi(tok.substr(dash + 1));
        } catch (...) {
            throw std::invalid_argument("edge list: bad endpoint");
        }
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("edge list: endpoint out of range");
        g.add_edge(u, v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return g;
}

// one graph6 string per line; '#' comments and blank lines skipped
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace indsat
