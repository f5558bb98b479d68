#pragma once

#include <string>

#include "core.hpp"

namespace cyclespec {

// graph6: line-oriented text encoding of undirected graphs. The header byte
// is n+63 for n <= 62; the upper triangle follows column-wise, 6 bits per
// byte, each byte offset by 63. Only the short form (n <= 62) is supported.

inline GeneralGraph graph6_decode(const std::string& line) {
    if (line.empty()) throw Error("graph6: empty line");
    size_t pos = 0;
    // Optional ">>graph6<<" prefix produced by some tools.
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= line.size()) throw Error("graph6: missing header byte");
    unsigned char h = static_cast<unsigned char>(line[pos]);
    if (h == 126) throw Error("graph6: extended size header (n > 62) not supported");
    if (h < 63 || h > 125) throw Error("graph6: bad header byte");
    int n = h - 63;
    ++pos;
    if (n == 0) throw Error("graph6: n = 0");

    GeneralGraph g(n);
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long bit = 0;
    unsigned char cur = 0;
    int have = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            if (have == 0) {
                if (pos >= line.size()) throw Error("graph6: truncated edge data");
                cur = static_cast<unsigned char>(line[pos++]);
                if (cur < 63 || cur > 126) throw Error("graph6: bad data byte");
                cur -= 63;
                have = 6;
            }
            if (cur & (1u << (have - 1))) g.add_edge(i, j);
            --have;
            ++bit;
        }
    }
    (void)bits_needed;
    // Trailing padding bytes beyond the triangle are tolerated only if they
    // belong to the final partial group, which the loop above consumed.
    if (pos != line.size()) throw Error("graph6: trailing bytes after edge data");
    return g;
}

inline std::string graph6_encode(const GeneralGraph& g) {
    if (g.n < 1 || g.n > 62) throw Error("graph6: only 1 <= n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    unsigned char cur = 0;
    int have = 0;
    for (int j = 2; j <= g.n; ++j) {
        for (int i = 1; i < j; ++i) {
            cur = static_cast<unsigned char>(cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
    return out;
}

}  // namespace cyclespec
