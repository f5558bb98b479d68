#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclespec {

// Domain failure (invalid input, refused size, violated precondition).
// The CLI maps these to exit code 1 with a structured error object.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -------------------------------------------------------------------------
// Chords of the implicit Hamilton cycle (1, 2, ..., n, 1).
//
// A chord (a,b) has 1 <= a < b <= n, b >= a+2, and is not the wrap edge
// (1,n). Labels are 1-based everywhere.
// -------------------------------------------------------------------------

struct Chord {
    int a = 0;
    int b = 0;

    friend constexpr auto operator<=>(const Chord&, const Chord&) = default;
};

// Number of interior labels skipped when shortcutting along the chord.
inline int chord_gap(Chord e) { return e.b - e.a - 1; }

inline std::string chord_str(Chord e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

enum class EdgeKind { chord, hamilton, invalid };

// Total classification of a label pair against ambient n: every (a,b) is a
// chord, a Hamilton-cycle edge, or invalid.
inline EdgeKind classify_edge(int a, int b, int n) {
    if (a < 1 || b > n || a >= b) return EdgeKind::invalid;
    if (b == a + 1 || (a == 1 && b == n)) return EdgeKind::hamilton;
    return EdgeKind::chord;
}

inline bool valid_chord(Chord e, int n) {
    return classify_edge(e.a, e.b, n) == EdgeKind::chord;
}

// n vertices on the cycle (1,...,n,1) plus a chord set, kept sorted by (a,b)
// with duplicates collapsed. Immutable after construction.
struct LabelledHamGraph {
    int n = 0;
    std::vector<Chord> chords;

    int edge_count() const { return n + static_cast<int>(chords.size()); }

    bool has_chord(Chord e) const {
        return std::binary_search(chords.begin(), chords.end(), e);
    }

    // True iff {u,v} is an edge of the graph (Hamilton edge or chord).
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        EdgeKind k = classify_edge(u, v, n);
        if (k == EdgeKind::hamilton) return true;
        if (k == EdgeKind::chord) return has_chord({u, v});
        return false;
    }
};

inline LabelledHamGraph make_ham_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 3) throw Error("make_ham_graph: n must be at least 3, got " + std::to_string(n));
    std::vector<Chord> chords;
    chords.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        switch (classify_edge(a, b, n)) {
            case EdgeKind::chord:
                chords.push_back({a, b});
                break;
            case EdgeKind::hamilton:
                throw Error("make_ham_graph: " + chord_str({a, b}) +
                            " is a Hamilton-cycle edge, not a chord");
            case EdgeKind::invalid:
                throw Error("make_ham_graph: " + chord_str({a, b}) +
                            " is not a valid chord for n=" + std::to_string(n));
        }
    }
    std::sort(chords.begin(), chords.end());
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
    return {n, std::move(chords)};
}

// -------------------------------------------------------------------------
// General simple graphs on {1,...,n}: no loops, no multi-edges.
// -------------------------------------------------------------------------

struct GeneralGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // 1-based; adj[0] unused

    GeneralGraph() = default;
    explicit GeneralGraph(int n_) : n(n_), adj(static_cast<size_t>(n_) + 1) {
        if (n_ < 1) throw Error("GeneralGraph: n must be positive");
    }

    bool has_edge(int u, int v) const {
        if (u < 1 || u > n || v < 1 || v > n) return false;
        const auto& row = adj[static_cast<size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    // Inserts {u,v}; duplicate insertions are idempotent, loops are rejected.
    void add_edge(int u, int v) {
        if (u == v) throw Error("add_edge: loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error("add_edge: endpoint out of range for n=" + std::to_string(n));
        if (has_edge(u, v)) return;
        auto insert_sorted = [](std::vector<int>& row, int x) {
            row.insert(std::upper_bound(row.begin(), row.end(), x), x);
        };
        insert_sorted(adj[static_cast<size_t>(u)], v);
        insert_sorted(adj[static_cast<size_t>(v)], u);
    }

    long edge_count() const {
        long twice = 0;
        for (const auto& row : adj) twice += static_cast<long>(row.size());
        return twice / 2;
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 1; v <= n; ++v) d = std::max(d, degree(v));
        return d;
    }
};

// Edge set = Hamilton edges plus chords.
inline GeneralGraph to_general(const LabelledHamGraph& g) {
    GeneralGraph out(g.n);
    for (int v = 1; v < g.n; ++v) out.add_edge(v, v + 1);
    out.add_edge(g.n, 1);
    for (Chord e : g.chords) out.add_edge(e.a, e.b);
    return out;
}

// -------------------------------------------------------------------------
// CycleSet: set of cycle lengths, members within {3,...,n}, backed by a
// length-indexed bit vector.
// -------------------------------------------------------------------------

struct CycleSet {
    int n = 0;
    std::vector<std::uint64_t> bits;  // bit l set <=> l is a member

    CycleSet() = default;
    explicit CycleSet(int n_) : n(n_), bits(static_cast<size_t>(n_) / 64 + 1, 0) {}

    void insert(int len) {
        if (len < 3 || len > n)
            throw Error("CycleSet: length " + std::to_string(len) + " outside {3,...," +
                        std::to_string(n) + "}");
        bits[static_cast<size_t>(len) / 64] |= std::uint64_t{1} << (len % 64);
    }

    bool contains(int len) const {
        if (len < 0 || len > n) return false;
        return (bits[static_cast<size_t>(len) / 64] >> (len % 64)) & 1;
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : bits) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const { return size() == 0; }

    // Membership-wise subset test; ambient n may differ.
    bool subset_of(const CycleSet& other) const {
        for (size_t i = 0; i < bits.size(); ++i) {
            std::uint64_t w = bits[i];
            if (!w) continue;
            if (i >= other.bits.size() || (w & ~other.bits[i])) return false;
        }
        return true;
    }

    bool intersects(const CycleSet& other) const {
        size_t m = std::min(bits.size(), other.bits.size());
        for (size_t i = 0; i < m; ++i)
            if (bits[i] & other.bits[i]) return true;
        return false;
    }

    std::vector<int> sorted() const {
        std::vector<int> out;
        for (int l = 3; l <= n; ++l)
            if (contains(l)) out.push_back(l);
        return out;
    }

    friend bool operator==(const CycleSet& x, const CycleSet& y) {
        return x.n == y.n && x.sorted() == y.sorted();
    }
};

inline CycleSet cycle_set_of(int n, const std::vector<int>& members) {
    CycleSet s(n);
    for (int l : members) s.insert(l);
    return s;
}

// -------------------------------------------------------------------------
// Cycle: a simple cycle as a cyclic vertex sequence, length >= 3.
// -------------------------------------------------------------------------

struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
};

// Rotate so the minimum vertex comes first, oriented so the second entry is
// smaller than the last. Two sequences denote the same cycle iff their
// canonical forms are equal.
inline Cycle canonical(const Cycle& c) {
    const auto& v = c.vertices;
    size_t k = v.size();
    if (k < 3) return c;
    size_t pos = static_cast<size_t>(std::min_element(v.begin(), v.end()) - v.begin());
    std::vector<int> fwd(k), rev(k);
    for (size_t i = 0; i < k; ++i) {
        fwd[i] = v[(pos + i) % k];
        rev[i] = v[(pos + k - i) % k];
    }
    return {fwd[1] < rev[1] ? std::move(fwd) : std::move(rev)};
}

inline bool same_cycle(const Cycle& x, const Cycle& y) {
    return canonical(x).vertices == canonical(y).vertices;
}

// Checks that consecutive pairs (including the wrap-around pair) are edges.
inline bool is_cycle_of(const Cycle& c, const GeneralGraph& g) {
    size_t k = c.vertices.size();
    if (k < 3) return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (size_t i = 0; i < k; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % k])) return false;
    return true;
}

inline bool is_cycle_of(const Cycle& c, const LabelledHamGraph& g) {
    size_t k = c.vertices.size();
    if (k < 3) return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (size_t i = 0; i < k; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % k])) return false;
    return true;
}

}  // namespace cyclespec
