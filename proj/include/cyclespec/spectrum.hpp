#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "config.hpp"
#include "core.hpp"

namespace cyclespec {
namespace detail {

// ---- general graphs: per-length existence search over adjacency bitmasks --

// DFS for a cycle of exactly `want` vertices whose minimum vertex is `start`
// (0-based). `budget` counts extension steps; on exhaustion the search gives
// up and returns nullopt so the caller can switch to the subset DP.
inline std::optional<bool> cycle_of_length_dfs(const std::vector<std::uint64_t>& adj, int start,
                                               int v, std::uint64_t visited, int remaining,
                                               long& budget) {
    if (remaining == 0)
        return (adj[static_cast<size_t>(v)] >> start) & 1 ? std::optional<bool>(true)
                                                          : std::optional<bool>(false);
    std::uint64_t cand = adj[static_cast<size_t>(v)] & ~visited;
    cand &= ~((std::uint64_t{1} << (start + 1)) - 1);  // only vertices > start
    while (cand) {
        if (--budget < 0) return std::nullopt;
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        auto r = cycle_of_length_dfs(adj, start, u, visited | (std::uint64_t{1} << u),
                                     remaining - 1, budget);
        if (!r.has_value() || *r) return r;
    }
    return false;
}

// Exact fallback: for each mask the set of endpoints reachable by a simple
// path from the mask's minimum vertex covering exactly mask. 2^n * n work,
// n <= 20.
inline std::uint64_t spectrum_lengths_subset_dp(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    std::uint64_t lengths = 0;
    for (int s = 0; s < n; ++s) reach[std::uint64_t{1} << s] = std::uint32_t{1} << s;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        int s = __builtin_ctz(mask);
        int len = __builtin_popcount(mask);
        std::uint32_t e = ends;
        while (e) {
            int v = __builtin_ctz(e);
            e &= e - 1;
            if (len >= 3 && ((adj[static_cast<size_t>(v)] >> s) & 1)) lengths |= std::uint64_t{1} << len;
            std::uint32_t next = static_cast<std::uint32_t>(adj[static_cast<size_t>(v)]) & ~mask;
            next &= ~((std::uint32_t{1} << (s + 1)) - 1);
            while (next) {
                int u = __builtin_ctz(next);
                next &= next - 1;
                reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return lengths;
}

// Cycle lengths of a graph given as 0-based adjacency bitmasks, n <= 64.
inline std::uint64_t spectrum_lengths(const std::vector<std::uint64_t>& adj, int n) {
    std::uint64_t lengths = 0;
    bool need_dp = false;
    for (int len = 3; len <= n && !need_dp; ++len) {
        bool found = false;
        for (int s = 0; s + len <= n && !found; ++s) {
            long budget = 2'000'000;
            auto r = cycle_of_length_dfs(adj, s, s, std::uint64_t{1} << s, len - 1, budget);
            if (!r.has_value()) {
                need_dp = true;
                break;
            }
            found = *r;
        }
        if (found) lengths |= std::uint64_t{1} << len;
    }
    if (need_dp) {
        if (n > 20) throw Error("spectrum: search budget exhausted and n=" + std::to_string(n) +
                                " too large for the exact fallback (max 20)");
        lengths = spectrum_lengths_subset_dp(adj, n);
    }
    return lengths;
}

// DFS variant that records one cycle of exactly `want` vertices (used by the
// census partition classifier to materialize a longest cycle).
inline bool find_cycle_dfs(const std::vector<std::uint64_t>& adj, int start, int v,
                           std::uint64_t visited, int remaining, std::vector<int>& path) {
    if (remaining == 0) {
        if ((adj[static_cast<size_t>(v)] >> start) & 1) return true;
        return false;
    }
    std::uint64_t cand = adj[static_cast<size_t>(v)] & ~visited;
    cand &= ~((std::uint64_t{1} << (start + 1)) - 1);
    while (cand) {
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        path.push_back(u);
        if (find_cycle_dfs(adj, start, u, visited | (std::uint64_t{1} << u), remaining - 1, path))
            return true;
        path.pop_back();
    }
    return false;
}

inline std::vector<std::uint64_t> adjacency_masks(const GeneralGraph& g) {
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.n), 0);
    for (int v = 1; v <= g.n; ++v)
        for (int u : g.adj[static_cast<size_t>(v)])
            adj[static_cast<size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
    return adj;
}

// ---- Hamilton cycle + chords: compressed interaction multigraph ----------
//
// Chord endpoints cut H into segments. Any simple cycle is a cycle of the
// multigraph on endpoints whose edges are the segments and the chords, and
// its length is the total H-edge count plus one per chord. Edges carry the
// *set* of realizable lengths as a bitset, so independent stretches collapse
// into single edges carrying their subset-sum spectra instead of exploding
// the enumeration.

struct LengthSet {
    std::vector<std::uint64_t> w;  // bit k = a route of k edges exists

    explicit LengthSet(int maxlen = 0) : w(static_cast<size_t>(maxlen) / 64 + 1, 0) {}

    void set(int k) { w[static_cast<size_t>(k) / 64] |= std::uint64_t{1} << (k % 64); }

    void or_shifted(const LengthSet& src, int shift) {
        int words = static_cast<int>(w.size());
        int word_shift = shift / 64, bit_shift = shift % 64;
        for (int i = words - 1 - word_shift; i >= 0; --i) {
            std::uint64_t v = src.w[static_cast<size_t>(i)];
            if (!v) continue;
            w[static_cast<size_t>(i + word_shift)] |= v << bit_shift;
            if (bit_shift && i + word_shift + 1 < words)
                w[static_cast<size_t>(i + word_shift + 1)] |= v >> (64 - bit_shift);
        }
    }

    void merge_from(const LengthSet& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }

    bool any() const {
        for (std::uint64_t v : w)
            if (v) return true;
        return false;
    }
};

// dst |= Minkowski sum of a and b (all pairwise sums), truncated to width.
inline void minkowski_or(LengthSet& dst, const LengthSet& a, const LengthSet& b) {
    int maxbit = static_cast<int>(dst.w.size()) * 64;
    for (int i = 0; i < static_cast<int>(b.w.size()); ++i) {
        std::uint64_t v = b.w[static_cast<size_t>(i)];
        while (v) {
            int k = 64 * i + __builtin_ctzll(v);
            v &= v - 1;
            if (k < maxbit) dst.or_shifted(a, k);
        }
    }
}

struct AuxGraph {
    struct Edge {
        int u, v;
        LengthSet lens;
        bool alive = true;
    };
    int n = 0;  // ambient circle size; length bitsets are n+1 bits wide
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;

    int degree(int v) const {
        int d = 0;
        for (int id : incident[static_cast<size_t>(v)])
            if (edges[static_cast<size_t>(id)].alive) ++d;
        return d;
    }

    void add_edge(int u, int v, LengthSet lens) {
        int id = static_cast<int>(edges.size());
        edges.push_back({u, v, std::move(lens), true});
        incident[static_cast<size_t>(u)].push_back(id);
        incident[static_cast<size_t>(v)].push_back(id);
    }
};

// Collapses parallel edges and degree-2 vertices, recording the cycle
// lengths produced on the way (a pair of parallel edges between u,v is a set
// of real cycles through u and v). Invariant: distinct edges always have
// internally disjoint vertex sets, so any Minkowski combination is a real
// simple cycle.
inline void compress_aux(AuxGraph& g, LengthSet& out) {
    size_t nv = g.incident.size();
    bool changed = true;
    while (changed) {
        changed = false;
        // prune dead ends
        for (size_t v = 0; v < nv; ++v) {
            if (g.degree(static_cast<int>(v)) == 1) {
                for (int id : g.incident[v]) g.edges[static_cast<size_t>(id)].alive = false;
                changed = true;
            }
        }
        // merge one parallel pair
        bool merged = false;
        for (size_t v = 0; v < nv && !merged; ++v) {
            auto& inc = g.incident[v];
            for (size_t i = 0; i < inc.size() && !merged; ++i) {
                auto& e1 = g.edges[static_cast<size_t>(inc[i])];
                if (!e1.alive) continue;
                for (size_t j = i + 1; j < inc.size(); ++j) {
                    auto& e2 = g.edges[static_cast<size_t>(inc[j])];
                    if (!e2.alive) continue;
                    int o1 = e1.u == static_cast<int>(v) ? e1.v : e1.u;
                    int o2 = e2.u == static_cast<int>(v) ? e2.v : e2.u;
                    if (o1 != o2) continue;
                    minkowski_or(out, e1.lens, e2.lens);  // two-edge cycles
                    e1.lens.merge_from(e2.lens);
                    e2.alive = false;
                    merged = true;
                    changed = true;
                    break;
                }
            }
        }
        if (merged) continue;
        // contract one degree-2 vertex
        for (size_t v = 0; v < nv; ++v) {
            if (g.degree(static_cast<int>(v)) != 2) continue;
            int id1 = -1, id2 = -1;
            for (int id : g.incident[v]) {
                if (!g.edges[static_cast<size_t>(id)].alive) continue;
                (id1 < 0 ? id1 : id2) = id;
            }
            auto& e1 = g.edges[static_cast<size_t>(id1)];
            auto& e2 = g.edges[static_cast<size_t>(id2)];
            int u = e1.u == static_cast<int>(v) ? e1.v : e1.u;
            int w = e2.u == static_cast<int>(v) ? e2.v : e2.u;
            // parallels were exhausted above, so u != w
            LengthSet joined(static_cast<int>(out.w.size()) * 64 - 1);
            minkowski_or(joined, e1.lens, e2.lens);
            e1.alive = false;
            e2.alive = false;
            g.add_edge(u, w, std::move(joined));
            changed = true;
            break;
        }
    }
}

// Enumerates simple cycles of the compressed multigraph (min degree >= 3, no
// parallel edges), accumulating realizable length sums.
struct AuxCycleEnum {
    const AuxGraph& g;
    LengthSet& out;
    int width;
    std::vector<LengthSet> acc;   // acc[d] = sums along the first d path edges
    std::vector<char> on_path;
    std::vector<int> path;
    int start = 0;
    long budget;

    AuxCycleEnum(const AuxGraph& g_, LengthSet& out_, long budget_)
        : g(g_), out(out_), width(static_cast<int>(out_.w.size()) * 64 - 1),
          acc(g_.incident.size() + 2, LengthSet(width)),
          on_path(g_.incident.size(), 0), budget(budget_) {}

    void run() {
        for (start = 0; start < static_cast<int>(g.incident.size()); ++start) {
            if (g.degree(start) == 0) continue;
            on_path[static_cast<size_t>(start)] = 1;
            path.assign(1, start);
            for (std::uint64_t& w : acc[0].w) w = 0;
            acc[0].set(0);
            dfs(start, 0);
            on_path[static_cast<size_t>(start)] = 0;
        }
    }

    void dfs(int v, int depth) {
        for (int id : g.incident[static_cast<size_t>(v)]) {
            const auto& e = g.edges[static_cast<size_t>(id)];
            if (!e.alive) continue;
            if (--budget < 0)
                throw Error("spectrum: cycle enumeration budget exceeded; raise limits deliberately");
            int u = e.u == v ? e.v : e.u;
            if (u == start) {
                // close the cycle; count each once (second vertex < last vertex)
                if (depth >= 2 && path[1] < v) {
                    LengthSet closed(width);
                    minkowski_or(closed, acc[static_cast<size_t>(depth)], e.lens);
                    out.merge_from(closed);
                }
                continue;
            }
            if (u < start || on_path[static_cast<size_t>(u)]) continue;
            for (std::uint64_t& w : acc[static_cast<size_t>(depth) + 1].w) w = 0;
            minkowski_or(acc[static_cast<size_t>(depth) + 1], acc[static_cast<size_t>(depth)],
                         e.lens);
            on_path[static_cast<size_t>(u)] = 1;
            path.push_back(u);
            dfs(u, depth + 1);
            path.pop_back();
            on_path[static_cast<size_t>(u)] = 0;
        }
    }
};

}  // namespace detail

// Exact cycle spectrum of an arbitrary graph. Refuses when n exceeds the
// configured limit.
inline CycleSet spectrum(const GeneralGraph& g, const Limits& lim = {}) {
    if (g.n > lim.max_n_general)
        throw Error("spectrum: n=" + std::to_string(g.n) + " exceeds general-graph limit " +
                    std::to_string(lim.max_n_general));
    auto adj = detail::adjacency_masks(g);
    std::uint64_t lengths = detail::spectrum_lengths(adj, g.n);
    CycleSet out(g.n);
    for (int l = 3; l <= g.n; ++l)
        if ((lengths >> l) & 1) out.insert(l);
    return out;
}

// Exact cycle spectrum of a Hamilton cycle plus chords, via the compressed
// interaction multigraph. Refuses when the chord count exceeds the limit.
inline CycleSet spectrum(const LabelledHamGraph& g, const Limits& lim = {}) {
    if (static_cast<int>(g.chords.size()) > lim.max_chords)
        throw Error("spectrum: " + std::to_string(g.chords.size()) + " chords exceed limit " +
                    std::to_string(lim.max_chords));
    CycleSet out(g.n);
    out.insert(g.n);  // H itself
    if (g.chords.empty()) return out;

    std::vector<int> labels;
    for (Chord e : g.chords) {
        if (!valid_chord(e, g.n)) throw Error("spectrum: invalid chord " + chord_str(e));
        labels.push_back(e.a);
        labels.push_back(e.b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    int m = static_cast<int>(labels.size());
    auto index_of = [&](int label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                labels.begin());
    };

    detail::AuxGraph aux;
    aux.n = g.n;
    aux.incident.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        int hops = j == 0 ? g.n - labels[static_cast<size_t>(i)] + labels[0]
                          : labels[static_cast<size_t>(j)] - labels[static_cast<size_t>(i)];
        detail::LengthSet w(g.n);
        w.set(hops);
        aux.add_edge(i, j, std::move(w));
    }
    for (Chord e : g.chords) {
        detail::LengthSet w(g.n);
        w.set(1);
        aux.add_edge(index_of(e.a), index_of(e.b), std::move(w));
    }

    detail::LengthSet found(g.n);
    detail::compress_aux(aux, found);
    detail::AuxCycleEnum{aux, found, 200'000'000}.run();

    for (int l = 3; l <= g.n; ++l)
        if ((found.w[static_cast<size_t>(l) / 64] >> (l % 64)) & 1) out.insert(l);
    return out;
}

// The length of a longest cycle; 0 for acyclic graphs.
inline int circumference(const CycleSet& s) {
    for (int l = s.n; l >= 3; --l)
        if (s.contains(l)) return l;
    return 0;
}

// Materializes one cycle of exactly `len` vertices, if any.
inline std::optional<Cycle> find_cycle_of_length(const GeneralGraph& g, int len,
                                                 const Limits& lim = {}) {
    if (g.n > lim.max_n_general)
        throw Error("find_cycle_of_length: n=" + std::to_string(g.n) + " exceeds limit " +
                    std::to_string(lim.max_n_general));
    if (len < 3 || len > g.n) return std::nullopt;
    auto adj = detail::adjacency_masks(g);
    for (int s = 0; s + len <= g.n; ++s) {
        std::vector<int> path{s};
        if (detail::find_cycle_dfs(adj, s, s, std::uint64_t{1} << s, len - 1, path)) {
            Cycle c;
            for (int v : path) c.vertices.push_back(v + 1);
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace cyclespec
