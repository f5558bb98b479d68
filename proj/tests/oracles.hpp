#pragma once

// Brute-force oracles, deliberately independent of the library's algorithms:
// plain path-extension enumeration and exhaustive subset scans only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <cyclespec/core.hpp>

namespace oracle {

using cyclespec::Chord;
using cyclespec::Cycle;
using cyclespec::GeneralGraph;

// Every simple cycle, as a vertex sequence starting at its minimum vertex.
// Each cycle appears once (direction fixed by second < last).
inline std::vector<std::vector<int>> all_cycles(const GeneralGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(g.n) + 1, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        for (int u : g.adj[static_cast<size_t>(v)]) {
            if (u == path.front()) {
                if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (u < path.front() || used[static_cast<size_t>(u)]) continue;
            used[static_cast<size_t>(u)] = 1;
            path.push_back(u);
            self(self, u);
            path.pop_back();
            used[static_cast<size_t>(u)] = 0;
        }
    };
    for (int s = 1; s <= g.n; ++s) {
        path.assign(1, s);
        used.assign(static_cast<size_t>(g.n) + 1, 0);
        used[static_cast<size_t>(s)] = 1;
        dfs(dfs, s);
    }
    return out;
}

inline std::set<int> cycle_lengths(const GeneralGraph& g) {
    std::set<int> out;
    for (const auto& c : all_cycles(g)) out.insert(static_cast<int>(c.size()));
    return out;
}

// Cycles through both chords with every other edge on the Hamilton cycle.
inline std::vector<std::vector<int>> cycles_through_pair(int n, Chord e, Chord f) {
    GeneralGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    g.add_edge(e.a, e.b);
    g.add_edge(f.a, f.b);
    auto uses = [](const std::vector<int>& cyc, Chord c) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if ((u == c.a && v == c.b) || (u == c.b && v == c.a)) return true;
        }
        return false;
    };
    auto others_on_h = [n, e, f](const std::vector<int>& cyc) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (u > v) std::swap(u, v);
            bool hamilton = (v == u + 1) || (u == 1 && v == n);
            bool is_chord = (u == e.a && v == e.b) || (u == f.a && v == f.b);
            if (!hamilton && !is_chord) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> out;
    for (const auto& cyc : all_cycles(g))
        if (uses(cyc, e) && uses(cyc, f) && others_on_h(cyc)) out.push_back(cyc);
    return out;
}

// Maximum-cardinality disjoint chord subset, tie-broken by total length;
// exhaustive over all subsets.
inline std::pair<int, long> best_independent(const std::vector<Chord>& R) {
    int best_cnt = 0;
    long best_span = 0;
    size_t m = R.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<Chord> sub;
        for (size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(R[i]);
        std::sort(sub.begin(), sub.end());
        bool ok = true;
        for (size_t i = 1; i < sub.size(); ++i)
            if (sub[i - 1].b >= sub[i].a) ok = false;
        if (!ok) continue;
        long span = 0;
        for (Chord c : sub) span += c.b - c.a;
        int cnt = static_cast<int>(sub.size());
        if (cnt > best_cnt || (cnt == best_cnt && span < best_span)) {
            best_cnt = cnt;
            best_span = span;
        }
    }
    return {best_cnt, best_span};
}

inline bool precedes(Chord e, Chord f) { return e.a <= f.a && f.b <= e.b; }

// Exhaustive maximum chain / antichain sizes under interval containment.
inline std::pair<int, int> best_chain_antichain(const std::vector<Chord>& X) {
    size_t m = X.size();
    int best_chain = 0, best_anti = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<Chord> sub;
        for (size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(X[i]);
        bool chain = true, anti = true;
        for (size_t i = 0; i < sub.size(); ++i)
            for (size_t j = i + 1; j < sub.size(); ++j) {
                bool cmp = precedes(sub[i], sub[j]) || precedes(sub[j], sub[i]);
                if (!cmp) chain = false;
                if (cmp) anti = false;
            }
        int sz = static_cast<int>(sub.size());
        if (chain) best_chain = std::max(best_chain, sz);
        if (anti) best_anti = std::max(best_anti, sz);
    }
    return {best_chain, best_anti};
}

// All subset sums of a multiset.
inline std::set<long> subset_sums(const std::vector<int>& d) {
    std::set<long> sums{0};
    for (int x : d) {
        std::set<long> next = sums;
        for (long s : sums) next.insert(s + x);
        sums = std::move(next);
    }
    return sums;
}

// Minimum edge-mask over all vertex relabelings: a canonical form for
// isomorphism tests at tiny n. Edge bit order: (i,j), i<j, lexicographic.
inline std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0, k = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((mask >> k) & 1) edges.emplace_back(i, j);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto bit_of = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t m2 = 0;
        for (auto [i, j] : edges) m2 |= std::uint32_t{1} << bit_of(perm[static_cast<size_t>(i)],
                                                                   perm[static_cast<size_t>(j)]);
        best = std::min(best, m2);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Enumerates every independent chord set with at most max_size chords on
// the circle of size n (chords sorted by left endpoint).
template <typename Fn>
inline void for_each_independent_set(int n, int max_size, Fn&& fn) {
    std::vector<Chord> all;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (cyclespec::valid_chord({a, b}, n)) all.push_back({a, b});
    std::sort(all.begin(), all.end());
    std::vector<Chord> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!cur.empty()) fn(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (size_t i = from; i < all.size(); ++i) {
            if (!cur.empty() && all[i].a <= cur.back().b) continue;
            cur.push_back(all[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace oracle
