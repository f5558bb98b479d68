#pragma once

#include "core.hpp"

namespace cyclespec {

// How two distinct chords can relate on the circle. Tags are mutually
// exclusive and exhaustive over valid chord pairs.
enum class PairCycleKind { shared_endpoint, disjoint, nested, crossing };

inline const char* to_string(PairCycleKind k) {
    switch (k) {
        case PairCycleKind::shared_endpoint: return "shared-endpoint";
        case PairCycleKind::disjoint: return "disjoint";
        case PairCycleKind::nested: return "nested";
        case PairCycleKind::crossing: return "crossing";
    }
    return "?";
}

inline PairCycleKind pair_kind(Chord e, Chord f) {
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b)
        return PairCycleKind::shared_endpoint;
    if (e.b < f.a || f.b < e.a) return PairCycleKind::disjoint;
    if ((e.a < f.a && f.b < e.b) || (f.a < e.a && e.b < f.b)) return PairCycleKind::nested;
    return PairCycleKind::crossing;
}

namespace detail {

inline void check_pair(int n, Chord e, Chord f) {
    if (e == f) throw Error("pair cycle: chords must be distinct, got " + chord_str(e) + " twice");
    if (!valid_chord(e, n)) throw Error("pair cycle: invalid chord " + chord_str(e));
    if (!valid_chord(f, n)) throw Error("pair cycle: invalid chord " + chord_str(f));
}

inline int circ_next(int v, int n) { return v % n + 1; }
inline int circ_prev(int v, int n) { return v == 1 ? n : v - 1; }

// append labels (from..to] walking the circle upward, excluding `from`
inline void walk_up(std::vector<int>& out, int n, int from, int upto_excl) {
    for (int k = circ_next(from, n); k != upto_excl; k = circ_next(k, n)) out.push_back(k);
}
// same, walking downward
inline void walk_down(std::vector<int>& out, int n, int from, int downto_excl) {
    for (int k = circ_prev(from, n); k != downto_excl; k = circ_prev(k, n)) out.push_back(k);
}

}  // namespace detail

// The designated cycle through two chords with all other edges on H. Unique
// except for crossing chords, where the traversal
//   a_e -> b_e (chord), b_e up to b_f along H, chord to a_f, a_f down to a_e
// fixes the choice (orientation normalized so a_e < a_f). Symmetric in its
// two chord arguments.
inline Cycle pair_cycle(int n, Chord e, Chord f) {
    detail::check_pair(n, e, f);
    std::vector<int> seq;
    switch (pair_kind(e, f)) {
        case PairCycleKind::shared_endpoint: {
            if (e.a == f.a) {
                if (e.b > f.b) std::swap(e, f);
                seq = {e.a, e.b};
                detail::walk_up(seq, n, e.b, f.b);
                seq.push_back(f.b);
            } else if (e.b == f.b) {
                if (e.a > f.a) std::swap(e, f);
                seq = {e.b, e.a};
                detail::walk_up(seq, n, e.a, f.a);
                seq.push_back(f.a);
            } else {
                if (e.b != f.a) std::swap(e, f);  // now e = (a,m), f = (m,c)
                seq = {e.a, e.b, f.b};
                detail::walk_up(seq, n, f.b, e.a);
            }
            break;
        }
        case PairCycleKind::disjoint: {
            if (f.b < e.a) std::swap(e, f);  // e entirely left of f
            seq = {e.a, e.b};
            detail::walk_up(seq, n, e.b, f.a);
            seq.push_back(f.a);
            seq.push_back(f.b);
            detail::walk_up(seq, n, f.b, e.a);
            break;
        }
        case PairCycleKind::nested: {
            if (f.a < e.a) std::swap(e, f);  // f strictly inside e
            seq = {e.a, e.b};
            detail::walk_down(seq, n, e.b, f.b);
            seq.push_back(f.b);
            seq.push_back(f.a);
            detail::walk_down(seq, n, f.a, e.a);
            break;
        }
        case PairCycleKind::crossing: {
            if (e.a > f.a) std::swap(e, f);
            seq = {e.a, e.b};
            detail::walk_up(seq, n, e.b, f.b);
            seq.push_back(f.b);
            seq.push_back(f.a);
            detail::walk_down(seq, n, f.a, e.a);
            break;
        }
    }
    return {std::move(seq)};
}

// |pair_cycle(n,e,f)| without materializing the cycle.
inline int pair_cycle_length(int n, Chord e, Chord f) {
    detail::check_pair(n, e, f);
    auto circ_count = [n](int from, int to) {  // vertices from..to inclusive, upward
        return (to - from + n) % n + 1;
    };
    switch (pair_kind(e, f)) {
        case PairCycleKind::shared_endpoint:
            if (e.a == f.a) return std::abs(e.b - f.b) + 2;
            if (e.b == f.b) return std::abs(e.a - f.a) + 2;
            if (e.b == f.a) return circ_count(f.b, e.a) + 1;
            return circ_count(e.b, f.a) + 1;  // e.a == f.b
        case PairCycleKind::disjoint:
            return n - chord_gap(e) - chord_gap(f);
        case PairCycleKind::nested: {
            if (f.a < e.a) std::swap(e, f);
            return (e.b - f.b + 1) + (f.a - e.a + 1);
        }
        case PairCycleKind::crossing: {
            if (e.a > f.a) std::swap(e, f);
            return (f.a - e.a + 1) + (f.b - e.b + 1);
        }
    }
    throw Error("pair_cycle_length: unreachable");
}

// The other simple cycle through a crossing pair: the one that keeps the
// wrap-around arc of H, so it can be shortcut by chords lying outside the
// crossing region. Complements the designated cycle: lengths sum to n + 4.
inline Cycle crossing_wrap_cycle(int n, Chord e, Chord f) {
    detail::check_pair(n, e, f);
    if (pair_kind(e, f) != PairCycleKind::crossing)
        throw Error("crossing_wrap_cycle: " + chord_str(e) + "," + chord_str(f) +
                    " do not cross");
    if (e.a > f.a) std::swap(e, f);
    std::vector<int> seq = {e.a, e.b};
    detail::walk_down(seq, n, e.b, f.a);
    seq.push_back(f.a);
    seq.push_back(f.b);
    detail::walk_up(seq, n, f.b, e.a);
    return {std::move(seq)};
}

// Short-cutting: if a_e, a_e+1, ..., b_e appear consecutively in that label
// order along c, remove the interior labels (the chord closes the cycle).
inline Cycle shortcut(const Cycle& c, Chord e) {
    if (e.a >= e.b || e.b - e.a < 2)
        throw Error("shortcut: " + chord_str(e) + " is not a valid chord");
    const auto& v = c.vertices;
    int k = c.length();
    int pos = -1;
    for (int i = 0; i < k; ++i)
        if (v[static_cast<size_t>(i)] == e.a) pos = i;
    if (pos < 0) throw Error("shortcut: label " + std::to_string(e.a) + " not on cycle");

    int span = e.b - e.a;
    auto run_matches = [&](int dir) {  // dir = +1 forward, -1 backward
        for (int s = 0; s <= span; ++s) {
            int idx = ((pos + dir * s) % k + k) % k;
            if (v[static_cast<size_t>(idx)] != e.a + s) return false;
        }
        return true;
    };
    if (!run_matches(+1) && !run_matches(-1)) {
        std::string missing;
        for (int l = e.a; l <= e.b; ++l)
            if (!c.contains(l)) missing += (missing.empty() ? "" : ",") + std::to_string(l);
        if (!missing.empty())
            throw Error("shortcut along " + chord_str(e) + ": labels {" + missing +
                        "} missing from cycle");
        throw Error("shortcut along " + chord_str(e) +
                    ": labels " + std::to_string(e.a) + ".." + std::to_string(e.b) +
                    " not consecutive in label order along cycle");
    }
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(k - span + 1));
    for (int i = 0; i < k; ++i) {
        int label = v[static_cast<size_t>(i)];
        if (label > e.a && label < e.b) continue;
        seq.push_back(label);
    }
    return {std::move(seq)};
}

// S(C(e,R)): lengths of the interaction cycles of e against R \ {e}.
inline CycleSet interaction_spectrum(int n, Chord e, const std::vector<Chord>& R) {
    CycleSet out(n);
    for (Chord f : R)
        if (f != e) out.insert(pair_cycle_length(n, e, f));
    return out;
}

struct PairwiseSpectrum {
    CycleSet set;
    bool undersized = false;  // |R| < 2: no pairs exist
};

// S(C(R)): lengths over all unordered pairs of distinct chords in R.
inline PairwiseSpectrum pairwise_spectrum(int n, const std::vector<Chord>& R) {
    PairwiseSpectrum out{CycleSet(n), R.size() < 2};
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = i + 1; j < R.size(); ++j)
            out.set.insert(pair_cycle_length(n, R[i], R[j]));
    return out;
}

}  // namespace cyclespec
