#pragma once

#include <cmath>

#include "config.hpp"
#include "pair_cycle.hpp"
#include "spectrum.hpp"

namespace cyclespec {

// Witness of a collision-property violation: two chords e,f plus at least
// two further chords whose interaction with e has the same length as C(e,f).
struct CollisionWitness {
    Chord e, f;
    std::vector<Chord> third;
    int length = 0;
};

struct CollisionResult {
    bool holds = false;
    CollisionWitness witness;  // meaningful only when !holds
};

struct CollisionError : Error {
    CollisionWitness witness;
    CollisionError(const std::string& what, CollisionWitness w)
        : Error(what), witness(std::move(w)) {}
};

// True iff for every ordered pair of distinct e,f in R at most one chord
// e'' in R \ {e,f} satisfies |C(e,e'')| = |C(e,f)|.
inline CollisionResult collision_property(int n, std::vector<Chord> R) {
    if (R.size() < 2) throw Error("collision_property: requires |R| >= 2");
    std::sort(R.begin(), R.end());
    size_t m = R.size();
    std::vector<int> len(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j) len[i * m + j] = pair_cycle_length(n, R[i], R[j]);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            std::vector<Chord> hits;
            for (size_t k = 0; k < m; ++k)
                if (k != i && k != j && len[i * m + k] == len[i * m + j]) hits.push_back(R[k]);
            if (hits.size() >= 2)
                return {false, {R[i], R[j], std::move(hits), len[i * m + j]}};
        }
    }
    return {true, {}};
}

struct FingerprintResult {
    std::vector<Chord> F, F1, F2;  // F = F1 u F2, disjoint
    int achieved_spectrum_size = 0;
    int guarantee = 0;    // ceil(|R|/24)
    int target_size = 0;  // ceil(sqrt(|R|)); |F| may exceed it by one from rounding
};

// Two-phase greedy extraction of a fingerprint F from R. Phase sizes are
// ceil(sqrt(|R|)/2) each: F1 is the lexicographically smallest prefix, then
// each round adds the chord maximizing the new interaction lengths against
// F1 (ties to the smallest chord). Requires the collision property.
inline FingerprintResult fingerprint(int n, std::vector<Chord> R, const Limits& lim = {}) {
    if (R.size() < 4) throw Error("fingerprint: requires |R| >= 4, got " + std::to_string(R.size()));
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    for (Chord e : R)
        if (!valid_chord(e, n)) throw Error("fingerprint: invalid chord " + chord_str(e));

    auto col = collision_property(n, R);
    if (!col.holds)
        throw CollisionError(
            "fingerprint: collision property violated at e=" + chord_str(col.witness.e) +
                ", f=" + chord_str(col.witness.f) + " (|C| = " +
                std::to_string(col.witness.length) + " reached by " +
                std::to_string(col.witness.third.size()) + " other chords)",
            col.witness);

    int r = static_cast<int>(R.size());
    int phase = 1;
    while (4 * phase * phase < r) ++phase;  // smallest integer >= sqrt(r)/2
    int target = 1;
    while (target * target < r) ++target;

    std::vector<Chord> F1(R.begin(), R.begin() + phase);
    std::vector<char> taken(R.size(), 0);
    for (int i = 0; i < phase; ++i) taken[static_cast<size_t>(i)] = 1;

    LabelledHamGraph h1{n, F1};
    CycleSet covered = spectrum(h1, lim);  // Y

    std::vector<Chord> F2;
    for (int round = 0; round < phase; ++round) {
        int best = -1, best_gain = -1;
        for (size_t i = 0; i < R.size(); ++i) {
            if (taken[i]) continue;
            CycleSet fresh(n);
            for (Chord f : F1) {
                int l = pair_cycle_length(n, R[i], f);
                if (!covered.contains(l)) fresh.insert(l);
            }
            int gain = fresh.size();
            if (gain > best_gain) {  // first maximizer = lexicographically smallest
                best_gain = gain;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        taken[static_cast<size_t>(best)] = 1;
        F2.push_back(R[static_cast<size_t>(best)]);
        for (Chord f : F1) covered.insert(pair_cycle_length(n, R[static_cast<size_t>(best)], f));
    }

    std::vector<Chord> F = F1;
    F.insert(F.end(), F2.begin(), F2.end());
    std::sort(F.begin(), F.end());

    LabelledHamGraph hf{n, F};
    FingerprintResult out;
    out.F = std::move(F);
    out.F1 = std::move(F1);
    out.F2 = std::move(F2);
    out.achieved_spectrum_size = spectrum(hf, lim).size();
    out.guarantee = (r + 23) / 24;
    out.target_size = target;
    return out;
}

}  // namespace cyclespec
