#pragma once

#include <cstdint>
#include <set>

#include "core.hpp"

namespace cyclespec {

// Deterministic generator (splitmix64) so seeded runs reproduce everywhere;
// the standard distributions are not portable across library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Star chord family at vertex 1: satisfies the collision property for any n
// and any choice of distinct far endpoints.
struct StarInstance {
    int n = 0;
    std::vector<Chord> chords;
};

inline StarInstance star_instance(Rng& rng, int min_size = 4, int max_size = 100,
                                  int max_n = 400) {
    int r = rng.uniform(min_size, max_size);
    int n = rng.uniform(r + 3, max_n);
    std::set<int> far;
    while (static_cast<int>(far.size()) < r) far.insert(rng.uniform(3, n - 1));
    StarInstance out;
    out.n = n;
    for (int b : far) out.chords.push_back({1, b});
    return out;
}

// Independent chord set packed left to right. `distinct_gaps` false keeps
// the gaps within {1,2} (run-length encoding case); true makes every gap
// unique (distinct-gaps case).
struct IndependentInstance {
    int n = 0;
    std::vector<Chord> chords;
};

inline IndependentInstance independent_instance(Rng& rng, bool distinct_gaps) {
    IndependentInstance out;
    int count = rng.uniform(4, 10);
    int pos = 1;
    int gap = 0;
    for (int i = 0; i < count; ++i) {
        int a = pos + rng.uniform(0, 2);
        gap = distinct_gaps ? gap + rng.uniform(1, 2) : rng.uniform(1, 2);
        int b = a + gap + 1;
        out.chords.push_back({a, b});
        pos = b + 1 + rng.uniform(0, 1);
    }
    out.n = pos + rng.uniform(2, 6);
    return out;
}

// Chords strictly containing a common vertex; brute-forceable sizes.
struct PiercedInstance {
    int n = 0;
    int x = 0;
    std::vector<Chord> chords;
};

inline PiercedInstance pierced_instance(Rng& rng, int max_size = 12) {
    PiercedInstance out;
    out.n = 40;
    out.x = rng.uniform(12, 28);
    int want = rng.uniform(3, max_size);
    std::set<Chord> picked;
    while (static_cast<int>(picked.size()) < want) {
        int a = rng.uniform(out.x - 9, out.x - 1);
        int b = rng.uniform(out.x + 1, out.x + 9);
        picked.insert({a, b});
    }
    out.chords.assign(picked.begin(), picked.end());
    return out;
}

// Structured instances in the shifting regime: an antichain of crossing
// chords through x with dyadic scale L, plus enough disjoint chords outside
// the crossing region that three shortcut waves fit.
struct ShiftFixture {
    int n = 0;
    Chord f;
    std::vector<Chord> antichain;
    std::vector<Chord> independent;
    int L = 0;
};

inline ShiftFixture shift_fixture(int n) {
    if (n != 200 && n != 400) throw Error("shift_fixture: shipped fixtures are n=200 and n=400");
    ShiftFixture fx;
    fx.n = n;
    fx.L = 8;
    int x = n / 2;
    for (int i = 0; i < 6; ++i)
        fx.antichain.push_back({x - 7 + i, x + 2 + 2 * i});
    fx.f = fx.antichain.front();
    if (n == 400) {
        for (int k = 0; k < 15; ++k)
            fx.independent.push_back({1 + 11 * k, 10 + 11 * k});
    } else {
        for (int k = 0; k < 8; ++k)
            fx.independent.push_back({1 + 10 * k, 10 + 10 * k});
        for (int k = 0; k < 8; ++k)
            fx.independent.push_back({113 + 11 * k, 122 + 11 * k});
    }
    return fx;
}

}  // namespace cyclespec
