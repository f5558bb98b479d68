#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "config.hpp"
#include "fingerprint.hpp"
#include "pair_cycle.hpp"
#include "spectrum.hpp"

namespace cyclespec {

inline int ceil_log2(int n) {
    int k = 0;
    while ((1LL << k) < n) ++k;
    return k;
}

// -------------------------------------------------------------------------
// Independent chords: orderable so each interval ends strictly before the
// next begins. Returns a maximum-cardinality set; among those, one with
// minimum total interval length (the tie-break the piercing argument needs).
// -------------------------------------------------------------------------

inline std::vector<Chord> max_independent(std::vector<Chord> R) {
    if (R.empty()) return {};
    std::sort(R.begin(), R.end(), [](Chord x, Chord y) {
        return std::pair(x.b, x.a) < std::pair(y.b, y.a);
    });
    R.erase(std::unique(R.begin(), R.end()), R.end());
    size_t m = R.size();
    std::vector<int> cnt(m);
    std::vector<long> span(m);
    std::vector<int> parent(m, -1);
    for (size_t i = 0; i < m; ++i) {
        int best_cnt = 0;
        long best_span = 0;
        int best_j = -1;
        for (size_t j = 0; j < i; ++j) {
            if (R[j].b >= R[i].a) continue;
            if (cnt[j] > best_cnt || (cnt[j] == best_cnt && span[j] < best_span)) {
                best_cnt = cnt[j];
                best_span = span[j];
                best_j = static_cast<int>(j);
            }
        }
        cnt[i] = best_cnt + 1;
        span[i] = best_span + (R[i].b - R[i].a);
        parent[i] = best_j;
    }
    size_t best = 0;
    for (size_t i = 1; i < m; ++i)
        if (cnt[i] > cnt[best] || (cnt[i] == cnt[best] && span[i] < span[best])) best = i;
    std::vector<Chord> out;
    for (int i = static_cast<int>(best); i >= 0; i = parent[static_cast<size_t>(i)])
        out.push_back(R[static_cast<size_t>(i)]);
    std::reverse(out.begin(), out.end());
    return out;
}

inline bool is_independent(std::vector<Chord> I) {
    std::sort(I.begin(), I.end());
    for (size_t i = 1; i < I.size(); ++i)
        if (I[i - 1].b >= I[i].a) return false;
    return true;
}

// -------------------------------------------------------------------------
// Dyadic length classes: L <= b - a < 2L for a power of two L. Returns the
// largest class (smallest L on ties); pigeonhole gives |R_L| >= |R|/ceil(lg n).
// -------------------------------------------------------------------------

struct DyadicClass {
    int L = 0;
    std::vector<Chord> members;
};

inline DyadicClass dyadic_class(const std::vector<Chord>& R, int /*p*/, int n) {
    if (R.empty()) throw Error("dyadic_class: empty chord set");
    std::map<int, std::vector<Chord>> buckets;
    for (Chord e : R) {
        int k = 0;
        while ((2 << k) <= e.b - e.a) ++k;  // largest power of two <= b-a
        buckets[1 << k].push_back(e);
    }
    const std::pair<const int, std::vector<Chord>>* best = nullptr;
    for (const auto& kv : buckets)
        if (!best || kv.second.size() > best->second.size()) best = &kv;
    DyadicClass out{best->first, best->second};
    std::sort(out.members.begin(), out.members.end());
    long lhs = static_cast<long>(out.members.size()) * ceil_log2(n);
    if (lhs < static_cast<long>(R.size()))
        throw std::logic_error("dyadic_class: pigeonhole bound violated");
    return out;
}

// -------------------------------------------------------------------------
// H1/H2 classification: H1 = an independent chord set of size at least
// ceil(sqrt(p) / (K lg n)) exists.
// -------------------------------------------------------------------------

struct Classification {
    bool h1 = false;
    int threshold = 0;
    std::vector<Chord> witness;  // independent, exactly `threshold` chords when h1
};

inline Classification classify(const LabelledHamGraph& g, int p, int K = 1) {
    if (p < 1) throw Error("classify: p must be positive");
    if (K < 1) throw Error("classify: K must be positive");
    if (static_cast<int>(g.chords.size()) < p)
        throw Error("classify: graph has " + std::to_string(g.edge_count()) +
                    " edges, needs at least n + p = " + std::to_string(g.n + p));
    double raw = std::sqrt(static_cast<double>(p)) / (K * std::log2(static_cast<double>(g.n)));
    int threshold = static_cast<int>(std::ceil(raw - 1e-9));
    if (threshold < 1) threshold = 1;
    std::vector<Chord> I = max_independent(g.chords);
    Classification out;
    out.threshold = threshold;
    out.h1 = static_cast<int>(I.size()) >= threshold;
    if (out.h1) out.witness.assign(I.begin(), I.begin() + threshold);
    return out;
}

// -------------------------------------------------------------------------
// Gap encodings: a sequence of (multiplicity, gap) pairs. The induced
// multiset D contains n_i copies of d_i; its subset sums, subtracted from n,
// are cycle lengths reachable by short-cutting an independent chord set.
// -------------------------------------------------------------------------

struct Encoding {
    std::vector<std::pair<int, int>> pairs;  // (multiplicity, gap); (0,0) = padding
    int t = 0;                               // padded length
    int which_case = 0;                      // 1 = run-length, 2 = distinct gaps

    std::vector<int> gap_multiset() const {
        std::vector<int> d;
        for (auto [cnt, gap] : pairs)
            for (int i = 0; i < cnt; ++i) d.push_back(gap);
        return d;
    }

    long total() const {
        long s = 0;
        for (auto [cnt, gap] : pairs) s += static_cast<long>(cnt) * gap;
        return s;
    }
};

inline void validate_encoding(const Encoding& a) {
    for (auto [cnt, gap] : a.pairs) {
        if (cnt == 0 && gap != 0)
            throw Error("encoding: padding entries must be (0,0)");
        if (cnt != 0 && (cnt < 1 || gap < 1))
            throw Error("encoding: entries need multiplicity >= 1 and gap >= 1");
    }
}

// Encodes an independent witness: run-length over gaps when few distinct
// values exist (padded to t = ceil(p^(1/4))), otherwise the t largest
// pairwise-distinct gaps in descending order.
inline Encoding encode_gaps(const LabelledHamGraph& g, const std::vector<Chord>& I, int p) {
    if (I.empty()) throw Error("encode_gaps: empty independent set");
    if (p < 1) throw Error("encode_gaps: p must be positive");
    for (Chord e : I) {
        if (!valid_chord(e, g.n)) throw Error("encode_gaps: invalid chord " + chord_str(e));
        if (!g.has_chord(e))
            throw Error("encode_gaps: chord " + chord_str(e) + " not in the graph");
    }
    if (!is_independent(I)) throw Error("encode_gaps: witness is not independent");

    int t = 1;
    while (static_cast<long>(t) * t * t * t < p) ++t;  // ceil(p^(1/4))

    std::map<int, int> count_by_gap;
    for (Chord e : I) ++count_by_gap[chord_gap(e)];

    Encoding out;
    out.t = t;
    if (static_cast<int>(count_by_gap.size()) <= t) {
        out.which_case = 1;
        for (auto [gap, cnt] : count_by_gap) out.pairs.emplace_back(cnt, gap);
        while (static_cast<int>(out.pairs.size()) < t) out.pairs.emplace_back(0, 0);
    } else {
        out.which_case = 2;
        for (auto it = count_by_gap.rbegin();
             it != count_by_gap.rend() && static_cast<int>(out.pairs.size()) < t; ++it)
            out.pairs.emplace_back(1, it->first);
    }
    return out;
}

// Exact subset-sum spectrum { n - sum(D') : D' subseteq D(a) }.
inline CycleSet encoding_spectrum(const Encoding& a, int n) {
    validate_encoding(a);
    long total = a.total();
    if (total >= n - 2)
        throw Error("encoding_spectrum: gap total " + std::to_string(total) +
                    " leaves lengths below 3 for n=" + std::to_string(n));
    std::vector<std::uint64_t> sums(static_cast<size_t>(n) / 64 + 1, 0);
    sums[0] = 1;
    auto shift_or = [&](int d) {
        for (int i = static_cast<int>(sums.size()) - 1; i >= 0; --i) {
            std::uint64_t v = sums[static_cast<size_t>(i)];
            if (!v) continue;
            int wi = i + d / 64, bi = d % 64;
            if (wi < static_cast<int>(sums.size())) sums[static_cast<size_t>(wi)] |= v << bi;
            if (bi && wi + 1 < static_cast<int>(sums.size()))
                sums[static_cast<size_t>(wi) + 1] |= v >> (64 - bi);
        }
    };
    for (auto [cnt, gap] : a.pairs)
        for (int i = 0; i < cnt; ++i) shift_or(gap);
    CycleSet out(n);
    for (long s = 0; s <= total; ++s)
        if ((sums[static_cast<size_t>(s) / 64] >> (s % 64)) & 1)
            out.insert(n - static_cast<int>(s));
    return out;
}

// S(encoding) subseteq S(graph), checked exactly.
inline bool encoding_soundness_check(const LabelledHamGraph& g, const Encoding& a,
                                     const Limits& lim = {}) {
    return encoding_spectrum(a, g.n).subset_of(spectrum(g, lim));
}

// -------------------------------------------------------------------------
// Point piercing: X_i = chords of R containing an endpoint of the i-th
// independent chord. Requires I maximum with the minimum-total-length
// tie-break, which forces the X_i to cover R.
// -------------------------------------------------------------------------

struct PierceResult {
    std::vector<Chord> X;  // chords containing x
    int x = 0;             // piercing vertex
    int index = 0;         // 0-based position in I (sorted by left endpoint)
};

inline PierceResult pierce_set(const std::vector<Chord>& R, std::vector<Chord> I) {
    if (I.empty()) throw Error("pierce_set: empty independent set");
    if (!is_independent(I)) throw Error("pierce_set: I is not independent");
    std::sort(I.begin(), I.end());
    std::vector<std::vector<Chord>> X(I.size());
    std::vector<char> hit(R.size(), 0);
    for (size_t i = 0; i < I.size(); ++i) {
        for (size_t r = 0; r < R.size(); ++r) {
            Chord e = R[r];
            if ((e.a <= I[i].a && I[i].a <= e.b) || (e.a <= I[i].b && I[i].b <= e.b)) {
                X[i].push_back(e);
                hit[r] = 1;
            }
        }
    }
    for (size_t r = 0; r < R.size(); ++r)
        if (!hit[r])
            throw Error("pierce_set: chord " + chord_str(R[r]) +
                        " pierced by no independent chord; I is not minimal");
    size_t ell = 0;
    for (size_t i = 1; i < X.size(); ++i)
        if (X[i].size() > X[ell].size()) ell = i;
    int count_a = 0, count_b = 0;
    for (Chord e : X[ell]) {
        if (e.a <= I[ell].a && I[ell].a <= e.b) ++count_a;
        if (e.a <= I[ell].b && I[ell].b <= e.b) ++count_b;
    }
    int x = count_a >= count_b ? I[ell].a : I[ell].b;
    PierceResult out;
    out.x = x;
    out.index = static_cast<int>(ell);
    for (Chord e : X[ell])
        if (e.a <= x && x <= e.b) out.X.push_back(e);
    std::sort(out.X.begin(), out.X.end());
    if (2 * out.X.size() < X[ell].size())
        throw std::logic_error("pierce_set: endpoint choice below half");
    return out;
}

// -------------------------------------------------------------------------
// Chains and antichains under containment of pierced chords. e <= f when
// [a_f, b_f] subseteq [a_e, b_e]. Returns a maximum chain and the largest
// level of the height decomposition, an antichain of size >= |X|/|Z|.
// -------------------------------------------------------------------------

struct ChainAntichain {
    std::vector<Chord> chain;      // Z, maximum, outermost first
    std::vector<Chord> antichain;  // A, pairwise crossing
};

inline bool chord_precedes(Chord e, Chord f) { return e.a <= f.a && f.b <= e.b; }

inline ChainAntichain chain_antichain(std::vector<Chord> X, int x) {
    if (X.empty()) throw Error("chain_antichain: empty chord set");
    for (Chord e : X)
        if (!(e.a <= x && x <= e.b))
            throw Error("chain_antichain: chord " + chord_str(e) + " does not contain x=" +
                        std::to_string(x));
    std::sort(X.begin(), X.end(), [](Chord p, Chord q) {
        return std::pair(p.a, -p.b) < std::pair(q.a, -q.b);
    });
    X.erase(std::unique(X.begin(), X.end()), X.end());
    size_t m = X.size();
    // in this order, comparable pairs are exactly j < i with b_j >= b_i
    std::vector<int> height(m, 1), parent(m, -1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < i; ++j)
            if (X[j].b >= X[i].b && height[j] + 1 > height[i]) {
                height[i] = height[j] + 1;
                parent[i] = static_cast<int>(j);
            }
    size_t deepest = 0;
    for (size_t i = 1; i < m; ++i)
        if (height[i] > height[deepest]) deepest = i;

    ChainAntichain out;
    for (int i = static_cast<int>(deepest); i >= 0; i = parent[static_cast<size_t>(i)])
        out.chain.push_back(X[static_cast<size_t>(i)]);
    std::reverse(out.chain.begin(), out.chain.end());

    int levels = height[deepest];
    int best_level = 1;
    std::vector<int> level_size(static_cast<size_t>(levels) + 1, 0);
    for (size_t i = 0; i < m; ++i) ++level_size[static_cast<size_t>(height[i])];
    for (int l = 2; l <= levels; ++l)
        if (level_size[static_cast<size_t>(l)] > level_size[static_cast<size_t>(best_level)])
            best_level = l;
    for (size_t i = 0; i < m; ++i)
        if (height[i] == best_level) out.antichain.push_back(X[i]);
    std::sort(out.antichain.begin(), out.antichain.end());

    // verify against the order definition
    size_t z = out.chain.size();
    if (z * out.antichain.size() < m)
        throw std::logic_error("chain_antichain: |Z|*|A| < |X|");
    for (size_t i = 0; i + 1 < z; ++i)
        if (!chord_precedes(out.chain[i], out.chain[i + 1]))
            throw std::logic_error("chain_antichain: reported chain is not nested");
    for (size_t i = 0; i < out.antichain.size(); ++i)
        for (size_t j = i + 1; j < out.antichain.size(); ++j) {
            Chord e = out.antichain[i], f = out.antichain[j];
            if (chord_precedes(e, f) || chord_precedes(f, e))
                throw std::logic_error("chain_antichain: antichain contains comparable pair");
            if (!(e.a < f.a && f.a < e.b && e.b < f.b))
                throw std::logic_error("chain_antichain: incomparable pair " + chord_str(e) +
                                       "," + chord_str(f) + " is not strictly crossing");
        }
    return out;
}

// -------------------------------------------------------------------------
// The shifting construction: interaction cycles of the lowest antichain
// chord f against A, then k waves of shortcuts along nested prefixes of the
// usable independent chords, each wave moving the whole spectrum window by
// more than 4L so the per-level spectra stay disjoint.
// -------------------------------------------------------------------------

struct Case2Witness {
    Chord f;
    std::vector<Chord> antichain;              // A
    std::vector<Chord> independent;            // I
    std::vector<Chord> usable;                 // I': left of a_f or right of max b(A)
    int x = 0;                                 // common pierced vertex (max a over A)
    int L = 0;
    int k = 0;
    std::vector<std::vector<Chord>> s_chain;   // S_1 subset ... subset S_k
    std::vector<long> level_gaps;              // d_1..d_k
    std::vector<CycleSet> level_spectra;       // S(C_0)..S(C_k)
    bool gap_condition = false;                // d_j - d_i > 4L for all 0 <= i < j
    bool levels_disjoint = false;
    int spectrum_size = 0;                     // |S(H + A + I)|
    int floor_bound = 0;                       // (k+1)(|A| - 1)
};

inline Case2Witness shifted_spectra(int n, Chord f, std::vector<Chord> A, std::vector<Chord> I,
                                    int L, const Limits& lim = {}) {
    std::sort(A.begin(), A.end());
    std::sort(I.begin(), I.end());
    if (A.size() < 2) throw Error("shifted_spectra: need |A| >= 2");
    if (A.front() != f) throw Error("shifted_spectra: f must be the antichain chord with smallest a");
    int max_a = 0, min_b = 1 << 30, max_b = 0;
    for (Chord e : A) {
        if (!valid_chord(e, n)) throw Error("shifted_spectra: invalid chord " + chord_str(e));
        if (chord_gap(e) < L || chord_gap(e) >= 2 * L)
            throw Error("shifted_spectra: chord " + chord_str(e) + " gap outside [L,2L) for L=" +
                        std::to_string(L));
        max_a = std::max(max_a, e.a);
        min_b = std::min(min_b, e.b);
        max_b = std::max(max_b, e.b);
    }
    if (max_a > min_b) throw Error("shifted_spectra: antichain has no common pierced vertex");
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (!(A[i].a < A[j].a && A[j].a < A[i].b && A[i].b < A[j].b))
                throw Error("shifted_spectra: " + chord_str(A[i]) + "," + chord_str(A[j]) +
                            " are not strictly crossing");
    if (!is_independent(I)) throw Error("shifted_spectra: I is not independent");

    Case2Witness w;
    w.f = f;
    w.antichain = A;
    w.independent = I;
    w.x = max_a;
    w.L = L;
    for (Chord e : I)
        if (e.b <= f.a || e.a >= max_b) w.usable.push_back(e);
    if (w.usable.size() < 5)
        throw Error("shifted_spectra: only " + std::to_string(w.usable.size()) +
                    " usable independent chords; need at least 5 (k would be 0)");
    w.k = static_cast<int>(w.usable.size()) / 5;

    std::vector<Cycle> base;
    for (Chord e : A)
        if (e != f) base.push_back(crossing_wrap_cycle(n, f, e));

    auto spectrum_of = [&](const std::vector<Cycle>& cs) {
        CycleSet s(n);
        for (const Cycle& c : cs) s.insert(c.length());
        return s;
    };
    w.level_spectra.push_back(spectrum_of(base));
    for (int i = 1; i <= w.k; ++i) {
        std::vector<Chord> S(w.usable.begin(), w.usable.begin() + 5 * i);
        long d = 0;
        for (Chord e : S) d += chord_gap(e);
        std::vector<Cycle> level;
        for (const Cycle& c : base) {
            Cycle cur = c;
            for (Chord e : S) cur = shortcut(cur, e);
            level.push_back(std::move(cur));
        }
        w.s_chain.push_back(std::move(S));
        w.level_gaps.push_back(d);
        w.level_spectra.push_back(spectrum_of(level));
    }

    int want = static_cast<int>(A.size()) - 1;
    for (const CycleSet& s : w.level_spectra)
        if (s.size() != want)
            throw std::logic_error("shifted_spectra: level spectrum size != |A|-1");

    w.gap_condition = true;
    long prev = 0;
    for (long d : w.level_gaps) {
        if (d - prev <= 4 * static_cast<long>(L)) w.gap_condition = false;
        prev = d;
    }
    w.levels_disjoint = true;
    for (size_t i = 0; i < w.level_spectra.size() && w.levels_disjoint; ++i)
        for (size_t j = i + 1; j < w.level_spectra.size(); ++j)
            if (w.level_spectra[i].intersects(w.level_spectra[j])) {
                w.levels_disjoint = false;
                break;
            }
    if (w.gap_condition && !w.levels_disjoint)
        throw std::logic_error("shifted_spectra: gap condition held but levels overlap");

    std::vector<Chord> all = A;
    all.insert(all.end(), I.begin(), I.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    w.spectrum_size = spectrum(LabelledHamGraph{n, all}, lim).size();
    w.floor_bound = (w.k + 1) * want;
    if (w.gap_condition && w.spectrum_size < w.floor_bound)
        throw std::logic_error("shifted_spectra: spectrum below (k+1)(|A|-1)");
    return w;
}

// -------------------------------------------------------------------------
// Explicit container families and their weight sums.
// -------------------------------------------------------------------------

struct DyadicRational {
    boost::multiprecision::cpp_int num;
    unsigned exp = 0;  // value = num / 2^exp

    void normalize() {
        while (exp > 0 && num != 0 && (num & 1) == 0) {
            num >>= 1;
            --exp;
        }
        if (num == 0) exp = 0;
    }

    void add_inverse_pow2(unsigned k) {  // += 2^-k
        if (k >= exp) {
            num <<= (k - exp);
            exp = k;
            num += 1;
        } else {
            num += boost::multiprecision::cpp_int(1) << (exp - k);
        }
        normalize();
    }

    std::string numerator_str() const { return num.str(); }
    std::string denominator_str() const {
        return (boost::multiprecision::cpp_int(1) << exp).str();
    }
};

struct ContainerFamily {
    int n = 0;
    int p = 0;
    enum class Hypothesis { max_degree, edge_surplus } hypothesis = Hypothesis::max_degree;
    int member_size = 0;  // |F| per member
    int size_floor = 0;   // minimum spectrum size
    struct Member {
        CycleSet set;
        std::vector<Chord> chords;  // provenance
    };
    std::vector<Member> members;
};

// All chord sets F with |F| = ceil(sqrt(p-2)) whose spectrum reaches the
// floor ceil((p-2)/24), materialized under hard combinatorial limits.
inline ContainerFamily family_prime(int n, int p, const Limits& lim = {}) {
    if (n < 3) throw Error("family_prime: n must be at least 3");
    if (p < 2) throw Error("family_prime: p must be at least 2");
    if (n > lim.max_family_n)
        throw Error("family_prime: n=" + std::to_string(n) + " exceeds enumeration limit " +
                    std::to_string(lim.max_family_n));
    int s = 0;
    while (s * s < p - 2) ++s;
    int floor = (p - 2 + 23) / 24;

    std::vector<Chord> all;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (valid_chord({a, b}, n)) all.push_back({a, b});
    if (s > 3) {
        boost::multiprecision::cpp_int combos = 1;
        for (int i = 0; i < s; ++i) combos *= static_cast<int>(all.size()) - i;
        for (int i = 2; i <= s; ++i) combos /= i;
        throw Error("family_prime: |F|=" + std::to_string(s) + " needs " + combos.str() +
                    " chord sets; enumeration refused (limit |F| <= 3)");
    }

    ContainerFamily fam;
    fam.n = n;
    fam.p = p;
    fam.hypothesis = ContainerFamily::Hypothesis::max_degree;
    fam.member_size = s;
    fam.size_floor = floor;

    std::vector<Chord> pick;
    auto consider = [&]() {
        CycleSet sp = spectrum(LabelledHamGraph{n, pick}, lim);
        if (sp.size() >= floor) fam.members.push_back({std::move(sp), pick});
    };
    std::function<void(size_t, int)> rec = [&](size_t from, int left) {
        if (left == 0) {
            consider();
            return;
        }
        for (size_t i = from; i < all.size() && all.size() - i >= static_cast<size_t>(left);
             ++i) {
            pick.push_back(all[i]);
            rec(i + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(0, s);
    return fam;
}

// Exact sum of 2^-|S| over the family members.
inline DyadicRational weight_sum(const ContainerFamily& fam) {
    DyadicRational r;
    for (const auto& m : fam.members) r.add_inverse_pow2(static_cast<unsigned>(m.set.size()));
    return r;
}

struct CoverReport {
    bool pass = false;
    struct Failure {
        size_t index;
        std::string reason;
    };
    std::vector<Failure> failures;
};

// Each graph must satisfy the family's hypothesis and contain some member
// inside its spectrum.
inline CoverReport cover_check(const ContainerFamily& fam,
                               const std::vector<LabelledHamGraph>& graphs,
                               const Limits& lim = {}, int jobs = 1) {
    CoverReport rep;
    std::vector<std::vector<CoverReport::Failure>> partial(
        static_cast<size_t>(std::max(jobs, 1)));
    auto work = [&](size_t worker, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            const LabelledHamGraph& g = graphs[i];
            if (fam.hypothesis == ContainerFamily::Hypothesis::max_degree) {
                std::vector<int> deg(static_cast<size_t>(g.n) + 1, 2);
                int maxdeg = g.n >= 3 ? 2 : 0;
                for (Chord e : g.chords) {
                    maxdeg = std::max(maxdeg, ++deg[static_cast<size_t>(e.a)]);
                    maxdeg = std::max(maxdeg, ++deg[static_cast<size_t>(e.b)]);
                }
                if (maxdeg < fam.p) {
                    partial[worker].push_back(
                        {i, "hypothesis: max degree " + std::to_string(maxdeg) + " < p=" +
                                std::to_string(fam.p)});
                    continue;
                }
            } else {
                if (g.edge_count() < fam.n + fam.p) {
                    partial[worker].push_back({i, "hypothesis: fewer than n + p edges"});
                    continue;
                }
            }
            CycleSet sp = spectrum(g, lim);
            bool covered = false;
            for (const auto& m : fam.members)
                if (m.set.subset_of(sp)) {
                    covered = true;
                    break;
                }
            if (!covered) partial[worker].push_back({i, "no family member inside spectrum"});
        }
    };
    size_t w = static_cast<size_t>(std::max(jobs, 1));
    if (w <= 1 || graphs.size() < 2 * w) {
        work(0, 0, graphs.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (graphs.size() + w - 1) / w;
        for (size_t t = 0; t < w; ++t) {
            size_t lo = t * chunk, hi = std::min(graphs.size(), lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, t, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    for (auto& part : partial)
        rep.failures.insert(rep.failures.end(), part.begin(), part.end());
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const auto& x, const auto& y) { return x.index < y.index; });
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace cyclespec
