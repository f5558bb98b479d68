#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "config.hpp"
#include "graph6.hpp"
#include "spectrum.hpp"

namespace cyclespec {

// Record of one census run: which cycle sets occur over a scanned universe
// of n-vertex graphs. Distinct sets are kept as sorted length-bitmasks
// (bit l = length l), which pins the output order.
struct CensusRecord {
    int n = 0;
    std::uint64_t graphs_scanned = 0;
    std::vector<std::uint32_t> distinct_masks;
    std::string source;

    std::uint64_t count() const { return distinct_masks.size(); }

    std::vector<CycleSet> distinct_sets() const {
        std::vector<CycleSet> out;
        out.reserve(distinct_masks.size());
        for (std::uint32_t m : distinct_masks) {
            CycleSet s(n);
            for (int l = 3; l <= n; ++l)
                if ((m >> l) & 1) s.insert(l);
            out.push_back(std::move(s));
        }
        return out;
    }
};

namespace detail {

// Cycle-length bitmask of a graph given as n <= 16 adjacency bitmasks.
inline std::uint32_t spectrum_mask16(const std::array<std::uint16_t, 16>& adj, int n) {
    std::vector<std::uint64_t> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = adj[static_cast<size_t>(i)];
    return static_cast<std::uint32_t>(spectrum_lengths(rows, n));
}

}  // namespace detail

// Exhaustive census over all 2^C(n,2) labeled graphs. Deterministic; the
// worker count only changes wall-clock time.
inline CensusRecord census_exhaustive(int n, const RunConfig& cfg = {}) {
    if (n < 1) throw Error("census: n must be positive");
    if (n > cfg.limits.max_census_n)
        throw Error("census: exhaustive mode limited to n <= " +
                    std::to_string(cfg.limits.max_census_n) + " (2^C(n,2) labeled graphs); got n=" +
                    std::to_string(n));
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edge_of(static_cast<size_t>(m));
    {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edge_of[static_cast<size_t>(k++)] = {i, j};
    }
    std::uint64_t total = std::uint64_t{1} << m;
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::set<std::uint32_t>> partial(static_cast<size_t>(jobs));

    auto work = [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        auto& seen = partial[static_cast<size_t>(worker)];
        std::array<std::uint16_t, 16> adj{};
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            adj.fill(0);
            std::uint64_t rest = mask;
            while (rest) {
                int e = __builtin_ctzll(rest);
                rest &= rest - 1;
                auto [i, j] = edge_of[static_cast<size_t>(e)];
                adj[static_cast<size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                adj[static_cast<size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
            }
            seen.insert(detail::spectrum_mask16(adj, n));
        }
    };
    if (jobs == 1) {
        work(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + static_cast<std::uint64_t>(jobs) - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            std::uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, t, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    std::set<std::uint32_t> all;
    for (auto& p : partial) all.insert(p.begin(), p.end());
    CensusRecord rec;
    rec.n = n;
    rec.graphs_scanned = total;
    rec.distinct_masks.assign(all.begin(), all.end());
    rec.source = "exhaustive-labeled";
    return rec;
}

// Census over a graph6 stream of (typically canonical non-isomorphic)
// graphs. Workers own disjoint line ranges; per-shard checkpoints make the
// run resumable. The merge is a set union, so sharding never changes the
// result.
inline CensusRecord census_stream(const std::string& path, const RunConfig& cfg = {},
                                  const std::string& checkpoint_dir = "") {
    std::ifstream in(path);
    if (!in) throw Error("census: cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw Error("census: no graphs in " + path);

    int jobs = std::max(1, cfg.jobs);
    std::vector<std::set<std::uint32_t>> partial(static_cast<size_t>(jobs));
    std::vector<std::string> errors(static_cast<size_t>(jobs));
    int expect_n = -1;

    auto shard_file = [&](int worker) {
        return checkpoint_dir + "/shard_" + std::to_string(worker) + ".ckpt";
    };
    auto load_checkpoint = [&](int worker, size_t lo) -> size_t {
        if (checkpoint_dir.empty()) return lo;
        std::ifstream ck(shard_file(worker));
        if (!ck) return lo;
        size_t done;
        if (!(ck >> done)) return lo;
        std::uint32_t mask;
        while (ck >> mask) partial[static_cast<size_t>(worker)].insert(mask);
        return std::max(lo, done);
    };
    auto save_checkpoint = [&](int worker, size_t next) {
        if (checkpoint_dir.empty()) return;
        std::ofstream ck(shard_file(worker), std::ios::trunc);
        ck << next << "\n";
        for (std::uint32_t m : partial[static_cast<size_t>(worker)]) ck << m << "\n";
    };

    if (!checkpoint_dir.empty()) std::filesystem::create_directories(checkpoint_dir);

    size_t chunk = (lines.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
    auto work = [&](int worker, size_t lo, size_t hi) {
        size_t start = load_checkpoint(worker, lo);
        for (size_t i = start; i < hi; ++i) {
            try {
                GeneralGraph g = graph6_decode(lines[i]);
                if (g.n > cfg.limits.max_stream_n)
                    throw Error("n=" + std::to_string(g.n) + " exceeds stream limit " +
                                std::to_string(cfg.limits.max_stream_n));
                if (g.n != expect_n)
                    throw Error("n=" + std::to_string(g.n) + " differs from first line (n=" +
                                std::to_string(expect_n) + ")");
                auto adj = detail::adjacency_masks(g);
                std::uint64_t lengths = detail::spectrum_lengths(adj, g.n);
                partial[static_cast<size_t>(worker)].insert(static_cast<std::uint32_t>(lengths));
            } catch (const Error& e) {
                errors[static_cast<size_t>(worker)] =
                    "census: line " + std::to_string(i + 1) + ": " + e.what();
                return;
            }
            if (!checkpoint_dir.empty() && (i - start + 1) % 4096 == 0) save_checkpoint(worker, i + 1);
        }
        save_checkpoint(worker, hi);
    };

    {
        // n is taken from the first line up front so mismatches fail loudly
        GeneralGraph g0 = graph6_decode(lines[0]);
        expect_n = g0.n;
    }
    if (jobs == 1) {
        work(0, 0, lines.size());
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) {
            size_t lo = chunk * static_cast<size_t>(t);
            size_t hi = std::min(lines.size(), lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, t, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    for (const auto& err : errors)
        if (!err.empty()) throw Error(err);

    std::set<std::uint32_t> all;
    for (auto& p : partial) all.insert(p.begin(), p.end());
    CensusRecord rec;
    rec.n = expect_n;
    rec.graphs_scanned = lines.size();
    rec.distinct_masks.assign(all.begin(), all.end());
    rec.source = "graph6-stream";
    return rec;
}

// Faudree's lower-bound construction: Hamilton path 1..n plus the star edges
// {1,a} for a in A, A a subset of the upper half {n/2+1,...,n}. Its spectrum
// meets the upper half exactly in A.
inline GeneralGraph faudree(int n, const std::vector<int>& A) {
    if (n < 2 || n % 2 != 0) throw Error("faudree: n must be even and >= 2, got " + std::to_string(n));
    GeneralGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    for (int a : A) {
        if (a < n / 2 + 1 || a > n)
            throw Error("faudree: a=" + std::to_string(a) + " outside {" +
                        std::to_string(n / 2 + 1) + ",...," + std::to_string(n) + "}");
        g.add_edge(1, a);
    }
    return g;
}

// Number of distinct spectra over all 2^(n/2) choices of A; equals 2^(n/2)
// because distinct upper-half intersections force distinct spectra.
inline std::uint64_t faudree_census(int n, const Limits& lim = {}) {
    if (n < 2 || n % 2 != 0) throw Error("faudree_census: n must be even and >= 2");
    if (n > 16) throw Error("faudree_census: limited to n <= 16, got " + std::to_string(n));
    int half = n / 2;
    std::set<std::uint32_t> distinct;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << half); ++pick) {
        std::vector<int> A;
        for (int i = 0; i < half; ++i)
            if ((pick >> i) & 1) A.push_back(half + 1 + i);
        GeneralGraph g = faudree(n, A);
        auto adj = detail::adjacency_masks(g);
        distinct.insert(static_cast<std::uint32_t>(detail::spectrum_lengths(adj, n)));
    }
    return distinct.size();
}

// Membership flags for the four covering families of graphs: short longest
// cycle, few edges, an induced Hamiltonian subgraph of high degree, or one
// with an edge surplus. Witness searches are the constructive ones (a vertex
// off a longest cycle with many neighbours on it; the induced graph on the
// cycle), not general subgraph searches. Logs are base 2; circumference of
// an acyclic graph is 0.
struct PartitionReport {
    bool g1 = false, g2 = false, g3 = false, g4 = false;
    int circumference = 0;

    bool covered() const { return g1 || g2 || g3 || g4; }
};

inline PartitionReport partition_check(const GeneralGraph& g, const Limits& lim = {}) {
    if (g.n < 3) throw Error("partition_check: n must be at least 3");
    PartitionReport rep;
    CycleSet sp = spectrum(g, lim);
    rep.circumference = circumference(sp);
    double n = g.n;
    double log_n = std::log2(n);
    rep.g1 = rep.circumference <= n - std::sqrt(n) / (4 * log_n);
    rep.g2 = !rep.g1 && g.edge_count() <= n + n / (4 * log_n);
    if (rep.circumference >= 3) {
        Cycle longest = *find_cycle_of_length(g, rep.circumference, lim);
        std::vector<char> on_cycle(static_cast<size_t>(g.n) + 1, 0);
        for (int v : longest.vertices) on_cycle[static_cast<size_t>(v)] = 1;
        double deg_threshold = std::sqrt(n) / 4;
        // induced graph on the cycle
        long induced_edges = 0;
        for (int v : longest.vertices) {
            int d = 0;
            for (int u : g.adj[static_cast<size_t>(v)])
                if (on_cycle[static_cast<size_t>(u)]) ++d;
            induced_edges += d;
            if (d >= deg_threshold) rep.g3 = true;
        }
        induced_edges /= 2;
        if (induced_edges >= longest.length() + n / (8 * log_n)) rep.g4 = true;
        // a vertex off the cycle with many neighbours on it
        for (int v = 1; v <= g.n && !rep.g3; ++v) {
            if (on_cycle[static_cast<size_t>(v)]) continue;
            int hits = 0;
            for (int u : g.adj[static_cast<size_t>(v)])
                if (on_cycle[static_cast<size_t>(u)]) ++hits;
            if (hits >= deg_threshold) rep.g3 = true;
        }
    }
    return rep;
}

// Count comparisons against the trivial 2^(n-2) subset bound and the 2^(n/2)
// lower-bound floor. No claims about hidden constants.
struct BoundsReport {
    int n = 0;
    std::uint64_t count = 0;
    std::uint64_t trivial_bound = 0;  // 2^(n-2)
    std::uint64_t faudree_floor = 0;  // 2^(floor(n/2))
    double ratio = 0;                 // count / 2^(n-2)
};

inline BoundsReport bounds_report(const CensusRecord& rec) {
    if (rec.n < 2 || rec.n > 62) throw Error("bounds_report: n out of range");
    BoundsReport out;
    out.n = rec.n;
    out.count = rec.count();
    out.trivial_bound = std::uint64_t{1} << (rec.n - 2);
    out.faudree_floor = std::uint64_t{1} << (rec.n / 2);
    out.ratio = static_cast<double>(out.count) / static_cast<double>(out.trivial_bound);
    return out;
}

}  // namespace cyclespec
