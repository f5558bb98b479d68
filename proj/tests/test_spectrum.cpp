#include <catch2/catch_amalgamated.hpp>

#include <cyclespec/containers.hpp>
#include <cyclespec/generators.hpp>
#include <cyclespec/pair_cycle.hpp>
#include <cyclespec/spectrum.hpp>

#include "oracles.hpp"

using namespace cyclespec;

namespace {

GeneralGraph cycle_graph(int n) {
    GeneralGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    return g;
}

}  // namespace

TEST_CASE("spectrum of a plain cycle is a singleton") {
    CHECK(spectrum(cycle_graph(6)).sorted() == std::vector<int>{6});
}

TEST_CASE("spectrum of a path is empty") {
    GeneralGraph g(5);
    for (int v = 1; v < 5; ++v) g.add_edge(v, v + 1);
    CHECK(spectrum(g).sorted().empty());
}

TEST_CASE("spectrum of H plus two star chords") {
    auto g = make_ham_graph(6, {{1, 3}, {1, 4}});
    CHECK(spectrum(g).sorted() == std::vector<int>{3, 4, 5, 6});
    CHECK(spectrum(to_general(g)).sorted() == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("size limits refuse explicitly") {
    CHECK_THROWS_WITH(spectrum(GeneralGraph(17)), Catch::Matchers::ContainsSubstring("16"));
    std::vector<std::pair<int, int>> many;
    for (int a = 1; a <= 25; ++a) many.push_back({a, a + 2});
    CHECK_THROWS_WITH(spectrum(make_ham_graph(40, many)),
                      Catch::Matchers::ContainsSubstring("24"));
    Limits raised;
    raised.max_chords = 30;
    CHECK_NOTHROW(spectrum(make_ham_graph(40, many), raised));
}

TEST_CASE("structured spectrum equals general spectrum on random chord sets") {
    Rng rng(12345);
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.uniform(4, 12);
        std::vector<std::pair<int, int>> pairs;
        int want = rng.uniform(0, 5);
        for (int i = 0; i < want; ++i) {
            int a = rng.uniform(1, n - 2);
            int b = rng.uniform(a + 2, n);
            if (classify_edge(a, b, n) == EdgeKind::chord) pairs.push_back({a, b});
        }
        auto g = make_ham_graph(n, pairs);
        CAPTURE(n, g.chords.size(), trial);
        CHECK(spectrum(g).sorted() == spectrum(to_general(g)).sorted());
    }
}

TEST_CASE("general spectrum matches plain cycle enumeration") {
    Rng rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        int n = rng.uniform(3, 9);
        GeneralGraph g(n);
        int edges = rng.uniform(0, n * (n - 1) / 2);
        for (int i = 0; i < edges; ++i) {
            int u = rng.uniform(1, n), v = rng.uniform(1, n);
            if (u != v) g.add_edge(u, v);
        }
        auto lens = oracle::cycle_lengths(g);
        auto got = spectrum(g).sorted();
        CHECK(std::vector<int>(lens.begin(), lens.end()) == got);
    }
}

TEST_CASE("dense bipartite graphs fall back to the exact subset DP") {
    GeneralGraph g(14);  // K_{7,7}: even cycles 4..14 only
    for (int u = 1; u <= 7; ++u)
        for (int v = 8; v <= 14; ++v) g.add_edge(u, v);
    CHECK(spectrum(g).sorted() == std::vector<int>{4, 6, 8, 10, 12, 14});
}

TEST_CASE("spectrum contains pairwise interactions and the Hamilton cycle") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(8, 16);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 4; ++i) {
            int a = rng.uniform(1, n - 2);
            int b = rng.uniform(a + 2, n);
            if (classify_edge(a, b, n) == EdgeKind::chord) pairs.push_back({a, b});
        }
        auto g = make_ham_graph(n, pairs);
        auto sp = spectrum(g);
        CHECK(sp.contains(n));
        if (g.chords.size() >= 2) {
            auto pw = pairwise_spectrum(n, g.chords);
            CHECK(pw.set.subset_of(sp));
        }
    }
}

TEST_CASE("shortcut closure: independent subsets of the chord set") {
    Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(8, 16);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 6; ++i) {
            int a = rng.uniform(1, n - 2);
            int b = rng.uniform(a + 2, n);
            if (classify_edge(a, b, n) == EdgeKind::chord) pairs.push_back({a, b});
        }
        auto g = make_ham_graph(n, pairs);
        auto I = max_independent(g.chords);
        auto sp = spectrum(g);
        for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << I.size()); ++sub) {
            int len = n;
            for (size_t i = 0; i < I.size(); ++i)
                if ((sub >> i) & 1) len -= chord_gap(I[i]);
            CHECK(sp.contains(len));
        }
    }
}

TEST_CASE("find_cycle_of_length returns a genuine cycle") {
    auto g = to_general(make_ham_graph(10, {{2, 6}, {4, 8}}));
    auto sp = spectrum(g);
    for (int l = 3; l <= 10; ++l) {
        auto c = find_cycle_of_length(g, l);
        CHECK(c.has_value() == sp.contains(l));
        if (c) {
            CHECK(c->length() == l);
            CHECK(is_cycle_of(*c, g));
        }
    }
}
