#include <catch2/catch_amalgamated.hpp>

#include <cyclespec/core.hpp>
#include <cyclespec/graph6.hpp>
#include <cyclespec/io.hpp>

#include <sstream>

using namespace cyclespec;

TEST_CASE("make_ham_graph validates and collapses chords") {
    auto g = make_ham_graph(6, {{1, 3}, {1, 4}});
    CHECK(to_general(g).edge_count() == 8);

    CHECK_THROWS_WITH(make_ham_graph(6, {{1, 2}}),
                      Catch::Matchers::ContainsSubstring("(1,2)") &&
                          Catch::Matchers::ContainsSubstring("Hamilton"));
    CHECK_THROWS_WITH(make_ham_graph(6, {{1, 6}}),
                      Catch::Matchers::ContainsSubstring("(1,6)"));
    CHECK_THROWS_AS(make_ham_graph(6, {{0, 3}}), Error);
    CHECK_THROWS_AS(make_ham_graph(6, {{4, 3}}), Error);
    CHECK_THROWS_AS(make_ham_graph(2, {}), Error);

    auto dup = make_ham_graph(8, {{2, 5}, {2, 5}, {1, 4}});
    CHECK(dup.chords.size() == 2);
    CHECK(std::is_sorted(dup.chords.begin(), dup.chords.end()));
}

TEST_CASE("chord_gap") {
    CHECK(chord_gap({3, 7}) == 3);
    CHECK(chord_gap({1, 3}) == 1);
    CHECK(chord_gap({2, 9}) == 6);
}

TEST_CASE("to_general produces Hamilton edges plus chords") {
    CHECK(to_general(make_ham_graph(4, {})).edge_count() == 4);
    CHECK(to_general(make_ham_graph(5, {{1, 3}})).edge_count() == 6);
    CHECK(to_general(make_ham_graph(6, {{1, 3}, {2, 6}, {3, 5}})).edge_count() == 9);
}

TEST_CASE("edge classification is total") {
    int n = 9;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            EdgeKind k = classify_edge(a, b, n);
            bool hamilton = (b == a + 1) || (a == 1 && b == n);
            CHECK(k == (hamilton ? EdgeKind::hamilton : EdgeKind::chord));
        }
    CHECK(classify_edge(3, 3, 9) == EdgeKind::invalid);
    CHECK(classify_edge(5, 2, 9) == EdgeKind::invalid);
    CHECK(classify_edge(1, 10, 9) == EdgeKind::invalid);
}

TEST_CASE("vertex and edge counts survive the round trip") {
    for (int n = 4; n <= 10; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 1; a + 3 <= n; a += 3)
            if (classify_edge(a, a + 3, n) == EdgeKind::chord) pairs.push_back({a, a + 3});
        auto g = make_ham_graph(n, pairs);
        auto gg = to_general(g);
        CHECK(gg.n == n);
        CHECK(gg.edge_count() == n + static_cast<long>(g.chords.size()));
    }
}

TEST_CASE("ham graph text format round trip") {
    auto g = make_ham_graph(10, {{2, 6}, {4, 8}, {1, 5}});
    std::stringstream ss;
    write_ham_graph(ss, g);
    auto back = read_ham_graph(ss);
    CHECK(back.n == g.n);
    CHECK(back.chords == g.chords);
}

TEST_CASE("graph6 round trip and error reporting") {
    GeneralGraph g(5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 1);
    g.add_edge(1, 3);
    auto back = graph6_decode(graph6_encode(g));
    CHECK(back.n == 5);
    CHECK(back.edge_count() == 6);
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) CHECK(back.has_edge(u, v) == g.has_edge(u, v));

    CHECK_THROWS_AS(graph6_decode(""), Error);
    CHECK_THROWS_AS(graph6_decode("D"), Error);   // truncated
    CHECK_THROWS_AS(graph6_decode("~~~"), Error); // extended header
}

TEST_CASE("cycle canonicalization") {
    Cycle a{{3, 5, 2, 7}};
    Cycle b{{7, 2, 5, 3}};
    Cycle c{{3, 5, 7, 2}};
    CHECK(same_cycle(a, b));
    CHECK_FALSE(same_cycle(a, c));
}
