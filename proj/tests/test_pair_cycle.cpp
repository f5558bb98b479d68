#include <catch2/catch_amalgamated.hpp>

#include <cyclespec/pair_cycle.hpp>
#include <cyclespec/spectrum.hpp>

#include "oracles.hpp"

using namespace cyclespec;

TEST_CASE("pair kind classification") {
    CHECK(pair_kind({2, 6}, {4, 8}) == PairCycleKind::crossing);
    CHECK(pair_kind({1, 3}, {1, 5}) == PairCycleKind::shared_endpoint);
    CHECK(pair_kind({2, 5}, {7, 10}) == PairCycleKind::disjoint);
    CHECK(pair_kind({2, 9}, {4, 6}) == PairCycleKind::nested);
    CHECK(pair_kind({3, 7}, {7, 12}) == PairCycleKind::shared_endpoint);
}

TEST_CASE("pair cycle spec cases") {
    SECTION("crossing") {
        Cycle c = pair_cycle(10, {2, 6}, {4, 8});
        CHECK(c.length() == 6);
        std::vector<int> vs = c.vertices;
        std::sort(vs.begin(), vs.end());
        CHECK(vs == std::vector<int>{2, 3, 4, 6, 7, 8});
    }
    SECTION("shared endpoint") {
        Cycle c = pair_cycle(8, {1, 3}, {1, 5});
        CHECK(c.length() == 4);
        CHECK(same_cycle(c, Cycle{{1, 3, 4, 5}}));
    }
    SECTION("disjoint") {
        Cycle c = pair_cycle(12, {2, 5}, {7, 10});
        CHECK(c.length() == 8);
        std::vector<int> vs = c.vertices;
        std::sort(vs.begin(), vs.end());
        CHECK(vs == std::vector<int>{1, 2, 5, 6, 7, 10, 11, 12});
    }
    SECTION("nested") {
        Cycle c = pair_cycle(10, {2, 9}, {4, 6});
        CHECK(c.length() == 7);
        std::vector<int> vs = c.vertices;
        std::sort(vs.begin(), vs.end());
        CHECK(vs == std::vector<int>{2, 3, 4, 6, 7, 8, 9});
    }
    SECTION("identical chords rejected") {
        CHECK_THROWS_AS(pair_cycle(10, {2, 6}, {2, 6}), Error);
    }
}

TEST_CASE("pair cycle lengths match the spec examples") {
    CHECK(pair_cycle_length(10, {2, 6}, {4, 8}) == 6);
    CHECK(pair_cycle_length(12, {2, 5}, {7, 10}) == 8);
    CHECK(pair_cycle_length(8, {1, 3}, {1, 5}) == 4);
}

TEST_CASE("pair cycle against brute-force enumeration, small n") {
    for (int n = 5; n <= 10; ++n) {
        std::vector<Chord> chords;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 2; b <= n; ++b)
                if (valid_chord({a, b}, n)) chords.push_back({a, b});
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                Chord e = chords[i], f = chords[j];
                CAPTURE(n, e.a, e.b, f.a, f.b);
                auto found = oracle::cycles_through_pair(n, e, f);
                bool crossing = pair_kind(e, f) == PairCycleKind::crossing;
                REQUIRE(found.size() == (crossing ? 2u : 1u));
                Cycle got = pair_cycle(n, e, f);
                CHECK(got.length() == pair_cycle_length(n, e, f));
                CHECK(is_cycle_of(got, LabelledHamGraph{n, {std::min(e, f), std::max(e, f)}}));
                bool matches_some = false;
                for (const auto& cyc : found)
                    if (same_cycle(got, Cycle{cyc})) matches_some = true;
                CHECK(matches_some);
                // symmetry
                CHECK(same_cycle(got, pair_cycle(n, f, e)));
                if (crossing) {
                    Cycle other = crossing_wrap_cycle(n, e, f);
                    CHECK(got.length() + other.length() == n + 4);
                    bool other_matches = false;
                    for (const auto& cyc : found)
                        if (same_cycle(other, Cycle{cyc})) other_matches = true;
                    CHECK(other_matches);
                }
            }
    }
}

TEST_CASE("shortcut removes exactly the interior labels") {
    SECTION("Hamilton cycle examples") {
        Cycle h10{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
        CHECK(shortcut(h10, {3, 7}).length() == 7);
        Cycle h6{{1, 2, 3, 4, 5, 6}};
        Cycle s = shortcut(h6, {1, 3});
        CHECK(s.length() == 5);
        CHECK_FALSE(s.contains(2));
    }
    SECTION("after a pair cycle") {
        Cycle c = pair_cycle(12, {2, 5}, {7, 10});
        CHECK_THROWS_WITH(shortcut(c, {11, 1}), Catch::Matchers::ContainsSubstring("(11,1)"));
        Cycle s = shortcut(c, {10, 12});
        CHECK(s.length() == 7);
        CHECK_FALSE(s.contains(11));
        CHECK(is_cycle_of(s, LabelledHamGraph{12, {{2, 5}, {7, 10}, {10, 12}}}));
    }
    SECTION("reversed traversal is accepted") {
        Cycle h{{6, 5, 4, 3, 2, 1}};
        CHECK(shortcut(h, {2, 4}).length() == 5);
    }
    SECTION("violations are named") {
        Cycle c = pair_cycle(12, {2, 5}, {7, 10});  // misses 3,4
        CHECK_THROWS_WITH(shortcut(c, {2, 5}), Catch::Matchers::ContainsSubstring("missing"));
        Cycle twisted{{1, 3, 2, 4, 5}};
        CHECK_THROWS_WITH(shortcut(twisted, {1, 4}),
                          Catch::Matchers::ContainsSubstring("not consecutive"));
    }
    SECTION("length arithmetic") {
        Cycle h10{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
        for (int a = 1; a <= 8; ++a)
            for (int b = a + 2; b <= 10; ++b) {
                if (!valid_chord({a, b}, 10)) continue;
                CHECK(shortcut(h10, {a, b}).length() == 10 - (b - a - 1));
            }
    }
}

TEST_CASE("interaction spectrum") {
    CHECK(interaction_spectrum(20, {1, 10}, {{1, 8}, {1, 12}}).sorted() ==
          std::vector<int>{4});
    CHECK(interaction_spectrum(20, {1, 10}, {{1, 10}}).sorted().empty());
    auto s = interaction_spectrum(10, {2, 6}, {{4, 8}, {1, 4}});
    CHECK(s.contains(6));
    CHECK(s.size() == 2);
}

TEST_CASE("pairwise spectrum") {
    auto one = pairwise_spectrum(12, {{2, 5}, {7, 10}});
    CHECK_FALSE(one.undersized);
    CHECK(one.set.size() == 1);

    auto star = pairwise_spectrum(10, {{1, 3}, {1, 5}, {1, 7}});
    CHECK(star.set.sorted() == std::vector<int>{4, 6});

    auto tiny = pairwise_spectrum(10, {{1, 3}});
    CHECK(tiny.undersized);
    CHECK(tiny.set.size() == 0);
}
