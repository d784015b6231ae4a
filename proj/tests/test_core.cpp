#include "doctest.h"
#include "test_util.hpp"
#include "tourney/catalog.hpp"
#include "tourney/landscape.hpp"
#include "tourney/tournament.hpp"
#include "tourney/transitive.hpp"

using namespace tourney;

TEST_CASE("build from arc lists") {
    Tournament cyc = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    for (int v = 0; v < 3; ++v) CHECK(cyc.out_degree(v) == 1);

    // Backward arcs of the K6 ordering; unlisted pairs default forward.
    Tournament k6 = Tournament::from_arcs(6, {{3, 0}, {5, 2}, {5, 0}, {4, 1}});
    CHECK(k6 == named("K6"));

    CHECK(named("C5").is_regular());
    for (int v = 0; v < 5; ++v) CHECK(named("C5").out_degree(v) == 2);

    CHECK_THROWS_AS(Tournament::from_arcs(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_arcs(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_arcs(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_arcs(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("degree handshake") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 12);
        Tournament t = test_util::random_tournament(rng, n);
        int total = 0;
        for (int v = 0; v < n; ++v) total += t.out_degree(v);
        CHECK(total == n * (n - 1) / 2);
    }
}

TEST_CASE("complement") {
    Tournament single(1);
    CHECK(single.complement() == single);

    Tournament tr3(3);  // 0 -> 1 -> 2, 0 -> 2
    Tournament rev = tr3.complement();
    CHECK(rev.arc(2, 1));
    CHECK(rev.arc(1, 0));
    CHECK(rev.arc(2, 0));

    CHECK(test_util::iso_bruteforce(named("C5").complement(), named("C5")));

    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 12);
        Tournament t = test_util::random_tournament(rng, n);
        CHECK(t.complement().complement() == t);
    }
}

TEST_CASE("induced subtournaments") {
    std::mt19937 rng(3);
    Tournament t = test_util::random_tournament(rng, 8);
    CHECK(t.induced(full_set(8)) == t);
    CHECK_THROWS_AS(t.induced(0), std::invalid_argument);

    // K6 restricted to v1..v5 keeps the backward arcs not incident to v6.
    Tournament k6_5 = named("K6").induced(full_set(5));
    CHECK(k6_5 == Tournament::from_arcs(5, {{3, 0}, {4, 1}}));

    // L1 restricted to v1..v5 is C5 itself.
    CHECK(named("L1").induced(full_set(5)) == named("C5"));
}

TEST_CASE("canonical forms") {
    Tournament cyc = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    Tournament cyc2 = cyc.relabel({2, 0, 1});
    CHECK(canonical_form(cyc) == canonical_form(cyc2));
    CHECK(canonical_form(cyc) != canonical_form(Tournament(3)));

    // S1 as defined vs S1 rebuilt from its cyclic ordering.
    auto s1_cyclic = build_from_ordering(
        7, {5, 6, 1, 4, 2, 3, 0}, {{3, 4}, {3, 5}, {4, 5}, {0, 1}, {0, 2}});
    CHECK(canonical_form(s1_cyclic) == canonical_form(named("S1")));

    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Tournament t = test_util::random_tournament(rng, n);
        Tournament r = t.relabel(test_util::random_permutation(rng, n));
        CHECK(canonical_form(t) == canonical_form(r));
        CHECK(from_canonical(canonical_form(t)).size() == n);
        CHECK(canonical_form(from_canonical(canonical_form(t))) == canonical_form(t));
    }

    CHECK_THROWS_AS(canonical_form(Tournament(11)), std::invalid_argument);
}

TEST_CASE("canonical form agrees with brute-force isomorphism on 5-vertex classes") {
    auto classes = enumerate_classes(5);
    REQUIRE(classes.size() == 12);
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = 0; j < classes.size(); ++j) {
            bool canon_eq = canonical_form(classes[i]) == canonical_form(classes[j]);
            CHECK(canon_eq == test_util::iso_bruteforce(classes[i], classes[j]));
            CHECK(canon_eq == is_isomorphic(classes[i], classes[j]));
        }
}

TEST_CASE("isomorphism") {
    Tournament t4(4);
    Tournament with_cycle = Tournament::from_arcs(4, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(is_isomorphic(t4, t4));
    CHECK_FALSE(is_isomorphic(t4, with_cycle));

    // Self-complementarity must be computed, not assumed.
    const Tournament& h18 = named("H18");
    CHECK(is_isomorphic(h18, h18.complement()) ==
          test_util::iso_bruteforce(h18, h18.complement()));
}

TEST_CASE("containment") {
    const Tournament& l1 = named("L1");
    CHECK(contains(l1, l1) == full_set(6));
    CHECK(contains(l1, named("C5")) == full_set(5));

    const Tournament forbidden[] = {named("K6"), named("L1"), named("L2")};
    CHECK(is_free(named("S1"), forbidden));
    CHECK_FALSE(is_free(named("R1"), std::span(&forbidden[0], 1)));
    CHECK(is_free(named("S1"), std::span<const Tournament>{}));

    CHECK_THROWS_AS(contains(named("C5"), named("K6")), std::invalid_argument);
}

TEST_CASE("containment is monotone under supertournaments") {
    std::mt19937 rng(101);
    for (int it = 0; it < 40; ++it) {
        Tournament big = test_util::random_tournament(rng, 8);
        VertexSet x = 1 + (rng() % (full_set(8) - 1));
        if (set_size(x) < 2) x |= vbit(static_cast<int>(rng() % 8));
        Tournament mid = big.induced(x);
        VertexSet y = 1 + (rng() % (full_set(mid.size()) - 1));
        Tournament small = mid.induced(y);
        if (contains(mid, small)) CHECK(contains(big, small).has_value());
    }
}

TEST_CASE("reversal preserves transitivity of induced subsets") {
    std::mt19937 rng(55);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Tournament t = test_util::random_tournament(rng, n);
        VertexSet x = 1 + (rng() % (full_set(n) - 1));
        CHECK(is_transitive(t.induced(x)) == is_transitive(t.complement().induced(x)));
    }
}

TEST_CASE("trn round trip") {
    std::mt19937 rng(77);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 16);
        Tournament t = test_util::random_tournament(rng, n);
        CHECK(Tournament::from_trn(t.to_trn()) == t);
    }

    CHECK(Tournament::from_trn("3\n110\n") == Tournament::from_arcs(3, {{2, 1}}));
    CHECK(Tournament::from_trn("3\n0 1\n1 2\n2 0\n") ==
          Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(Tournament::from_trn("1\n\n").size() == 1);

    CHECK_THROWS_AS(Tournament::from_trn(""), ParseError);
    CHECK_THROWS_AS(Tournament::from_trn("abc\n"), ParseError);
    CHECK_THROWS_AS(Tournament::from_trn("3\n11\n"), ParseError);
    CHECK_THROWS_AS(Tournament::from_trn("3\n0 1\nbroken\n"), ParseError);
    try {
        Tournament::from_trn("3\n11\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
}
