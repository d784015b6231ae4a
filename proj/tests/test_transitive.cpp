#include "doctest.h"
#include "test_util.hpp"
#include "tourney/catalog.hpp"
#include "tourney/transitive.hpp"

using namespace tourney;

TEST_CASE("is_transitive") {
    CHECK(is_transitive(Tournament(1)));
    CHECK(is_transitive(Tournament(5)));
    CHECK_FALSE(is_transitive(Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})));

    // Equivalent characterization: no 3-subset induces a cycle.
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Tournament t = test_util::random_tournament(rng, n);
        CHECK(is_transitive(t) == (test_util::tr_bruteforce(t) == n));
    }
}

TEST_CASE("tr on named examples") {
    CHECK(tr(Tournament(6)).size == 6);
    CHECK(tr(Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})).size == 2);
    CHECK(test_util::tr_bruteforce(named("C5")) == 3);  // oracle over all 2^5 subsets
    CHECK(tr(named("C5")).size == 3);
}

TEST_CASE("tr matches the subset oracle and is complement-invariant") {
    std::mt19937 rng(13);
    for (int it = 0; it < 80; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        Tournament t = test_util::random_tournament(rng, n);
        int oracle = test_util::tr_bruteforce(t);
        TrResult r = tr(t);
        CHECK(r.size == oracle);
        CHECK(r.size == tr_size(t.complement()));
        CHECK(set_size(r.witness) == r.size);
        CHECK(is_transitive(t.induced(r.witness)));
        CHECK(r.size >= (n >= 2 ? 2 : 1));
    }
}

TEST_CASE("tr witness is the lexicographically smallest maximum") {
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);
        Tournament t = test_util::random_tournament(rng, n);
        TrResult r = tr(t);
        // Oracle: scan subsets in a lex-smallest-first order of sorted
        // vertex lists and pick the first maximum transitive one.
        VertexSet best = 0;
        for (VertexSet s = 1; s < (1ULL << n); ++s) {
            if (set_size(s) != r.size || !is_transitive(t.induced(s))) continue;
            if (best == 0) {
                best = s;
                continue;
            }
            VertexSet diff = best ^ s;
            if (set_contains(s, lowest_vertex(diff))) best = s;
        }
        CHECK(r.witness == best);
    }
}

TEST_CASE("tr is monotone under induced subtournaments") {
    std::mt19937 rng(19);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Tournament t = test_util::random_tournament(rng, n);
        VertexSet x = 1 + (rng() % (full_set(n) - 1));
        CHECK(tr_size(t.induced(x)) <= tr_size(t));
    }
}

TEST_CASE("tr_bounds sandwiches the exact value") {
    std::mt19937 rng(29);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 11);
        Tournament t = test_util::random_tournament(rng, n);
        int exact = tr_size(t);
        TrBounds generous = tr_bounds(t, 1'000'000);
        CHECK(generous.exact);
        CHECK(generous.lower == exact);
        CHECK(generous.upper == exact);
        TrBounds tight = tr_bounds(t, 1);
        CHECK(tight.lower <= exact);
        CHECK(exact <= tight.upper);
        CHECK(tight.lower >= 1);
    }
}

TEST_CASE("ramsey bound for small k") {
    CHECK(check_ramsey_bound(2).holds);
    CHECK(check_ramsey_bound(3).holds);
    CHECK_THROWS_AS(check_ramsey_bound(1), std::invalid_argument);
    CHECK_THROWS_AS(check_ramsey_bound(5), std::invalid_argument);
}
