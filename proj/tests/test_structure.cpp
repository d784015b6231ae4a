#include "doctest.h"
#include "test_util.hpp"
#include "tourney/catalog.hpp"
#include "tourney/structure.hpp"
#include "tourney/transitive.hpp"

using namespace tourney;

TEST_CASE("rational arithmetic") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational(1, 1) - Rational(1, 3) == Rational(2, 3));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    CHECK(Rational(2, 4).str() == "1/2");
}

TEST_CASE("homogeneous sets") {
    const Tournament& s1 = named("S1");
    CHECK(is_homogeneous(s1, full_set(7)));
    CHECK(is_homogeneous(s1, vbit(3)));

    // In R1, N+(v7) is the K6 copy and is homogeneous.
    CHECK(is_homogeneous(named("R1"), full_set(6)));

    Tournament tr3(3);
    auto sets = nontrivial_homogeneous_sets(tr3);
    CHECK(sets == std::vector<VertexSet>{vbit(0) | vbit(1), vbit(1) | vbit(2)});

    CHECK(nontrivial_homogeneous_sets(named("C5")).empty());
    CHECK(nontrivial_homogeneous_sets(named("K6")).empty());
}

TEST_CASE("primality") {
    CHECK(is_prime(named("S1")));
    CHECK_FALSE(is_prime(named("R1")));
    CHECK(is_prime(named("H1")));
    CHECK(is_prime(named("C5")));
    CHECK(is_prime(named("K6")));

    std::mt19937 rng(71);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        Tournament t = test_util::random_tournament(rng, n);
        CHECK(is_prime(t) == is_prime(t.complement()));
    }
}

TEST_CASE("intervals of a transitive order are homogeneous") {
    Tournament t8(8);
    for (int lo = 0; lo < 8; ++lo)
        for (int len = 2; lo + len <= 8 && len < 8; ++len) {
            VertexSet s = (full_set(lo + len)) & ~full_set(lo);
            CHECK(is_homogeneous(t8, s));
        }
}

TEST_CASE("directed density") {
    Tournament cyc = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    DensityValue d = directed_density(cyc, vbit(0), vbit(1) | vbit(2));
    CHECK(d.value() == Rational(1, 2));

    Tournament t4(4);
    CHECK(directed_density(t4, vbit(0) | vbit(1), vbit(2) | vbit(3)).value() == Rational(1, 1));
    CHECK(directed_density(t4, vbit(2) | vbit(3), vbit(0) | vbit(1)).value() == Rational(0, 1));

    CHECK_THROWS_AS(directed_density(t4, vbit(0), vbit(0)), std::invalid_argument);
    CHECK_THROWS_AS(directed_density(t4, 0, vbit(0)), std::invalid_argument);

    std::mt19937 rng(73);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 10);
        Tournament t = test_util::random_tournament(rng, n);
        VertexSet x = 1 + (rng() % (full_set(n) - 1));
        VertexSet y = full_set(n) & ~x;
        if (y == 0) continue;
        CHECK(directed_density(t, x, y).value() + directed_density(t, y, x).value() == Rational(1, 1));
    }
}

TEST_CASE("smooth structure validation") {
    Tournament t4(4);  // transitive: 0 -> 1 -> 2 -> 3
    SmoothStructureSpec good;
    good.c = Rational(1, 4);
    good.lambda = Rational(1, 2);
    good.w = {0, 0};
    good.sets = {vbit(0), vbit(1)};
    CHECK(validate_smooth_structure(t4, good).valid());

    SmoothStructureSpec bad = good;
    bad.sets = {vbit(1), vbit(0)};  // second set beats the first
    auto report = validate_smooth_structure(t4, bad);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].kind == SmoothViolation::Kind::density_from);
    CHECK(report.violations[1].kind == SmoothViolation::Kind::density_to);

    SmoothStructureSpec overlapping = good;
    overlapping.sets = {vbit(0), vbit(0)};
    CHECK_THROWS_AS(validate_smooth_structure(t4, overlapping), std::invalid_argument);

    // JSON round trip keeps the spec intact.
    auto parsed = SmoothStructureSpec::from_json(good.to_json());
    CHECK(parsed.c == good.c);
    CHECK(parsed.lambda == good.lambda);
    CHECK(parsed.w == good.w);
    CHECK(parsed.sets == good.sets);
}

TEST_CASE("transitive-set clauses use exact tr") {
    // C5 has tr = 3, so a transitive set needs >= 3 vertices when c = 1.
    const Tournament& c5 = named("C5");
    SmoothStructureSpec spec;
    spec.c = Rational(1, 1);
    spec.lambda = Rational(1, 2);
    spec.w = {1};
    spec.sets = {vbit(0) | vbit(1)};
    auto report = validate_smooth_structure(c5, spec);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == SmoothViolation::Kind::transitive_size);
}

TEST_CASE("intersection bound basics") {
    Tournament t4(4);
    SmoothStructureSpec spec;
    spec.c = Rational(1, 4);
    spec.lambda = Rational(1, 4);
    spec.w = {0, 0};
    spec.sets = {vbit(0) | vbit(1), vbit(2) | vbit(3)};
    REQUIRE(validate_smooth_structure(t4, spec).valid());

    // Empty A: the intersection is S* itself and the bound is |S*|.
    auto rep = check_intersection_bound(t4, spec, 0, vbit(0) | vbit(1), 0);
    CHECK(rep.intersection_size == 2);
    CHECK(rep.bound == Rational(2, 1));
    CHECK(rep.holds);

    // Complete arcs between the sets: both sides stay at |S*|-ish.
    rep = check_intersection_bound(t4, spec, 0, vbit(0) | vbit(1), vbit(2));
    CHECK(rep.intersection_size == 2);
    CHECK(rep.holds);

    CHECK_THROWS_AS(check_intersection_bound(t4, spec, 0, vbit(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(check_intersection_bound(t4, spec, 0, vbit(0), vbit(1)), std::invalid_argument);
    CHECK_THROWS_AS(check_intersection_bound(t4, spec, 5, vbit(0), 0), std::invalid_argument);
}
