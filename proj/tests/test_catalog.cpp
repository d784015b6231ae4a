#include <map>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "tourney/catalog.hpp"
#include "tourney/structure.hpp"
#include "tourney/transitive.hpp"

using namespace tourney;

TEST_CASE("catalog inventory") {
    CHECK(catalog().size() == 89);
    int s = 0, r = 0, h = 0;
    for (const auto& e : catalog()) {
        if (e.id[0] == 'S') ++s;
        if (e.id[0] == 'R') ++r;
        if (e.id[0] == 'H') ++h;
        CHECK(e.value.size() == (e.id == "C5" ? 5 : (e.id == "L1" || e.id == "L2" || e.id == "K6" ? 6 : 7)));
    }
    CHECK(s == 15);
    CHECK(r == 11);
    CHECK(h == 59);
    CHECK_THROWS_AS(named("S99"), std::invalid_argument);
    CHECK(catalog_has("H59"));
    CHECK_FALSE(catalog_has("H60"));
}

TEST_CASE("named constructions match their defining data") {
    const Tournament& c5 = named("C5");
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.out_degree(v) == 2);
        CHECK(c5.in_degree(v) == 2);
    }

    // L1: v6 adjacent to exactly one vertex of C5.
    CHECK(named("L1").out_neighbors(5) == vbit(4));

    // L2: v6 adjacent from the cyclic triangle {v1,v2,v4}.
    CHECK(named("L2").in_neighbors(5) == (vbit(0) | vbit(1) | vbit(3)));
    Tournament tri = named("C5").induced(vbit(0) | vbit(1) | vbit(3));
    CHECK_FALSE(is_transitive(tri));

    // R1: v7 complete to the K6 copy.
    CHECK(named("R1").out_degree(6) == 6);
    CHECK(named("R1").induced(full_set(6)) == named("K6"));

    // H1 = L1 + v7 with N+(v7) = {v6}.
    CHECK(named("H1").out_neighbors(6) == vbit(5));
    CHECK(named("H1").induced(full_set(6)) == named("L1"));
}

TEST_CASE("build_from_ordering validates its data") {
    CHECK_THROWS_AS(build_from_ordering(3, {0, 1, 2}, {{0, 2}}), std::invalid_argument);
    Tournament t = build_from_ordering(3, {0, 1, 2}, {{2, 0}});
    CHECK(t.arc(2, 0));
    CHECK(t.arc(0, 1));
    CHECK(t.arc(1, 2));
}

TEST_CASE("every claimed ordering verifies") {
    int checked = 0;
    for (const auto& claim : claimed_orderings()) {
        OrderingCheck check = verify_ordering(claim);
        INFO(claim.target, " ", claim.label, " (", claim.group, ")");
        CHECK(check.backward_consistent);
        CHECK(check.isomorphic);
        ++checked;
    }
    CHECK(checked == static_cast<int>(claimed_orderings().size()));

    // Batch tallies: 7 S tournaments x 2, 11 H tournaments x 2, then the
    // mixed batches.
    std::map<std::string, int> per_group;
    for (const auto& claim : claimed_orderings()) ++per_group[claim.group];
    CHECK(per_group["S singles"] == 14);
    CHECK(per_group["H singles"] == 22);
    CHECK(per_group["pairs"] == 17);
    CHECK(per_group["triples"] == 16);
}

TEST_CASE("corrections table lists the known repairs") {
    REQUIRE(corrections().size() == 2);
    CHECK(corrections()[0].location.find("theta_4") != std::string::npos);
    CHECK(corrections()[1].location.find("theta_7") != std::string::npos);
}

TEST_CASE("catalog claim suite") {
    CatalogReport report = verify_catalog();
    for (const auto& claim : report.claims) {
        INFO(claim.name, ": ", claim.detail);
        CHECK(claim.pass);
    }
    CHECK(report.all_pass());

    // Complement closure of the extended families is definitional; spot
    // check that self-complementary members really are such.
    for (const auto& id : report.self_complementary)
        CHECK(is_isomorphic(named(id), named(id).complement()));

    // The report serializes.
    CHECK(report.to_json().find("ordering_checks") != std::string::npos);
}

TEST_CASE("catalog construction is deterministic across calls") {
    for (const auto& e : catalog()) CHECK(named(e.id).to_trn() == e.value.to_trn());
}
