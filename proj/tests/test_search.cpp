#include "doctest.h"
#include "test_util.hpp"
#include "tourney/catalog.hpp"
#include "tourney/search.hpp"
#include "tourney/transitive.hpp"

using namespace tourney;

TEST_CASE("search config validation") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.forbidden = {named("K6")};
    CHECK_THROWS_AS(local_search(cfg), std::invalid_argument);
    cfg.forbidden.clear();
    cfg.restarts = 0;
    CHECK_THROWS_AS(local_search(cfg), std::invalid_argument);
}

TEST_CASE("unconstrained search on three vertices reaches the cyclic triangle") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.seed = 1;
    cfg.max_steps = 50;
    cfg.restarts = 2;
    SearchResult r = local_search(cfg);
    CHECK(r.tr_value == 2);
    CHECK(r.free_certificate);
}

TEST_CASE("certified K6-free run") {
    SearchConfig cfg;
    cfg.n = 6;
    cfg.forbidden = {named("K6")};
    cfg.seed = 9;
    cfg.max_steps = 200;
    cfg.restarts = 2;
    SearchResult r = local_search(cfg);
    CHECK(r.free_certificate);
    const Tournament forbidden[] = {named("K6")};
    CHECK(is_free(r.best, forbidden));
    CHECK(r.tr_value == tr(r.best).size);
}

TEST_CASE("identical seeds give identical results") {
    SearchConfig cfg;
    cfg.n = 8;
    cfg.forbidden = {named("C5")};
    cfg.seed = 424242;
    cfg.max_steps = 120;
    cfg.restarts = 3;
    SearchResult a = local_search(cfg);
    SearchResult b = local_search(cfg);
    CHECK(search_result_json(a) == search_result_json(b));
    CHECK(a.best == b.best);
}

TEST_CASE("per-restart best trace never increases") {
    SearchConfig cfg;
    cfg.n = 9;
    cfg.forbidden = {named("C5")};
    cfg.seed = 5;
    cfg.max_steps = 150;
    cfg.restarts = 2;
    SearchResult r = local_search(cfg);
    for (const auto& trace : r.trace) {
        REQUIRE(!trace.best_by_step.empty());
        for (size_t i = 1; i < trace.best_by_step.size(); ++i) {
            CHECK(trace.best_by_step[i].second < trace.best_by_step[i - 1].second);
            CHECK(trace.best_by_step[i].first > trace.best_by_step[i - 1].first);
        }
    }
}
