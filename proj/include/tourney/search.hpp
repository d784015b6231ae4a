#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Configuration for the forbidden-subtournament local search. The search
/// certifies its result with exact tr, so n must stay within exact-mode
/// support (n <= 30).
struct SearchConfig {
    int n = 7;
    std::vector<Tournament> forbidden;
    std::uint64_t seed = 0;
    int max_steps = 1000;
    int restarts = 1;
};

/// Best-so-far tr values of one restart: (step, tr) whenever the best
/// improved, starting with the initial state at step 0. Never increasing.
struct RestartTrace {
    std::uint64_t sub_seed = 0;
    std::vector<std::pair<int, int>> best_by_step;
};

struct SearchResult {
    Tournament best;
    int tr_value = 0;             // recomputed from scratch on the result
    bool free_certificate = false;  // is_free(best, forbidden), rechecked
    int winning_restart = 0;
    std::vector<RestartTrace> trace;
};

/// Hill descent over single-arc flips with random restarts. Flips that
/// create a forbidden subtournament are rejected (incremental containment
/// check around the flipped pair); the objective is exact tr, with the
/// sampled count of maximum transitive subsets as plateau tie-break.
/// Deterministic for a fixed config: restarts use mt19937_64 streams with
/// splitmix64-derived sub-seeds and are merged by (tr, sub-seed).
SearchResult local_search(const SearchConfig& cfg);

std::string search_result_json(const SearchResult& result);

}  // namespace tourney
