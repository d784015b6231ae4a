#pragma once

#include <optional>

#include "tourney/tournament.hpp"

namespace tourney {

/// Result of an exact tr computation. `witness` induces a transitive
/// subtournament of maximum size; among the maximum witnesses it is the
/// lexicographically smallest under vertex index order.
struct TrResult {
    int size = 0;
    VertexSet witness = 0;
};

/// True iff the tournament has no cyclic triangle; equivalently its
/// out-degree sequence is a permutation of 0..n-1.
bool is_transitive(const Tournament& t);

/// Size of the largest transitive subtournament (exact branch and bound).
int tr_size(const Tournament& t);

/// Largest transitive subtournament restricted to candidate set `cand`.
int tr_size_within(const Tournament& t, VertexSet cand);

/// Exact tr with the lexicographically smallest maximum witness.
TrResult tr(const Tournament& t);

/// Best-effort mode for hosts beyond exact support: a certified lower
/// bound (an actual transitive subset found) and an upper bound, exact
/// when the search finished inside the node budget.
struct TrBounds {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};
TrBounds tr_bounds(const Tournament& t, long long max_nodes);

struct RamseyResult {
    bool holds = false;
    std::optional<Tournament> counterexample;  // a class with tr < k, if any
};

/// Checks that every isomorphism class on 2^(k-1) vertices has tr >= k.
/// Supported for 2 <= k <= 4 (exhaustive enumeration); throws otherwise.
RamseyResult check_ramsey_bound(int k);

}  // namespace tourney
