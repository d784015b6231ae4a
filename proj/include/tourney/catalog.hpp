#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tourney/orderings.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// One of the 89 named tournaments: C5, L1, L2, K6, S1..S15, R1..R11,
/// H1..H59. Vertex labels are bound once and for all: the S family maps
/// a,b,c,d,e,f,v to 0..6; K6 and the R/H families map v1..v7 to 0..6.
struct NamedTournament {
    std::string id;
    std::string construction;  // human-readable defining data
    Tournament value;
};

const std::vector<NamedTournament>& catalog();
bool catalog_has(std::string_view id);
const Tournament& named(std::string_view id);  // throws std::invalid_argument on unknown id

/// An ordering exhibited for a named tournament together with its stated
/// backward-arc set, e.g. the star ordering of S1.
struct ClaimedOrdering {
    std::string target;
    std::string label;
    std::string group;  // which batch of exhibited orderings it came from
    std::vector<int> theta;                       // position -> vertex index
    std::vector<std::pair<int, int>> backward;    // stated E(theta), vertex pairs
};

const std::vector<ClaimedOrdering>& claimed_orderings();

/// A typographical repair applied while encoding the source tables. Every
/// repair is listed here; none happens silently.
struct Correction {
    std::string location;
    std::string original;
    std::string corrected;
};

const std::vector<Correction>& corrections();

/// Builds the tournament determined by an ordering plus its backward arcs:
/// listed pairs point right-to-left, everything else is forward. Throws
/// std::invalid_argument if a listed pair is not backward under theta.
Tournament build_from_ordering(int n, const std::vector<int>& theta,
                               const std::vector<std::pair<int, int>>& backward);

struct OrderingCheck {
    const ClaimedOrdering* claim = nullptr;
    bool backward_consistent = false;  // recomputed E(theta) equals the stated set
    bool isomorphic = false;           // built tournament is isomorphic to the target
};

OrderingCheck verify_ordering(const ClaimedOrdering& claim);

struct CatalogClaim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CatalogReport {
    std::vector<CatalogClaim> claims;
    std::vector<OrderingCheck> ordering_checks;
    std::vector<Correction> corrections;
    std::vector<std::string> self_complementary;  // findings, not failures
    bool all_pass() const;
    std::string to_json() const;
};

/// Runs the full claim suite over the catalog: family primality and
/// freeness, pairwise non-isomorphism, galaxy-ordering absence for the S
/// family, self-complementarity findings, and every claimed ordering.
CatalogReport verify_catalog();

}  // namespace tourney
