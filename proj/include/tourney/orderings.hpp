#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// A vertex ordering: perm[p] is the vertex placed at position p.
struct Ordering {
    std::vector<int> perm;
    bool operator==(const Ordering&) const = default;
};

/// The undirected graph of backward arcs under an ordering, on positions.
struct BackwardGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;                // adj[p] = positions adjacent to p
    std::vector<std::pair<int, int>> edges;        // position pairs (p, q), p < q
};

enum class Chirality { left, right };

/// A star component of a backward graph, in positions. A left star has its
/// center before every leaf, a right star after every leaf.
struct StarComponent {
    int center = 0;
    std::vector<int> leaves;
    Chirality chirality = Chirality::left;
};

/// The backward arcs (v_i, v_j), i > j, as vertex pairs. Ordered by the
/// earlier endpoint's position, then by the later one's.
/// Throws std::invalid_argument if the ordering does not fit the tournament.
std::vector<std::pair<int, int>> backward_arcs(const Tournament& t, const Ordering& theta);

BackwardGraph backward_graph(const Tournament& t, const Ordering& theta);

/// Splits the backward graph into components. Returns the star components
/// (singletons omitted) if every component is a left or right star or a
/// singleton, nullopt otherwise. A single-edge star takes its earlier
/// endpoint as center; either choice would do.
std::optional<std::vector<StarComponent>> star_decomposition(const BackwardGraph& b);

/// True iff theta is a star ordering that, under some admissible choice of
/// centers for single-edge stars, puts no center strictly between two
/// leaves of another star.
bool is_galaxy_ordering(const Tournament& t, const Ordering& theta);

/// Exhaustive search with pruning; n <= 9 (throws above). Returns the
/// lexicographically smallest galaxy ordering, or nullopt.
std::optional<Ordering> find_galaxy_ordering(const Tournament& t);

}  // namespace tourney
