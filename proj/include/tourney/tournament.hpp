#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tourney {

constexpr int kMaxVertices = 64;

/// A set of vertices of a host tournament, one bit per vertex index.
using VertexSet = std::uint64_t;

inline VertexSet full_set(int n) {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1ULL);
}
inline VertexSet vbit(int v) { return 1ULL << v; }
inline int set_size(VertexSet s) { return __builtin_popcountll(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1ULL; }
inline int lowest_vertex(VertexSet s) { return __builtin_ctzll(s); }

/// Error raised by the text readers, with the 1-based input position.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error(what_), line(line_), column(column_) {}
};

/// A tournament: every pair of distinct vertices carries exactly one arc.
/// Instances are immutable after construction and all operations are pure,
/// so shared tournaments are safe to use concurrently.
class Tournament {
public:
    Tournament() = default;

    /// The all-forward tournament: i -> j for every i < j (transitive).
    explicit Tournament(int n);

    /// Builds from an arc list; unlisted pairs keep the forward default
    /// i -> j for i < j. Throws std::invalid_argument if a vertex index is
    /// out of range or a pair is listed more than once.
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int size() const { return n_; }
    bool arc(int u, int v) const { return (out_[static_cast<size_t>(u)] >> v) & 1ULL; }
    VertexSet out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    VertexSet in_neighbors(int v) const { return full_set(n_) & ~out_[static_cast<size_t>(v)] & ~vbit(v); }
    int out_degree(int v) const { return set_size(out_neighbors(v)); }
    int in_degree(int v) const { return set_size(in_neighbors(v)); }
    bool is_regular() const;

    /// The tournament with every arc reversed.
    Tournament complement() const;

    /// Subtournament induced by X under the order-preserving relabeling.
    /// Throws std::invalid_argument if X is empty or reaches outside V.
    Tournament induced(VertexSet X) const;

    /// Relabeled copy: vertex v of *this becomes vertex perm[v].
    Tournament relabel(const std::vector<int>& perm) const;

    /// Copy with the arc between u and v reversed.
    Tournament with_flipped(int u, int v) const;

    bool operator==(const Tournament&) const = default;

    /// ".trn" text format: line 1 is n, line 2 is one '0'/'1' per pair
    /// (i,j), i<j, in lexicographic order, '1' meaning i -> j.
    std::string to_trn() const;

    /// Parses either the bit-string format or the arc-list format
    /// ("n" then one "u v" line per arc). Throws ParseError.
    static Tournament from_trn(std::string_view text);

private:
    int n_ = 0;
    std::vector<std::uint64_t> out_;  // out_[v] = out-neighborhood mask

    void set_arc(int u, int v);  // orients u -> v, clearing v -> u
    friend Tournament from_canonical(struct CanonicalForm const&);
    friend Tournament extend(const Tournament&, VertexSet);
};

/// Highest n for which canonical_form is exact (cell-wise exhaustive search).
constexpr int kCanonicalLimit = 10;

/// Relabeling-invariant key: equal forms iff isomorphic tournaments.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;  // canonical pair orientations, pair (0,1) first, msb-first

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
    std::uint64_t key() const { return (bits << 7) | static_cast<std::uint64_t>(n); }
};

/// Canonical form by iterated degree refinement plus exhaustive permutation
/// over the refined cells. Throws std::invalid_argument for n > kCanonicalLimit.
CanonicalForm canonical_form(const Tournament& t);

/// Rebuilds the representative tournament labeled by its canonical form.
Tournament from_canonical(const CanonicalForm& f);

/// Arc-preserving vertex bijection test (backtracking; any n).
bool is_isomorphic(const Tournament& a, const Tournament& b);

/// The (n+1)-vertex tournament obtained by adding one vertex whose
/// out-neighborhood is `out`; every other arc keeps its orientation.
Tournament extend(const Tournament& t, VertexSet out);

/// First witness subset X, in ascending combination order, with
/// induced(t, X) isomorphic to h; nullopt if t is h-free.
/// Throws std::invalid_argument if |h| > |t|.
std::optional<VertexSet> contains(const Tournament& t, const Tournament& h);

/// Same, restricted to subsets that include every vertex of `required`.
std::optional<VertexSet> contains(const Tournament& t, const Tournament& h, VertexSet required);

bool is_free(const Tournament& t, std::span<const Tournament> forbidden);

}  // namespace tourney
