#pragma once

#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Exact rational with a positive denominator; all density comparisons in
/// this module go through it, never through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(std::string_view s);  // "p/q" or "p"

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    int cmp(const Rational& o) const;  // -1, 0, 1
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }
    bool operator==(const Rational& o) const { return cmp(o) == 0; }

    std::string str() const;
};

/// Directed density d(X,Y) = arcs / pairs, kept exact.
struct DensityValue {
    long long arcs = 0;   // e_{X,Y}
    long long pairs = 0;  // |X| * |Y|
    Rational value() const { return Rational(arcs, pairs); }
};

/// True iff every vertex outside S is complete to S or complete from S.
bool is_homogeneous(const Tournament& t, VertexSet S);

/// All S with 1 < |S| < n that are homogeneous, by ascending bitmask.
/// Plain 2^n sweep; requires n <= 20.
std::vector<VertexSet> nontrivial_homogeneous_sets(const Tournament& t);

bool is_prime(const Tournament& t);

/// Throws std::invalid_argument if X, Y overlap or either is empty.
DensityValue directed_density(const Tournament& t, VertexSet X, VertexSet Y);

/// The (c, lambda, w) certificate: |w| pairwise disjoint vertex sets.
struct SmoothStructureSpec {
    Rational c;
    Rational lambda;
    std::vector<int> w;           // 0 = linear set, 1 = transitive set
    std::vector<VertexSet> sets;  // one per entry of w

    static SmoothStructureSpec from_json(std::string_view text);
    std::string to_json() const;
};

struct SmoothViolation {
    enum class Kind {
        linear_size,       // w_i = 0 but |S_i| < c * n
        transitive_size,   // w_i = 1 but |S_i| < c * tr(T)
        not_transitive,    // w_i = 1 but T|S_i has a cycle
        density_from,      // v in S_i, d({v}, S_j) < 1 - lambda, i < j
        density_to,        // v in S_j, d(S_i, {v}) < 1 - lambda, i < j
    };
    Kind kind;
    int i = -1;
    int j = -1;
    int v = -1;
    std::string describe() const;
};

struct SmoothReport {
    std::vector<SmoothViolation> violations;
    bool valid() const { return violations.empty(); }
    std::string to_json() const;
};

/// Checks every clause of the smooth-structure definition and reports all
/// violations in deterministic order (set index, then vertex index).
/// Throws std::invalid_argument if the sets overlap or leave V(T).
SmoothReport validate_smooth_structure(const Tournament& t, const SmoothStructureSpec& spec);

struct IntersectionBoundReport {
    long long intersection_size = 0;  // |intersection of S*_{j,x} over x in A|
    Rational bound;                   // (1 - k*lambda/gamma) * |S*|
    bool holds = false;
};

/// Evaluates both sides of the intersection bound exactly. Preconditions
/// (validated, throwing std::invalid_argument): spec is a valid smooth
/// structure on t; sstar is a nonempty subset of sets[j]; a stays inside
/// the union of the other sets.
IntersectionBoundReport check_intersection_bound(const Tournament& t,
                                                 const SmoothStructureSpec& spec, int j,
                                                 VertexSet sstar, VertexSet a);

}  // namespace tourney
