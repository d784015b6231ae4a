#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tourney/orderings.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// One representative per isomorphism class on n vertices, sorted by
/// canonical form. Incremental: extends the (n-1)-vertex classes by every
/// possible neighborhood of a new vertex and dedupes. Requires n <= 8.
std::vector<Tournament> enumerate_classes(int n);

struct ClassificationFlags {
    bool is_galaxy = false;
    bool in_h = false;
    bool in_r = false;
    bool in_s = false;
    bool nonprime_k6free = false;
    bool residual = false;  // set only when the five flags above are all false
};

/// Per-class outcome of the seven-vertex classification, with witnesses.
struct ClassificationRecord {
    CanonicalForm form;
    ClassificationFlags flags;
    std::optional<Ordering> galaxy_witness;
    std::optional<VertexSet> homogeneous_witness;
    std::optional<std::string> catalog_match;  // e.g. "S3", "H17^c"
};

/// Classifies a 7-vertex tournament; each flag is computed independently.
ClassificationRecord classify7(const Tournament& t);

/// Vertex counts by out-degree; on 7 vertices the in-degree is determined.
struct DegreeProfile {
    std::array<int, 7> by_out_degree{};

    static DegreeProfile of(const Tournament& t);
    int n42() const { return by_out_degree[4]; }
    int n33() const { return by_out_degree[3]; }
    int n24() const { return by_out_degree[2]; }
    bool mid_range() const;        // every out-degree lies in {2,3,4}
    bool identity_holds() const;   // 21 = 4*n42 + 3*n33 + 2*n24 = 2*n42 + 3*n33 + 4*n24
};

struct LandscapeSummary {
    int total_classes = 0;
    int count_galaxy = 0;
    int count_in_h = 0;
    int count_in_r = 0;
    int count_in_s = 0;
    int count_nonprime_k6free = 0;
    int count_residual = 0;
    bool full_coverage = false;  // every record carries at least one flag
    std::array<std::array<int, 5>, 5> overlap{};  // co-occurrence of the checkable flags
    std::vector<ClassificationRecord> records;
    std::vector<std::size_t> residual_indices;
    std::vector<std::string> regular_matches;  // catalog ids of the regular classes
    bool regular_claim_holds = false;          // exactly three: H39, R11, S15
};

/// Classifies every 7-vertex class and aggregates the coverage report.
LandscapeSummary run_landscape();

std::string landscape_json(const LandscapeSummary& summary, bool include_records);

}  // namespace tourney
