#include "tourney/landscape.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "json.hpp"
#include "tourney/catalog.hpp"
#include "tourney/structure.hpp"

namespace tourney {

std::vector<Tournament> enumerate_classes(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_classes supports n <= 8");
    std::vector<CanonicalForm> forms = {canonical_form(Tournament(1))};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<CanonicalForm> next;
        for (const auto& f : forms) {
            Tournament base = from_canonical(f);
            for (VertexSet out = 0; out < (1ULL << (k - 1)); ++out) {
                CanonicalForm cf = canonical_form(extend(base, out));
                if (seen.insert(cf.key()).second) next.push_back(cf);
            }
        }
        forms = std::move(next);
    }
    std::sort(forms.begin(), forms.end());
    std::vector<Tournament> reps;
    reps.reserve(forms.size());
    for (const auto& f : forms) reps.push_back(from_canonical(f));
    return reps;
}

namespace {

// Canonical-form lookup for the S, R, H families closed under complement.
// Self-complementary members keep their base id.
const std::map<std::uint64_t, std::string>& family_lookup() {
    static const std::map<std::uint64_t, std::string> table = [] {
        std::map<std::uint64_t, std::string> t;
        for (const auto& e : catalog()) {
            if (e.id[0] != 'S' && e.id[0] != 'R' && e.id[0] != 'H') continue;
            if (e.id.size() < 2) continue;
            t.emplace(canonical_form(e.value).key(), e.id);
            t.emplace(canonical_form(e.value.complement()).key(), e.id + "^c");
        }
        return t;
    }();
    return table;
}

std::optional<VertexSet> first_homogeneous(const Tournament& t) {
    VertexSet all = full_set(t.size());
    for (VertexSet s = 3; s < all; ++s) {
        if (set_size(s) < 2) continue;
        if (is_homogeneous(t, s)) return s;
    }
    return std::nullopt;
}

}  // namespace

ClassificationRecord classify7(const Tournament& t) {
    if (t.size() != 7) throw std::invalid_argument("classify7: tournament must have 7 vertices");
    ClassificationRecord rec;
    rec.form = canonical_form(t);

    rec.galaxy_witness = find_galaxy_ordering(t);
    rec.flags.is_galaxy = rec.galaxy_witness.has_value();

    auto it = family_lookup().find(rec.form.key());
    if (it != family_lookup().end()) {
        rec.catalog_match = it->second;
        char fam = it->second[0];
        rec.flags.in_s = fam == 'S';
        rec.flags.in_r = fam == 'R';
        rec.flags.in_h = fam == 'H';
    }

    rec.homogeneous_witness = first_homogeneous(t);
    bool prime = !rec.homogeneous_witness.has_value();
    bool k6free = !contains(t, named("K6")).has_value();
    rec.flags.nonprime_k6free = !prime && k6free;

    rec.flags.residual = !(rec.flags.is_galaxy || rec.flags.in_h || rec.flags.in_r ||
                           rec.flags.in_s || rec.flags.nonprime_k6free);
    return rec;
}

DegreeProfile DegreeProfile::of(const Tournament& t) {
    DegreeProfile p;
    for (int v = 0; v < t.size(); ++v) ++p.by_out_degree[static_cast<size_t>(t.out_degree(v))];
    return p;
}

bool DegreeProfile::mid_range() const {
    return by_out_degree[0] == 0 && by_out_degree[1] == 0 && by_out_degree[5] == 0 &&
           by_out_degree[6] == 0;
}

bool DegreeProfile::identity_holds() const {
    return 4 * n42() + 3 * n33() + 2 * n24() == 21 && 2 * n42() + 3 * n33() + 4 * n24() == 21;
}

LandscapeSummary run_landscape() {
    LandscapeSummary s;
    auto classes = enumerate_classes(7);
    s.total_classes = static_cast<int>(classes.size());
    s.full_coverage = true;

    const std::array<std::string, 3> regular_targets = {"H39", "R11", "S15"};
    std::vector<bool> regular_hit(3, false);

    for (size_t idx = 0; idx < classes.size(); ++idx) {
        const auto& t = classes[idx];
        auto rec = classify7(t);
        std::array<bool, 5> f = {rec.flags.is_galaxy, rec.flags.in_h, rec.flags.in_r,
                                 rec.flags.in_s, rec.flags.nonprime_k6free};
        s.count_galaxy += f[0];
        s.count_in_h += f[1];
        s.count_in_r += f[2];
        s.count_in_s += f[3];
        s.count_nonprime_k6free += f[4];
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                if (f[static_cast<size_t>(a)] && f[static_cast<size_t>(b)])
                    ++s.overlap[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (rec.flags.residual) {
            ++s.count_residual;
            s.residual_indices.push_back(idx);
        }
        bool any = f[0] || f[1] || f[2] || f[3] || f[4] || rec.flags.residual;
        if (!any) s.full_coverage = false;

        if (t.is_regular()) {
            std::string match = rec.catalog_match.value_or("(none)");
            s.regular_matches.push_back(match);
            for (size_t r = 0; r < 3; ++r)
                if (is_isomorphic(t, named(regular_targets[r]))) regular_hit[r] = true;
        }
        s.records.push_back(std::move(rec));
    }
    s.regular_claim_holds = s.regular_matches.size() == 3 && regular_hit[0] && regular_hit[1] && regular_hit[2];
    return s;
}

std::string landscape_json(const LandscapeSummary& summary, bool include_records) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["total_classes"] = summary.total_classes;
    doc["counts"] = {{"galaxy", summary.count_galaxy},
                     {"in_H", summary.count_in_h},
                     {"in_R", summary.count_in_r},
                     {"in_S", summary.count_in_s},
                     {"nonprime_k6free", summary.count_nonprime_k6free},
                     {"residual", summary.count_residual}};
    doc["full_coverage"] = summary.full_coverage;
    doc["overlap"] = summary.overlap;
    doc["regular_matches"] = summary.regular_matches;
    doc["regular_claim_holds"] = summary.regular_claim_holds;

    auto residual = nlohmann::json::array();
    for (size_t idx : summary.residual_indices) {
        const auto& rec = summary.records[idx];
        DegreeProfile p = DegreeProfile::of(from_canonical(rec.form));
        residual.push_back({{"form", rec.form.hex()}, {"degree_profile", p.by_out_degree}});
    }
    doc["residual"] = residual;

    if (include_records) {
        auto records = nlohmann::json::array();
        for (const auto& rec : summary.records) {
            nlohmann::json r;
            r["form"] = rec.form.hex();
            r["flags"] = {{"is_galaxy", rec.flags.is_galaxy},
                          {"in_H", rec.flags.in_h},
                          {"in_R", rec.flags.in_r},
                          {"in_S", rec.flags.in_s},
                          {"nonprime_k6free", rec.flags.nonprime_k6free},
                          {"residual", rec.flags.residual}};
            if (rec.galaxy_witness) r["galaxy_ordering"] = rec.galaxy_witness->perm;
            if (rec.homogeneous_witness) {
                auto verts = nlohmann::json::array();
                for (VertexSet m = *rec.homogeneous_witness; m; m &= m - 1)
                    verts.push_back(lowest_vertex(m));
                r["homogeneous_set"] = verts;
            }
            if (rec.catalog_match) r["catalog_match"] = *rec.catalog_match;
            records.push_back(r);
        }
        doc["records"] = records;
    }
    return doc.dump(2);
}

}  // namespace tourney
