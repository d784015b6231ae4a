#include "tourney/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tourney/structure.hpp"

namespace tourney {

namespace {

// S-family labels a,b,c,d,e,f,v -> 0..6; digit labels v1..v7 -> 0..6.
int label_index(char c) {
    if (c >= 'a' && c <= 'f') return c - 'a';
    if (c == 'v') return 6;
    if (c >= '1' && c <= '7') return c - '1';
    throw std::logic_error("catalog: bad vertex label");
}

std::vector<int> parse_theta(const char* s) {
    std::vector<int> theta;
    for (; *s; ++s) theta.push_back(label_index(*s));
    return theta;
}

std::vector<std::pair<int, int>> parse_arcs(const char* s) {
    std::vector<std::pair<int, int>> arcs;
    while (*s) {
        if (*s == ' ') {
            ++s;
            continue;
        }
        int u = label_index(s[0]), v = label_index(s[1]);
        arcs.emplace_back(u, v);
        s += 2;
    }
    return arcs;
}

struct ThetaDef {
    const char* id;
    const char* theta;
    const char* backward;
};

// The S family via its defining orderings theta_i and backward sets
// E(theta_i). The repairs to theta_4 and E(theta_7) are in corrections().
constexpr ThetaDef kSFamily[] = {
    {"S1", "dfvabec", "vd bd cd ef ea"},
    {"S2", "vdefabc", "fv ad bd ca"},
    {"S3", "fvbecda", "ef de df ab"},
    {"S4", "vdfcaeb", "fv ef bc bd"},
    {"S5", "vabcfed", "fv da eb db"},
    {"S6", "vabcfed", "fv da eb ea"},
    {"S7", "vbeacfd", "fv db dc fe ab"},
    {"S8", "vcafedb", "fv bc bf da"},
    {"S9", "vabcdfe", "fv ca ec eb"},
    {"S10", "veabdcf", "fv fe de ca"},
    {"S11", "bcvadef", "fc fv dv ab eb"},
    {"S12", "bcafvde", "da ec db ab ef"},
    {"S13", "bcdafve", "fb ec vd ab ef"},
    {"S14", "bcdaevf", "fb ec vd ab fe"},
    {"S15", "abdcevf", "ea va fa vb fb fd"},
};

// In-neighbors of v7 for each R_i; the rest are out-neighbors.
constexpr const char* kRFamily[] = {
    "", "1", "13456", "12", "124", "1346", "15", "135", "256", "56", "356",
};

struct HDef {
    int base;          // 1 = L1, 2 = L2
    char sign;         // '+': digits are N+(v7); '-': digits are N-(v7)
    const char* set;
};

constexpr HDef kHFamily[] = {
    {1, '+', "6"},    {1, '-', "3"},    {1, '-', "34"},   {1, '-', "2"},    {1, '-', "13"},
    {1, '-', "1"},    {2, '+', "3"},    {2, '+', "6"},    {1, '-', "4"},    {2, '-', "2"},
    {1, '-', "14"},   {2, '+', "5"},    {1, '+', "3"},    {1, '-', "345"},  {1, '+', "2"},
    {2, '+', "1"},    {1, '+', "1"},    {2, '-', "3"},    {1, '-', "5"},    {2, '-', "6"},
    {1, '+', "4"},    {1, '+', "136"},  {2, '+', "4"},    {2, '-', "5"},    {1, '-', "6"},
    {1, '+', "45"},   {2, '-', "24"},   {2, '-', "14"},   {1, '+', "15"},   {2, '+', "36"},
    {2, '+', "56"},   {2, '+', "15"},   {2, '+', "25"},   {2, '+', "34"},   {2, '-', "46"},
    {2, '-', "16"},   {1, '+', "345"},  {1, '+', "34"},   {2, '+', "124"},  {1, '-', "46"},
    {2, '-', "25"},   {1, '-', "16"},   {2, '-', "13"},   {2, '-', "26"},   {1, '-', "26"},
    {2, '+', "235"},  {1, '-', "36"},   {2, '+', "13"},   {2, '+', "23"},   {1, '+', "23"},
    {1, '+', "24"},   {1, '+', "13"},   {2, '+', "123"},  {1, '-', "56"},   {2, '-', "35"},
    {1, '+', "123"},  {2, '-', "36"},   {2, '+', "126"},  {2, '+', "24"},
};

struct ClaimDef {
    const char* group;
    const char* target;
    const char* label;
    const char* theta;
    const char* backward;
};

constexpr ClaimDef kClaims[] = {
    // orderings exhibited for single S-family arguments
    {"S singles", "S1", "star ordering", "dfvabec", "vd bd cd ef ea"},
    {"S singles", "S1", "cyclic ordering", "fvbecda", "de df ef ab ac"},
    {"S singles", "S2", "forest ordering", "efvabdc", "ve df de ca"},
    {"S singles", "S2", "cyclic ordering", "fveabdc", "ef df de ca"},
    {"S singles", "S3", "forest ordering", "fvbcdea", "ef df ec ab"},
    {"S singles", "S3", "cyclic ordering", "fvbecda", "ef df de ab"},
    {"S singles", "S4", "path ordering", "vdfcaeb", "fv bc bd ef"},
    {"S singles", "S4", "cyclic ordering", "vdefabc", "fv bd ae ca ce"},
    {"S singles", "S5", "forest ordering", "vacfedb", "bc bf da fv"},
    {"S singles", "S5", "cyclic ordering", "afvcedb", "bf bc cf va da"},
    {"S singles", "S9", "forest ordering", "vbcadfe", "fv ab ec eb"},
    {"S singles", "S9", "cyclic ordering", "vcabdfe", "fv bc eb ec"},
    {"S singles", "S10", "forest ordering", "vdeabcf", "ad bd ca fe fv"},
    {"S singles", "S10", "cyclic ordering", "vdebcaf", "bd ad ab fe fv"},
    // orderings exhibited for single H-family arguments
    {"H singles", "H18", "forest ordering", "7123465", "52 51 41 37 63"},
    {"H singles", "H18", "cyclic ordering", "7241635", "12 52 51 37 34"},
    {"H singles", "H37", "forest ordering", "1273465", "52 51 41 67"},
    {"H singles", "H37", "cyclic ordering", "2413675", "12 52 51 73 74 34"},
    {"H singles", "H3", "forest ordering", "3475126", "13 24 65 23"},
    {"H singles", "H3", "cyclic ordering", "7241365", "12 52 51 37 47 34"},
    {"H singles", "H8", "forest ordering", "1234657", "52 51 41 76 63"},
    {"H singles", "H8", "cyclic ordering", "2416357", "12 52 51 76 34"},
    {"H singles", "H20", "forest ordering", "7123465", "52 51 41 67 63"},
    {"H singles", "H20", "cyclic ordering", "7241635", "12 52 51 67 34"},
    {"H singles", "H2", "forest ordering", "3745126", "13 24 65 23"},
    {"H singles", "H2", "cyclic ordering", "7241365", "12 52 51 37 34"},
    {"H singles", "H26", "forest ordering", "1237465", "52 51 41 67"},
    {"H singles", "H26", "cyclic ordering", "2413675", "12 52 51 74 34"},
    {"H singles", "H1", "forest ordering", "1234657", "52 51 41 76"},
    {"H singles", "H1", "cyclic ordering", "2413657", "12 52 51 76 34"},
    {"H singles", "H25", "forest ordering", "7123465", "52 51 41 67"},
    {"H singles", "H25", "cyclic ordering", "7241365", "12 52 51 67 34"},
    {"H singles", "H31", "forest ordering", "1234765", "52 51 41 63"},
    {"H singles", "H31", "cyclic ordering", "2416375", "12 52 51 76 34"},
    {"H singles", "H12", "forest ordering", "1234675", "52 51 41 63"},
    {"H singles", "H12", "cyclic ordering", "2416375", "12 52 51 34"},
    // orderings exhibited for two-tournament arguments
    {"pairs", "S7", "path ordering", "vabfedc", "cf fv db ea"},
    {"pairs", "S8", "forest ordering", "vcafedb", "bf fv da bc"},
    {"pairs", "S12", "cyclic ordering", "cabefdv", "db dc bc ve va"},
    {"pairs", "S13", "forest ordering", "bcdaefv", "vd ec ab ve fb"},
    {"pairs", "S14", "forest ordering", "bcdavfe", "vd ec ab ev fb"},
    {"pairs", "H15", "forest ordering", "3451726", "23 24 13 65 67"},
    {"pairs", "H47", "forest ordering", "7123465", "51 52 41 37 67"},
    {"pairs", "H6", "forest ordering", "1723465", "52 51 41"},
    {"pairs", "H10", "cyclic ordering", "2741635", "12 52 51 34"},
    {"pairs", "H38", "cyclic ordering", "2413657", "12 52 51 73 34 74"},
    {"pairs", "H45", "cyclic ordering", "2741365", "12 52 51 34 67"},
    {"pairs", "H27", "cyclic ordering", "2471635", "12 52 51 34"},
    {"pairs", "H44", "cyclic ordering", "2741635", "12 52 51 34 67"},
    {"pairs", "H4", "cyclic ordering", "2741365", "12 52 51 34"},
    {"pairs", "H34", "cyclic ordering", "2416357", "12 52 51 34 73 74"},
    {"pairs", "H13", "forest ordering", "1234657", "51 52 41 73"},
    {"pairs", "H13", "cyclic ordering", "2413657", "12 52 51 73 34"},
    // orderings exhibited for three-tournament arguments
    {"triples", "H5", "forest ordering", "1723465", "52 51 41 37"},
    {"triples", "H14", "forest ordering", "3457126", "23 24 13 65"},
    {"triples", "H22", "cyclic ordering 1", "2471365", "52 12 51 57 34"},
    {"triples", "H22", "cyclic ordering 2", "5247136", "34 35 45 65 12"},
    {"triples", "S6", "forest ordering", "veabcfd", "ce da fe fv"},
    {"triples", "S11", "forest ordering 1", "bcvadef", "ab eb dv fc fv"},
    {"triples", "S11", "forest ordering 2", "bcdvaef", "ab eb ad fc fv"},
    {"triples", "H33", "cyclic ordering 1", "2416375", "52 12 51 72 34"},
    {"triples", "H33", "cyclic ordering 2", "4163752", "34 24 23 26 51"},
    {"triples", "H19", "cyclic ordering", "7241365", "12 52 51 57 34"},
    {"triples", "H36", "forest ordering", "1723465", "52 51 41 67 63"},
    {"triples", "H28", "cyclic ordering 1", "4176352", "23 26 24 51 34"},
    {"triples", "H28", "cyclic ordering 2", "2417635", "51 72 12 34 52"},
    {"triples", "H24", "cyclic ordering", "7241635", "51 57 12 34 52"},
    {"triples", "H42", "forest ordering", "1723465", "52 51 41 67"},
    {"triples", "H49", "cyclic ordering", "2416735", "51 57 72 12 34 52"},
};

VertexSet digits_to_set(const char* s) {
    VertexSet out = 0;
    for (; *s; ++s) out |= vbit(*s - '1');
    return out;
}

std::string arcs_str(const std::vector<std::pair<int, int>>& arcs, bool s_labels) {
    auto name = [&](int v) {
        if (s_labels) return std::string(1, v == 6 ? 'v' : static_cast<char>('a' + v));
        return "v" + std::to_string(v + 1);
    };
    std::string out = "{";
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) out += ", ";
        out += "(" + name(arcs[i].first) + "," + name(arcs[i].second) + ")";
    }
    return out + "}";
}

std::vector<NamedTournament> build_catalog() {
    std::vector<NamedTournament> entries;

    Tournament c5 = Tournament::from_arcs(
        5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}, {0, 2}, {4, 1}, {3, 0}, {2, 4}});
    entries.push_back({"C5", "E(C5) as listed; every vertex has two out- and two in-neighbors", c5});

    Tournament l1 = extend(c5, vbit(4));  // v6 adjacent to v5 only
    entries.push_back({"L1", "C5 plus v6 with N+(v6) = {v5}", l1});

    Tournament l2 = extend(c5, vbit(2) | vbit(4));  // v6 adjacent from {v1,v2,v4}
    entries.push_back({"L2", "C5 plus v6 adjacent from the cyclic triangle {v1,v2,v4}", l2});

    std::vector<int> k6_theta = parse_theta("123456");
    auto k6_backward = parse_arcs("41 63 61 52");
    Tournament k6 = build_from_ordering(6, k6_theta, k6_backward);
    entries.push_back({"K6", "theta = (v1,...,v6); E(theta) = " + arcs_str(k6_backward, false), k6});

    for (const auto& def : kSFamily) {
        auto theta = parse_theta(def.theta);
        auto backward = parse_arcs(def.backward);
        std::string theta_txt(def.theta);
        entries.push_back({def.id,
                           "theta = (" + theta_txt + "); E(theta) = " + arcs_str(backward, true),
                           build_from_ordering(7, theta, backward)});
    }
    for (size_t i = 0; i < std::size(kRFamily); ++i) {
        VertexSet in = digits_to_set(kRFamily[i]);
        Tournament r = extend(k6, full_set(6) & ~in);
        entries.push_back({"R" + std::to_string(i + 1),
                           std::string("K6 plus v7 with N-(v7) = {") + kRFamily[i] + "}", r});
    }
    for (size_t i = 0; i < std::size(kHFamily); ++i) {
        const auto& def = kHFamily[i];
        const Tournament& base = def.base == 1 ? l1 : l2;
        VertexSet set = digits_to_set(def.set);
        VertexSet out = def.sign == '+' ? set : (full_set(6) & ~set);
        Tournament h = extend(base, out);
        std::string desc = std::string("L") + std::to_string(def.base) + " plus v7 with N" +
                           def.sign + "(v7) = {" + def.set + "}";
        entries.push_back({"H" + std::to_string(i + 1), desc, h});
    }
    return entries;
}

const std::map<std::string, size_t>& catalog_index() {
    static const std::map<std::string, size_t> index = [] {
        std::map<std::string, size_t> m;
        for (size_t i = 0; i < catalog().size(); ++i) m[catalog()[i].id] = i;
        return m;
    }();
    return index;
}

}  // namespace

Tournament build_from_ordering(int n, const std::vector<int>& theta,
                               const std::vector<std::pair<int, int>>& backward) {
    std::vector<int> pos(static_cast<size_t>(n), -1);
    if (static_cast<int>(theta.size()) != n) throw std::invalid_argument("ordering length mismatch");
    for (int p = 0; p < n; ++p) pos[static_cast<size_t>(theta[static_cast<size_t>(p)])] = p;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::uint8_t> is_backward(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : backward) {
        if (pos[static_cast<size_t>(u)] <= pos[static_cast<size_t>(v)])
            throw std::invalid_argument("stated arc is not backward under the ordering");
        is_backward[static_cast<size_t>(u) * n + v] = 1;
        arcs.emplace_back(u, v);
    }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            int u = theta[static_cast<size_t>(p)], v = theta[static_cast<size_t>(q)];
            if (!is_backward[static_cast<size_t>(v) * n + u]) arcs.emplace_back(u, v);
        }
    return Tournament::from_arcs(n, arcs);
}

const std::vector<NamedTournament>& catalog() {
    static const std::vector<NamedTournament> entries = build_catalog();
    return entries;
}

bool catalog_has(std::string_view id) {
    return catalog_index().count(std::string(id)) > 0;
}

const Tournament& named(std::string_view id) {
    auto it = catalog_index().find(std::string(id));
    if (it == catalog_index().end())
        throw std::invalid_argument("unknown catalog id: " + std::string(id));
    return catalog()[it->second].value;
}

const std::vector<ClaimedOrdering>& claimed_orderings() {
    static const std::vector<ClaimedOrdering> claims = [] {
        std::vector<ClaimedOrdering> out;
        for (const auto& def : kClaims)
            out.push_back({def.target, def.label, def.group, parse_theta(def.theta),
                           parse_arcs(def.backward)});
        return out;
    }();
    return claims;
}

const std::vector<Correction>& corrections() {
    static const std::vector<Correction> fixes = {
        {"theta_4 defining S4", "(v,d,f,c,\\alpha,e,b)", "(v,d,f,c,a,e,b)"},
        {"E(theta_7) defining S7", "(d,\\beta)", "(d,b)"},
    };
    return fixes;
}

OrderingCheck verify_ordering(const ClaimedOrdering& claim) {
    OrderingCheck check;
    check.claim = &claim;
    int n = static_cast<int>(claim.theta.size());
    Tournament built = build_from_ordering(n, claim.theta, claim.backward);
    auto recomputed = backward_arcs(built, Ordering{claim.theta});
    auto stated = claim.backward;
    std::sort(recomputed.begin(), recomputed.end());
    std::sort(stated.begin(), stated.end());
    check.backward_consistent = recomputed == stated;
    check.isomorphic = is_isomorphic(built, named(claim.target));
    return check;
}

namespace {

std::vector<const NamedTournament*> family(char prefix) {
    std::vector<const NamedTournament*> out;
    for (const auto& e : catalog())
        if (e.id[0] == prefix && e.id.size() > 1) out.push_back(&e);
    return out;
}

CatalogClaim family_pairwise_noniso(char prefix) {
    auto fam = family(prefix);
    std::vector<std::string> bad;
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
            if (is_isomorphic(fam[i]->value, fam[j]->value))
                bad.push_back(fam[i]->id + "~" + fam[j]->id);
    CatalogClaim c;
    c.name = std::string(1, prefix) + " family pairwise nonisomorphic";
    c.pass = bad.empty();
    for (const auto& s : bad) c.detail += s + " ";
    return c;
}

CatalogClaim family_all(const char* name, char prefix, bool (*pred)(const Tournament&)) {
    auto fam = family(prefix);
    CatalogClaim c;
    c.name = name;
    std::vector<std::string> bad;
    for (const auto* e : fam)
        if (!pred(e->value)) bad.push_back(e->id);
    c.pass = bad.empty();
    for (const auto& s : bad) c.detail += s + " ";
    return c;
}

}  // namespace

bool CatalogReport::all_pass() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    for (const auto& oc : ordering_checks)
        if (!oc.backward_consistent || !oc.isomorphic) return false;
    return true;
}

CatalogReport verify_catalog() {
    CatalogReport report;
    report.corrections = corrections();

    report.claims.push_back(family_all("S family prime", 'S', +[](const Tournament& t) { return is_prime(t); }));
    report.claims.push_back(family_all("S family (K6,L1,L2)-free", 'S', +[](const Tournament& t) {
        const Tournament forbidden[] = {named("K6"), named("L1"), named("L2")};
        return is_free(t, forbidden);
    }));
    report.claims.push_back(family_all("S family has no galaxy ordering", 'S', +[](const Tournament& t) {
        return !find_galaxy_ordering(t).has_value();
    }));
    report.claims.push_back(family_all("H family prime", 'H', +[](const Tournament& t) { return is_prime(t); }));
    report.claims.push_back(family_pairwise_noniso('S'));
    report.claims.push_back(family_pairwise_noniso('R'));
    report.claims.push_back(family_pairwise_noniso('H'));

    // The families are stated to be nonsymmetric: no member is the
    // complement of another member.
    for (char prefix : {'S', 'R', 'H'}) {
        auto fam = family(prefix);
        CatalogClaim c;
        c.name = std::string(1, prefix) + " family pairwise nonsymmetric";
        std::vector<std::string> bad;
        for (size_t i = 0; i < fam.size(); ++i)
            for (size_t j = i + 1; j < fam.size(); ++j)
                if (is_isomorphic(fam[i]->value, fam[j]->value.complement()))
                    bad.push_back(fam[i]->id + "~" + fam[j]->id + "^c");
        c.pass = bad.empty();
        for (const auto& s : bad) c.detail += s + " ";
        report.claims.push_back(c);
    }

    for (const auto& e : catalog())
        if (is_isomorphic(e.value, e.value.complement())) report.self_complementary.push_back(e.id);

    for (const auto& claim : claimed_orderings()) report.ordering_checks.push_back(verify_ordering(claim));
    return report;
}

std::string CatalogReport::to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["all_pass"] = all_pass();
    auto claims_json = nlohmann::json::array();
    for (const auto& c : claims)
        claims_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["claims"] = claims_json;
    auto checks_json = nlohmann::json::array();
    for (const auto& oc : ordering_checks) {
        checks_json.push_back({{"target", oc.claim->target},
                               {"label", oc.claim->label},
                               {"group", oc.claim->group},
                               {"backward_consistent", oc.backward_consistent},
                               {"isomorphic", oc.isomorphic}});
    }
    doc["ordering_checks"] = checks_json;
    auto corr_json = nlohmann::json::array();
    for (const auto& c : corrections)
        corr_json.push_back({{"location", c.location}, {"original", c.original}, {"corrected", c.corrected}});
    doc["corrections"] = corr_json;
    doc["self_complementary"] = self_complementary;
    return doc.dump(2);
}

}  // namespace tourney
