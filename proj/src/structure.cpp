#include "tourney/structure.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tourney/transitive.hpp"

namespace tourney {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::parse(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(str), 1);
        return Rational(std::stoll(str.substr(0, slash)), std::stoll(str.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: expected \"p\" or \"p/q\", got \"" + str + "\"");
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

int Rational::cmp(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num) * o.den;
    __int128 rhs = static_cast<__int128>(o.num) * den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool is_homogeneous(const Tournament& t, VertexSet S) {
    if ((S & ~full_set(t.size())) != 0) throw std::invalid_argument("is_homogeneous: set reaches outside V");
    for (VertexSet m = full_set(t.size()) & ~S; m; m &= m - 1) {
        int v = lowest_vertex(m);
        bool to = (S & ~t.out_neighbors(v)) == 0;
        bool from = (S & ~t.in_neighbors(v)) == 0;
        if (!to && !from) return false;
    }
    return true;
}

std::vector<VertexSet> nontrivial_homogeneous_sets(const Tournament& t) {
    int n = t.size();
    if (n > 20) throw std::invalid_argument("nontrivial_homogeneous_sets: n <= 20 required");
    std::vector<VertexSet> result;
    VertexSet all = full_set(n);
    for (VertexSet s = 3; s < all; ++s) {
        if (set_size(s) < 2) continue;
        if (is_homogeneous(t, s)) result.push_back(s);
    }
    return result;
}

bool is_prime(const Tournament& t) {
    int n = t.size();
    if (n > 20) throw std::invalid_argument("is_prime: n <= 20 required");
    VertexSet all = full_set(n);
    for (VertexSet s = 3; s < all; ++s) {
        if (set_size(s) < 2) continue;
        if (is_homogeneous(t, s)) return false;
    }
    return true;
}

DensityValue directed_density(const Tournament& t, VertexSet X, VertexSet Y) {
    if (X == 0 || Y == 0) throw std::invalid_argument("directed_density: empty side");
    if ((X & Y) != 0) throw std::invalid_argument("directed_density: sets overlap");
    if (((X | Y) & ~full_set(t.size())) != 0)
        throw std::invalid_argument("directed_density: set reaches outside V");
    long long arcs = 0;
    for (VertexSet m = X; m; m &= m - 1) arcs += set_size(t.out_neighbors(lowest_vertex(m)) & Y);
    return DensityValue{arcs, static_cast<long long>(set_size(X)) * set_size(Y)};
}

// ---------------------------------------------------------------------------
// Smooth structures

namespace {

void check_spec_sets(const Tournament& t, const SmoothStructureSpec& spec) {
    if (spec.w.size() != spec.sets.size())
        throw std::invalid_argument("smooth spec: |w| must equal the number of sets");
    VertexSet seen = 0;
    for (VertexSet s : spec.sets) {
        if ((s & ~full_set(t.size())) != 0)
            throw std::invalid_argument("smooth spec: set reaches outside V");
        if ((s & seen) != 0) throw std::invalid_argument("smooth spec: sets overlap");
        seen |= s;
    }
    for (int wi : spec.w)
        if (wi != 0 && wi != 1) throw std::invalid_argument("smooth spec: w entries must be 0 or 1");
    Rational zero(0, 1), one(1, 1);
    if (!(zero < spec.c) || one < spec.c) throw std::invalid_argument("smooth spec: c must lie in (0, 1]");
    if (!(zero < spec.lambda) || !(spec.lambda < one))
        throw std::invalid_argument("smooth spec: lambda must lie in (0, 1)");
}

}  // namespace

std::string SmoothViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::linear_size: os << "linear set S" << i + 1 << " smaller than c*n"; break;
        case Kind::transitive_size: os << "transitive set S" << i + 1 << " smaller than c*tr(T)"; break;
        case Kind::not_transitive: os << "set S" << i + 1 << " is not transitive"; break;
        case Kind::density_from:
            os << "d({" << v << "}, S" << j + 1 << ") < 1-lambda for vertex " << v << " of S" << i + 1;
            break;
        case Kind::density_to:
            os << "d(S" << i + 1 << ", {" << v << "}) < 1-lambda for vertex " << v << " of S" << j + 1;
            break;
    }
    return os.str();
}

SmoothReport validate_smooth_structure(const Tournament& t, const SmoothStructureSpec& spec) {
    check_spec_sets(t, spec);
    SmoothReport report;
    int m = static_cast<int>(spec.sets.size());
    long long n = t.size();
    Rational one_minus_lambda = Rational(1, 1) - spec.lambda;

    int tr_value = -1;  // computed lazily, only if a transitive set exists
    for (int i = 0; i < m; ++i) {
        VertexSet s = spec.sets[static_cast<size_t>(i)];
        long long size = set_size(s);
        if (spec.w[static_cast<size_t>(i)] == 0) {
            if (Rational(size, 1) < spec.c * Rational(n, 1))
                report.violations.push_back({SmoothViolation::Kind::linear_size, i, -1, -1});
        } else {
            if (tr_value < 0) tr_value = tr_size(t);
            if (Rational(size, 1) < spec.c * Rational(tr_value, 1))
                report.violations.push_back({SmoothViolation::Kind::transitive_size, i, -1, -1});
            if (s != 0 && !is_transitive(t.induced(s)))
                report.violations.push_back({SmoothViolation::Kind::not_transitive, i, -1, -1});
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            VertexSet si = spec.sets[static_cast<size_t>(i)], sj = spec.sets[static_cast<size_t>(j)];
            if (si == 0 || sj == 0) continue;
            for (VertexSet mv = si; mv; mv &= mv - 1) {
                int v = lowest_vertex(mv);
                DensityValue d = directed_density(t, vbit(v), sj);
                if (d.value() < one_minus_lambda)
                    report.violations.push_back({SmoothViolation::Kind::density_from, i, j, v});
            }
            for (VertexSet mv = sj; mv; mv &= mv - 1) {
                int v = lowest_vertex(mv);
                DensityValue d = directed_density(t, si, vbit(v));
                if (d.value() < one_minus_lambda)
                    report.violations.push_back({SmoothViolation::Kind::density_to, i, j, v});
            }
        }
    }
    return report;
}

IntersectionBoundReport check_intersection_bound(const Tournament& t,
                                                 const SmoothStructureSpec& spec, int j,
                                                 VertexSet sstar, VertexSet a) {
    if (j < 0 || j >= static_cast<int>(spec.sets.size()))
        throw std::invalid_argument("intersection bound: set index out of range");
    if (!validate_smooth_structure(t, spec).valid())
        throw std::invalid_argument("intersection bound: spec is not a valid smooth structure");
    VertexSet sj = spec.sets[static_cast<size_t>(j)];
    if (sstar == 0 || (sstar & ~sj) != 0)
        throw std::invalid_argument("intersection bound: S* must be a nonempty subset of S_j");
    VertexSet others = 0;
    for (size_t i = 0; i < spec.sets.size(); ++i)
        if (static_cast<int>(i) != j) others |= spec.sets[i];
    if ((a & ~others) != 0)
        throw std::invalid_argument("intersection bound: A must lie in the union of the other sets");

    VertexSet inter = sstar;
    int k = 0;
    for (VertexSet mv = a; mv; mv &= mv - 1) {
        int x = lowest_vertex(mv);
        int i = -1;
        for (size_t s = 0; s < spec.sets.size(); ++s)
            if (set_contains(spec.sets[s], x)) i = static_cast<int>(s);
        // S*_{j,x}: vertices of S* adjacent from x when j > i, to x when j < i.
        inter &= (j > i) ? t.out_neighbors(x) : t.in_neighbors(x);
        ++k;
    }

    long long star = set_size(sstar), whole = set_size(sj);
    Rational gamma(star, whole);
    Rational bound = (Rational(1, 1) - Rational(k, 1) * spec.lambda * Rational(gamma.den, gamma.num)) *
                     Rational(star, 1);
    IntersectionBoundReport rep;
    rep.intersection_size = set_size(inter);
    rep.bound = bound;
    rep.holds = Rational(rep.intersection_size, 1) >= bound;
    return rep;
}

// ---------------------------------------------------------------------------
// JSON

SmoothStructureSpec SmoothStructureSpec::from_json(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    SmoothStructureSpec spec;
    spec.c = Rational::parse(doc.at("c").get<std::string>());
    spec.lambda = Rational::parse(doc.at("lambda").get<std::string>());
    spec.w = doc.at("w").get<std::vector<int>>();
    for (const auto& entry : doc.at("sets")) {
        VertexSet s = 0;
        for (int v : entry.get<std::vector<int>>()) {
            if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("smooth spec: vertex out of range");
            s |= vbit(v);
        }
        spec.sets.push_back(s);
    }
    return spec;
}

std::string SmoothStructureSpec::to_json() const {
    nlohmann::json doc;
    doc["c"] = c.str();
    doc["lambda"] = lambda.str();
    doc["w"] = w;
    auto sets_json = nlohmann::json::array();
    for (VertexSet s : sets) {
        auto arr = nlohmann::json::array();
        for (VertexSet m = s; m; m &= m - 1) arr.push_back(lowest_vertex(m));
        sets_json.push_back(arr);
    }
    doc["sets"] = sets_json;
    return doc.dump();
}

std::string SmoothReport::to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["valid"] = valid();
    auto arr = nlohmann::json::array();
    for (const auto& v : violations) {
        nlohmann::json item;
        switch (v.kind) {
            case SmoothViolation::Kind::linear_size: item["kind"] = "linear_size"; break;
            case SmoothViolation::Kind::transitive_size: item["kind"] = "transitive_size"; break;
            case SmoothViolation::Kind::not_transitive: item["kind"] = "not_transitive"; break;
            case SmoothViolation::Kind::density_from: item["kind"] = "density_from"; break;
            case SmoothViolation::Kind::density_to: item["kind"] = "density_to"; break;
        }
        item["i"] = v.i;
        if (v.j >= 0) item["j"] = v.j;
        if (v.v >= 0) item["v"] = v.v;
        item["detail"] = v.describe();
        arr.push_back(item);
    }
    doc["violations"] = arr;
    return doc.dump();
}

}  // namespace tourney
