#include "tourney/tournament.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace tourney {

Tournament::Tournament(int n) : n_(n), out_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("tournament size must be in [1, 64]");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out_[static_cast<size_t>(i)] |= vbit(j);
}

void Tournament::set_arc(int u, int v) {
    out_[static_cast<size_t>(u)] |= vbit(v);
    out_[static_cast<size_t>(v)] &= ~vbit(u);
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Tournament t(n);
    std::vector<bool> seen(static_cast<size_t>(n) * n, false);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc vertex out of range");
        if (u == v) throw std::invalid_argument("self-arc");
        size_t lo = static_cast<size_t>(std::min(u, v)), hi = static_cast<size_t>(std::max(u, v));
        size_t idx = lo * static_cast<size_t>(n) + hi;
        if (seen[idx]) throw std::invalid_argument("pair oriented twice");
        seen[idx] = true;
        t.set_arc(u, v);
    }
    return t;
}

bool Tournament::is_regular() const {
    int d = out_degree(0);
    for (int v = 1; v < n_; ++v)
        if (out_degree(v) != d) return false;
    return true;
}

Tournament Tournament::complement() const {
    Tournament t(n_);
    for (int v = 0; v < n_; ++v) t.out_[static_cast<size_t>(v)] = in_neighbors(v);
    return t;
}

Tournament Tournament::induced(VertexSet X) const {
    if (X == 0) throw std::invalid_argument("induced: empty vertex set");
    if ((X & ~full_set(n_)) != 0) throw std::invalid_argument("induced: set reaches outside V");
    std::vector<int> verts;
    for (VertexSet m = X; m; m &= m - 1) verts.push_back(lowest_vertex(m));
    int k = static_cast<int>(verts.size());
    Tournament t(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!arc(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)])) t.set_arc(j, i);
    return t;
}

Tournament Tournament::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: permutation length mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n_ || set_contains(seen, p)) throw std::invalid_argument("relabel: not a permutation");
        seen |= vbit(p);
    }
    Tournament t(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && arc(u, v)) t.set_arc(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return t;
}

Tournament Tournament::with_flipped(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw std::invalid_argument("with_flipped: bad vertex pair");
    Tournament t(*this);
    if (t.arc(u, v))
        t.set_arc(v, u);
    else
        t.set_arc(u, v);
    return t;
}

std::string Tournament::to_trn() const {
    std::string s = std::to_string(n_);
    s += '\n';
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s += arc(i, j) ? '1' : '0';
    s += '\n';
    return s;
}

namespace {

// Splits text into lines, tracking 1-based numbers for error reports.
std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Tournament Tournament::from_trn(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty() || blank(lines[0])) throw ParseError(1, 1, "missing vertex count");
    int n = 0;
    {
        std::istringstream in(lines[0]);
        if (!(in >> n)) throw ParseError(1, 1, "vertex count is not a number");
        std::string rest;
        if (in >> rest) throw ParseError(1, 1, "trailing data after vertex count");
    }
    if (n < 1 || n > kMaxVertices) throw ParseError(1, 1, "vertex count must be in [1, 64]");

    size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    std::string body = lines.size() > 1 ? lines[1] : std::string();
    bool bit_format = true;
    for (char c : body)
        if (c != '0' && c != '1') bit_format = false;
    if (pairs > 0 && body.empty()) bit_format = false;

    if (bit_format && (lines.size() <= 2 || blank(lines[2]))) {
        if (body.size() != pairs)
            throw ParseError(2, static_cast<int>(body.size()) + 1, "expected " + std::to_string(pairs) + " orientation bits");
        Tournament t(n);
        size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if (body[idx] == '0') t.set_arc(j, i);
        return t;
    }

    // Arc-list format: one "u v" line per arc, unlisted pairs forward.
    std::vector<std::pair<int, int>> arcs;
    for (size_t li = 1; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        std::istringstream in(lines[li]);
        int u, v;
        if (!(in >> u >> v)) throw ParseError(static_cast<int>(li) + 1, 1, "expected an arc line \"u v\"");
        std::string rest;
        if (in >> rest) throw ParseError(static_cast<int>(li) + 1, 1, "trailing data after arc");
        arcs.emplace_back(u, v);
    }
    try {
        return from_arcs(n, arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(2, 1, e.what());
    }
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

// Iterated refinement: color by out-degree, then repeatedly by the multiset
// of out/in neighbor colors. Color ids are ranks of the (labeling-invariant)
// signatures, so equal-color cells correspond across isomorphic tournaments.
std::vector<int> refined_colors(const Tournament& t) {
    int n = t.size();
    std::vector<int> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = t.out_degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.push_back(color[static_cast<size_t>(v)]);
            std::vector<int> outc, inc;
            for (VertexSet m = t.out_neighbors(v); m; m &= m - 1) outc.push_back(color[static_cast<size_t>(lowest_vertex(m))]);
            for (VertexSet m = t.in_neighbors(v); m; m &= m - 1) inc.push_back(color[static_cast<size_t>(lowest_vertex(m))]);
            std::sort(outc.begin(), outc.end());
            std::sort(inc.begin(), inc.end());
            s.push_back(-1);
            s.insert(s.end(), outc.begin(), outc.end());
            s.push_back(-1);
            s.insert(s.end(), inc.begin(), inc.end());
        }
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)]; });
        std::vector<int> next(static_cast<size_t>(n));
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[static_cast<size_t>(order[static_cast<size_t>(i)])] != sig[static_cast<size_t>(order[static_cast<size_t>(i - 1)])]) ++c;
            next[static_cast<size_t>(order[static_cast<size_t>(i)])] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::uint64_t packed_bits(const Tournament& t, const std::vector<int>& pos_to_vertex) {
    int n = t.size();
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc = (acc << 1) | (t.arc(pos_to_vertex[static_cast<size_t>(i)], pos_to_vertex[static_cast<size_t>(j)]) ? 1ULL : 0ULL);
    return acc;
}

}  // namespace

CanonicalForm canonical_form(const Tournament& t) {
    int n = t.size();
    if (n > kCanonicalLimit) throw std::invalid_argument("canonical_form supports n <= 10");
    auto color = refined_colors(t);

    // Cells in color order; candidate labelings permute only within cells.
    std::vector<std::vector<int>> cells;
    int ncolors = *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(static_cast<size_t>(ncolors));
    for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);

    std::vector<int> order;
    for (auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());

    std::uint64_t best = ~0ULL;
    // Odometer over per-cell permutations.
    std::vector<std::vector<int>> perms = cells;
    bool done = false;
    while (!done) {
        size_t at = 0;
        for (auto& p : perms) {
            std::copy(p.begin(), p.end(), order.begin() + static_cast<std::ptrdiff_t>(at));
            at += p.size();
        }
        best = std::min(best, packed_bits(t, order));
        done = true;
        for (auto& p : perms) {
            if (std::next_permutation(p.begin(), p.end())) {
                done = false;
                break;
            }
            // p rolled over to sorted order; carry to the next cell.
        }
    }
    return CanonicalForm{n, best};
}

Tournament from_canonical(const CanonicalForm& f) {
    Tournament t(f.n);
    int pairs = f.n * (f.n - 1) / 2;
    int bit = pairs - 1;
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j, --bit)
            if (((f.bits >> bit) & 1ULL) == 0) t.set_arc(j, i);
    return t;
}

std::string CanonicalForm::hex() const {
    int pairs = n * (n - 1) / 2;
    int nibbles = std::max(1, (pairs + 3) / 4);
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (int i = nibbles - 1; i >= 0; --i) s += digits[(bits >> (4 * i)) & 0xF];
    return s;
}

// ---------------------------------------------------------------------------
// Isomorphism and containment

namespace {

bool extend_mapping(const Tournament& a, const Tournament& b, std::vector<int>& map,
                    VertexSet used, int next) {
    int n = a.size();
    if (next == n) return true;
    for (int w = 0; w < n; ++w) {
        if (set_contains(used, w)) continue;
        if (a.out_degree(next) != b.out_degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < next && ok; ++u)
            if (a.arc(u, next) != b.arc(map[static_cast<size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(next)] = w;
        if (extend_mapping(a, b, map, used | vbit(w), next + 1)) return true;
    }
    return false;
}

std::uint64_t degree_multiset_key(const Tournament& t) {
    std::array<std::uint8_t, kMaxVertices> d{};
    for (int v = 0; v < t.size(); ++v) d[static_cast<size_t>(v)] = static_cast<std::uint8_t>(t.out_degree(v));
    std::sort(d.begin(), d.begin() + t.size());
    std::uint64_t key = 0;
    for (int v = 0; v < t.size(); ++v) key = key * 67 + d[static_cast<size_t>(v)];
    return key;
}

}  // namespace

bool is_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return false;
    if (degree_multiset_key(a) != degree_multiset_key(b)) return false;
    std::vector<int> map(static_cast<size_t>(a.size()));
    return extend_mapping(a, b, map, 0, 0);
}

Tournament extend(const Tournament& t, VertexSet out) {
    int n = t.size();
    if ((out & ~full_set(n)) != 0) throw std::invalid_argument("extend: neighborhood reaches outside V");
    Tournament r(n + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!t.arc(u, v)) r.set_arc(v, u);
    for (int u = 0; u < n; ++u) {
        if (set_contains(out, u))
            r.set_arc(n, u);
        else
            r.set_arc(u, n);
    }
    return r;
}

namespace {

// Visits k-subsets of [0,n) that include `required`, ascending; calls f with
// the subset until it returns true. Returns the first accepted subset.
template <typename F>
std::optional<VertexSet> first_subset(int n, int k, VertexSet required, F&& f) {
    std::vector<int> free_verts;
    for (int v = 0; v < n; ++v)
        if (!set_contains(required, v)) free_verts.push_back(v);
    int need = k - set_size(required);
    if (need < 0) return std::nullopt;
    int m = static_cast<int>(free_verts.size());
    if (need > m) return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(need));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s = required;
        for (int i : idx) s |= vbit(free_verts[static_cast<size_t>(i)]);
        if (f(s)) return s;
        int i = need - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - need + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < need; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> contains(const Tournament& t, const Tournament& h, VertexSet required) {
    if (h.size() > t.size()) throw std::invalid_argument("contains: pattern larger than host");
    std::uint64_t hkey = degree_multiset_key(h);
    return first_subset(t.size(), h.size(), required, [&](VertexSet s) {
        Tournament sub = t.induced(s);
        if (degree_multiset_key(sub) != hkey) return false;
        return is_isomorphic(sub, h);
    });
}

std::optional<VertexSet> contains(const Tournament& t, const Tournament& h) {
    return contains(t, h, 0);
}

bool is_free(const Tournament& t, std::span<const Tournament> forbidden) {
    for (const auto& h : forbidden) {
        if (h.size() > t.size()) continue;  // too large to embed
        if (contains(t, h)) return false;
    }
    return true;
}

}  // namespace tourney
