#include "tourney/orderings.hpp"

#include <algorithm>

namespace tourney {

namespace {

void check_ordering(const Tournament& t, const Ordering& theta) {
    if (static_cast<int>(theta.perm.size()) != t.size())
        throw std::invalid_argument("ordering: permutation length mismatch");
    VertexSet seen = 0;
    for (int v : theta.perm) {
        if (v < 0 || v >= t.size() || set_contains(seen, v))
            throw std::invalid_argument("ordering: not a permutation of the vertices");
        seen |= vbit(v);
    }
}

std::vector<std::vector<int>> components(int n, const std::vector<std::uint32_t>& adj) {
    std::vector<std::vector<int>> comps;
    std::uint32_t visited = 0;
    for (int p = 0; p < n; ++p) {
        if ((visited >> p) & 1U) continue;
        std::vector<int> comp, stack{p};
        visited |= 1U << p;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            comp.push_back(q);
            for (std::uint32_t m = adj[static_cast<size_t>(q)] & ~visited; m; m &= m - 1) {
                int r = __builtin_ctz(m);
                visited |= 1U << r;
                stack.push_back(r);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Positions of a star, split into its only admissible center candidates and
// leaves. Returns false if the component is not a left or right star.
struct StarShape {
    std::vector<int> centers;  // one entry, or two for a single-edge star
    std::vector<int> leaves;   // leaves for centers[0]; mirrored for centers[1]
};

bool star_shape(const std::vector<int>& comp, const std::vector<std::uint32_t>& adj, StarShape& out) {
    size_t k = comp.size();
    if (k == 2) {
        out.centers = {comp[0], comp[1]};
        out.leaves = {comp[1]};
        return true;
    }
    int center = -1;
    for (int p : comp) {
        int d = __builtin_popcount(adj[static_cast<size_t>(p)]);
        if (d == static_cast<int>(k) - 1) {
            if (center != -1) return false;  // two full-degree vertices: K2 only, handled above
            center = p;
        } else if (d != 1) {
            return false;
        }
    }
    if (center == -1) return false;
    out.centers = {center};
    out.leaves.clear();
    for (int p : comp)
        if (p != center) out.leaves.push_back(p);
    // A star in an ordering must be a left or a right star.
    bool before_all = center < out.leaves.front();
    bool after_all = center > out.leaves.back();
    return before_all || after_all;
}

}  // namespace

std::vector<std::pair<int, int>> backward_arcs(const Tournament& t, const Ordering& theta) {
    check_ordering(t, theta);
    std::vector<std::pair<int, int>> arcs;
    int n = t.size();
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i)
            if (t.arc(theta.perm[static_cast<size_t>(i)], theta.perm[static_cast<size_t>(j)]))
                arcs.emplace_back(theta.perm[static_cast<size_t>(i)], theta.perm[static_cast<size_t>(j)]);
    return arcs;
}

BackwardGraph backward_graph(const Tournament& t, const Ordering& theta) {
    check_ordering(t, theta);
    int n = t.size();
    BackwardGraph b;
    b.n = n;
    b.adj.assign(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i)
            if (t.arc(theta.perm[static_cast<size_t>(i)], theta.perm[static_cast<size_t>(j)])) {
                b.adj[static_cast<size_t>(j)] |= 1U << i;
                b.adj[static_cast<size_t>(i)] |= 1U << j;
                b.edges.emplace_back(j, i);
            }
    return b;
}

std::optional<std::vector<StarComponent>> star_decomposition(const BackwardGraph& b) {
    std::vector<StarComponent> stars;
    for (const auto& comp : components(b.n, b.adj)) {
        if (comp.size() == 1) continue;
        StarShape shape;
        if (!star_shape(comp, b.adj, shape)) return std::nullopt;
        StarComponent sc;
        sc.center = shape.centers[0];
        sc.leaves = shape.leaves;
        sc.chirality = sc.center < sc.leaves.front() ? Chirality::left : Chirality::right;
        stars.push_back(std::move(sc));
    }
    return stars;
}

namespace {

struct StarChoice {
    int center;
    int lo, hi;  // leaf position span
    int nleaves;
};

bool centers_admissible(const std::vector<StarChoice>& stars) {
    for (size_t a = 0; a < stars.size(); ++a) {
        if (stars[a].nleaves < 2) continue;
        for (size_t b = 0; b < stars.size(); ++b) {
            if (a == b) continue;
            if (stars[a].lo < stars[b].center && stars[b].center < stars[a].hi) return false;
        }
    }
    return true;
}

bool galaxy_check(const BackwardGraph& b) {
    std::vector<StarChoice> fixed;
    std::vector<std::pair<int, int>> ambiguous;  // single-edge stars (p < q)
    for (const auto& comp : components(b.n, b.adj)) {
        if (comp.size() == 1) continue;
        StarShape shape;
        if (!star_shape(comp, b.adj, shape)) return false;
        if (shape.centers.size() == 2) {
            ambiguous.emplace_back(shape.centers[0], shape.centers[1]);
        } else {
            fixed.push_back({shape.centers[0], shape.leaves.front(), shape.leaves.back(),
                             static_cast<int>(shape.leaves.size())});
        }
    }
    size_t m = ambiguous.size();
    for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
        auto stars = fixed;
        for (size_t i = 0; i < m; ++i) {
            auto [p, q] = ambiguous[i];
            if ((pick >> i) & 1U)
                stars.push_back({q, p, p, 1});
            else
                stars.push_back({p, q, q, 1});
        }
        if (centers_admissible(stars)) return true;
    }
    return false;
}

}  // namespace

bool is_galaxy_ordering(const Tournament& t, const Ordering& theta) {
    return galaxy_check(backward_graph(t, theta));
}

namespace {

// Permanent-failure test for a partial ordering: components only gain edges,
// so a non-star component, or a big star whose center already sits strictly
// inside its leaf span, can never recover.
bool partial_viable(int placed, const std::vector<std::uint32_t>& adj) {
    for (const auto& comp : components(placed, adj)) {
        if (comp.size() <= 2) continue;
        size_t k = comp.size();
        int center = -1;
        for (int p : comp) {
            int d = __builtin_popcount(adj[static_cast<size_t>(p)]);
            if (d == static_cast<int>(k) - 1) {
                if (center != -1) return false;
                center = p;
            } else if (d != 1) {
                return false;
            }
        }
        if (center == -1) return false;
        int lo = comp.front() == center ? comp[1] : comp.front();
        int hi = comp.back() == center ? comp[static_cast<size_t>(k) - 2] : comp.back();
        if (lo < center && center < hi) return false;
    }
    return true;
}

bool galaxy_dfs(const Tournament& t, std::vector<int>& perm, VertexSet used,
                std::vector<std::uint32_t>& adj) {
    int n = t.size();
    int pos = static_cast<int>(perm.size());
    if (pos == n) return galaxy_check(backward_graph(t, Ordering{perm}));
    for (int v = 0; v < n; ++v) {
        if (set_contains(used, v)) continue;
        std::uint32_t row = 0;
        for (int j = 0; j < pos; ++j)
            if (t.arc(v, perm[static_cast<size_t>(j)])) row |= 1U << j;
        perm.push_back(v);
        adj[static_cast<size_t>(pos)] = row;
        for (std::uint32_t m = row; m; m &= m - 1) adj[static_cast<size_t>(__builtin_ctz(m))] |= 1U << pos;
        if (partial_viable(pos + 1, adj) && galaxy_dfs(t, perm, used | vbit(v), adj)) return true;
        for (std::uint32_t m = row; m; m &= m - 1) adj[static_cast<size_t>(__builtin_ctz(m))] &= ~(1U << pos);
        adj[static_cast<size_t>(pos)] = 0;
        perm.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Ordering> find_galaxy_ordering(const Tournament& t) {
    if (t.size() > 9) throw std::invalid_argument("find_galaxy_ordering supports n <= 9");
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(t.size()));
    std::vector<std::uint32_t> adj(static_cast<size_t>(t.size()), 0);
    if (galaxy_dfs(t, perm, 0, adj)) return Ordering{perm};
    return std::nullopt;
}

}  // namespace tourney
