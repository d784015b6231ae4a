#include "tourney/transitive.hpp"

#include <algorithm>

#include "tourney/landscape.hpp"

namespace tourney {

bool is_transitive(const Tournament& t) {
    // A tournament is transitive iff its out-degrees are 0..n-1, each once.
    VertexSet seen = 0;
    for (int v = 0; v < t.size(); ++v) {
        int d = t.out_degree(v);
        if (set_contains(seen, d)) return false;
        seen |= vbit(d);
    }
    return true;
}

namespace {

// Chains are explored in dominance order: the chosen vertex beats every
// later one, so each transitive set is visited exactly once via its source.
void tr_dfs(const Tournament& t, VertexSet cand, int depth, int& best) {
    if (depth + set_size(cand) <= best) return;
    if (cand == 0) {
        best = std::max(best, depth);
        return;
    }
    for (VertexSet m = cand; m; m &= m - 1) {
        int v = lowest_vertex(m);
        tr_dfs(t, cand & t.out_neighbors(v), depth + 1, best);
    }
}

int greedy_chain(const Tournament& t, VertexSet cand) {
    int len = 0;
    while (cand) {
        int pick = -1, bd = -1;
        for (VertexSet m = cand; m; m &= m - 1) {
            int v = lowest_vertex(m);
            int d = set_size(cand & t.out_neighbors(v));
            if (d > bd) {
                bd = d;
                pick = v;
            }
        }
        cand &= t.out_neighbors(pick);
        ++len;
    }
    return len;
}

// Is there a transitive subset of size `target` that uses every vertex of
// `forced` and otherwise stays inside `cand`? `forced` must be within cand.
bool chain_feasible(const Tournament& t, VertexSet cand, VertexSet forced, int len, int target) {
    if ((forced & ~cand) != 0) return false;
    if (len + set_size(cand) < target) return false;
    if (forced == 0) {
        int best = target - len - 1;
        tr_dfs(t, cand, 0, best);
        return best >= target - len;
    }
    for (VertexSet m = cand; m; m &= m - 1) {
        int v = lowest_vertex(m);
        // The next chain vertex must beat all remaining forced vertices.
        if ((forced & ~vbit(v) & ~t.out_neighbors(v)) != 0) continue;
        if (chain_feasible(t, cand & t.out_neighbors(v), forced & ~vbit(v), len + 1, target))
            return true;
    }
    return false;
}

}  // namespace

int tr_size_within(const Tournament& t, VertexSet cand) {
    int best = std::max(0, greedy_chain(t, cand) - 1);
    tr_dfs(t, cand, 0, best);
    return best;
}

namespace {

bool tr_dfs_budget(const Tournament& t, VertexSet cand, int depth, int& best, long long& budget) {
    if (--budget < 0) return false;
    if (depth + set_size(cand) <= best) return true;
    if (cand == 0) {
        best = std::max(best, depth);
        return true;
    }
    bool complete = true;
    for (VertexSet m = cand; m; m &= m - 1) {
        int v = lowest_vertex(m);
        if (!tr_dfs_budget(t, cand & t.out_neighbors(v), depth + 1, best, budget)) complete = false;
        if (budget < 0) return false;
    }
    return complete;
}

}  // namespace

TrBounds tr_bounds(const Tournament& t, long long max_nodes) {
    int best = std::max(1, greedy_chain(t, full_set(t.size())));
    int found = best - 1;
    long long budget = max_nodes;
    bool complete = tr_dfs_budget(t, full_set(t.size()), 0, found, budget);
    found = std::max(found, best);
    return TrBounds{found, complete ? found : t.size(), complete};
}

int tr_size(const Tournament& t) { return tr_size_within(t, full_set(t.size())); }

TrResult tr(const Tournament& t) {
    int n = t.size();
    int s = tr_size(t);
    VertexSet chosen = 0;
    VertexSet above = full_set(n);
    for (int v = 0; v < n && set_size(chosen) < s; ++v) {
        above &= ~vbit(v);
        if (chain_feasible(t, chosen | vbit(v) | above, chosen | vbit(v), 0, s))
            chosen |= vbit(v);
    }
    return TrResult{s, chosen};
}

RamseyResult check_ramsey_bound(int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("check_ramsey_bound supports 2 <= k <= 4");
    int n = 1 << (k - 1);
    for (const auto& t : enumerate_classes(n)) {
        if (tr_size(t) < k) return RamseyResult{false, t};
    }
    return RamseyResult{true, std::nullopt};
}

}  // namespace tourney
