#include "tourney/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "json.hpp"
#include "tourney/transitive.hpp"

namespace tourney {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Bounded draw from the raw engine output. Modulo keeps the trace
// reproducible across standard libraries; the bias is irrelevant here.
int bounded(std::mt19937_64& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

Tournament random_tournament(std::mt19937_64& rng, int n) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1ULL) t = t.with_flipped(i, j);
    return t;
}

bool creates_forbidden(const Tournament& t, const std::vector<Tournament>& forbidden, VertexSet touched) {
    for (const auto& h : forbidden)
        if (contains(t, h, touched)) return true;
    return false;
}

// Repairs a random start into a forbidden-free tournament by flipping
// random arcs inside found witnesses.
Tournament free_start(std::mt19937_64& rng, const SearchConfig& cfg) {
    Tournament t = random_tournament(rng, cfg.n);
    for (int attempt = 0; attempt < 20 * cfg.n * cfg.n; ++attempt) {
        std::optional<VertexSet> witness;
        for (const auto& h : cfg.forbidden)
            if ((witness = contains(t, h))) break;
        if (!witness) return t;
        std::vector<int> verts;
        for (VertexSet m = *witness; m; m &= m - 1) verts.push_back(lowest_vertex(m));
        int a = bounded(rng, static_cast<int>(verts.size()));
        int b = bounded(rng, static_cast<int>(verts.size()) - 1);
        if (b >= a) ++b;
        t = t.with_flipped(verts[static_cast<size_t>(a)], verts[static_cast<size_t>(b)]);
    }
    Tournament fallback(cfg.n);  // transitive
    return fallback;
}

constexpr int kPotentialSamples = 200;

// Sampled count of transitive subsets of size s; the plateau tie-break.
int sampled_potential(std::mt19937_64& rng, const Tournament& t, int s) {
    int n = t.size();
    if (s >= n) return 1;
    int count = 0;
    std::vector<int> pool(static_cast<size_t>(n));
    for (int it = 0; it < kPotentialSamples; ++it) {
        for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
        VertexSet subset = 0;
        for (int i = 0; i < s; ++i) {
            int pick = i + bounded(rng, n - i);
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick)]);
            subset |= vbit(pool[static_cast<size_t>(i)]);
        }
        if (is_transitive(t.induced(subset))) ++count;
    }
    return count;
}

struct RestartOutcome {
    Tournament best;
    int best_tr = 0;
    RestartTrace trace;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::uint64_t sub_seed) {
    std::mt19937_64 rng(sub_seed);
    Tournament cur = free_start(rng, cfg);
    int cur_tr = tr_size(cur);

    RestartOutcome out{cur, cur_tr, {sub_seed, {{0, cur_tr}}}};
    for (int step = 1; step <= cfg.max_steps; ++step) {
        int u = bounded(rng, cfg.n);
        int v = bounded(rng, cfg.n - 1);
        if (v >= u) ++v;
        Tournament cand = cur.with_flipped(u, v);
        if (creates_forbidden(cand, cfg.forbidden, vbit(u) | vbit(v))) continue;
        int cand_tr = tr_size(cand);
        if (cand_tr > cur_tr) continue;
        if (cand_tr == cur_tr) {
            int cur_pot = sampled_potential(rng, cur, cur_tr);
            int cand_pot = sampled_potential(rng, cand, cand_tr);
            if (cand_pot >= cur_pot) continue;
        }
        cur = std::move(cand);
        cur_tr = cand_tr;
        if (cur_tr < out.best_tr) {
            out.best = cur;
            out.best_tr = cur_tr;
            out.trace.best_by_step.emplace_back(step, cur_tr);
        }
    }
    return out;
}

}  // namespace

SearchResult local_search(const SearchConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 30)
        throw std::invalid_argument("search: n must lie in [1, 30] for certified runs");
    if (cfg.restarts < 1) throw std::invalid_argument("search: restarts must be positive");
    if (cfg.max_steps < 0) throw std::invalid_argument("search: max_steps must be nonnegative");
    for (const auto& h : cfg.forbidden)
        if (h.size() > cfg.n) throw std::invalid_argument("search: forbidden member larger than n");

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(cfg.restarts));
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(cfg.restarts));
    if (workers <= 1) {
        for (int r = 0; r < cfg.restarts; ++r)
            outcomes[static_cast<size_t>(r)] = run_restart(cfg, splitmix64(cfg.seed + static_cast<std::uint64_t>(r)));
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < cfg.restarts; r = next.fetch_add(1))
                    outcomes[static_cast<size_t>(r)] =
                        run_restart(cfg, splitmix64(cfg.seed + static_cast<std::uint64_t>(r)));
            });
        for (auto& th : pool) th.join();
    }

    int win = 0;
    for (int r = 1; r < cfg.restarts; ++r) {
        const auto& a = outcomes[static_cast<size_t>(r)];
        const auto& b = outcomes[static_cast<size_t>(win)];
        if (a.best_tr < b.best_tr ||
            (a.best_tr == b.best_tr && a.trace.sub_seed < b.trace.sub_seed))
            win = r;
    }

    SearchResult result;
    result.best = outcomes[static_cast<size_t>(win)].best;
    result.winning_restart = win;
    for (auto& o : outcomes) result.trace.push_back(std::move(o.trace));
    // Independent recheck of the reported fields.
    result.free_certificate = is_free(result.best, cfg.forbidden);
    result.tr_value = tr(result.best).size;
    return result;
}

std::string search_result_json(const SearchResult& result) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["tr"] = result.tr_value;
    doc["free_certificate"] = result.free_certificate;
    doc["winning_restart"] = result.winning_restart;
    doc["best_trn"] = result.best.to_trn();
    auto traces = nlohmann::json::array();
    for (const auto& t : result.trace) {
        nlohmann::json item;
        item["sub_seed"] = t.sub_seed;
        auto steps = nlohmann::json::array();
        for (auto [step, tr_val] : t.best_by_step) steps.push_back({step, tr_val});
        item["best_by_step"] = steps;
        traces.push_back(item);
    }
    doc["trace"] = traces;
    return doc.dump(2);
}

}  // namespace tourney
