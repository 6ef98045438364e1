#include "ucycle/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

#include "ucycle/verify.hpp"

namespace ucycle {

namespace {

using Clock = std::chrono::steady_clock;

// Colex ranking of k-subsets of [n]: rank(S) = sum C(s_i, i+1) over the
// sorted elements.
struct Ranker {
    std::int32_t n, k;
    std::vector<std::vector<std::int64_t>> choose;

    Ranker(std::int32_t n_, std::int32_t k_) : n(n_), k(k_) {
        choose.assign(static_cast<std::size_t>(n + 1),
                      std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0));
        for (std::int32_t i = 0; i <= n; ++i) {
            choose[static_cast<std::size_t>(i)][0] = 1;
            for (std::int32_t j = 1; j <= std::min(i, k); ++j)
                choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    (j <= i - 1 ? choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                                : 0);
        }
    }

    std::int64_t rank(const std::int32_t* sorted) const {
        std::int64_t r = 0;
        for (std::int32_t i = 0; i < k; ++i)
            r += choose[static_cast<std::size_t>(sorted[i])][static_cast<std::size_t>(i + 1)];
        return r;
    }
};

// Static neighbor table of the set-overlap graph: ranks sharing k-1 symbols.
// Built once per search; consecutive windows of any cycle are neighbors, so
// the unused sets must always admit a Hamiltonian path in this graph.
struct OverlapGraph {
    std::vector<std::vector<std::int32_t>> adj;

    OverlapGraph(const Ranker& ranker, std::int64_t total) {
        std::vector<std::uint64_t> mask_of(static_cast<std::size_t>(total), 0);
        std::vector<std::int32_t> idx(static_cast<std::size_t>(ranker.k));
        for (std::int32_t i = 0; i < ranker.k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t m = 0;
            std::int32_t t[16];
            for (std::int32_t i = 0; i < ranker.k; ++i) {
                m |= std::uint64_t{1} << idx[static_cast<std::size_t>(i)];
                t[i] = idx[static_cast<std::size_t>(i)];
            }
            mask_of[static_cast<std::size_t>(ranker.rank(t))] = m;
            std::int32_t j = ranker.k - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == ranker.n - ranker.k + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (std::int32_t l = j + 1; l < ranker.k; ++l)
                idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
        }
        adj.assign(static_cast<std::size_t>(total), {});
        for (std::int64_t a = 0; a < total; ++a)
            for (std::int64_t b = a + 1; b < total; ++b)
                if (std::popcount(mask_of[static_cast<std::size_t>(a)] &
                                  mask_of[static_cast<std::size_t>(b)]) == ranker.k - 1) {
                    adj[static_cast<std::size_t>(a)].push_back(static_cast<std::int32_t>(b));
                    adj[static_cast<std::size_t>(b)].push_back(static_cast<std::int32_t>(a));
                }
    }
};

// One restart: depth-first completion of the anchored buffer, growing at the
// right end only or at both ends (the left end absorbs the wrap constraints
// early). Restarts are sliced by node count, so a fixed seed replays
// identically on any machine.
struct Searcher {
    std::int32_t n, k;
    std::int64_t target, quota;
    const Ranker& ranker;
    const OverlapGraph& graph;
    bool bidi = false;
    bool randomize = true;
    bool order_by_onward = true;

    std::vector<std::uint8_t> used;
    std::vector<std::int64_t> occ;
    std::vector<std::int32_t> buf;
    std::int64_t right_end = 0, left_end = 0;
    std::vector<std::int32_t> deg;
    std::int64_t low_count = 0, unused_count = 0;

    std::uint64_t nodes = 0, node_budget = 0;
    Clock::time_point deadline{};
    bool stopped = false;
    const std::atomic<bool>* stop_flag = nullptr;
    std::mt19937_64 rng;

    Searcher(std::int32_t n_, std::int32_t k_, std::int64_t target_, const Ranker& ranker_,
             const OverlapGraph& graph_)
        : n(n_), k(k_), target(target_), ranker(ranker_), graph(graph_) {
        quota = ranker.choose[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] / k;
    }

    std::int64_t filled() const { return right_end + (target - left_end); }
    std::int32_t at(std::int64_t p) const {
        return buf[static_cast<std::size_t>(((p % target) + target) % target)];
    }

    std::int64_t wrank_right(std::int32_t sym) const {
        std::int32_t t[16];
        for (std::int32_t i = 0; i < k - 1; ++i) t[i] = at(right_end - (k - 1) + i);
        t[k - 1] = sym;
        std::sort(t, t + k);
        return ranker.rank(t);
    }
    std::int64_t wrank_left(std::int32_t sym) const {
        std::int32_t t[16];
        t[0] = sym;
        for (std::int32_t i = 1; i < k; ++i) t[i] = at(left_end - 1 + i);
        std::sort(t, t + k);
        return ranker.rank(t);
    }
    bool valid_right(std::int32_t sym) const {
        if (occ[static_cast<std::size_t>(sym)] >= quota) return false;
        for (std::int32_t i = 1; i <= k - 1; ++i)
            if (right_end - i >= 0 && at(right_end - i) == sym) return false;
        if (right_end >= k - 1 && used[static_cast<std::size_t>(wrank_right(sym))]) return false;
        return true;
    }
    bool valid_left(std::int32_t sym) const {
        if (occ[static_cast<std::size_t>(sym)] >= quota) return false;
        for (std::int32_t i = 0; i <= k - 2; ++i)
            if (left_end + i < target && at(left_end + i) == sym) return false;
        if (used[static_cast<std::size_t>(wrank_left(sym))]) return false;
        return true;
    }

    void mark(std::int64_t r) {
        used[static_cast<std::size_t>(r)] = 1;
        --unused_count;
        if (deg[static_cast<std::size_t>(r)] <= 1) --low_count;
        for (std::int32_t b : graph.adj[static_cast<std::size_t>(r)])
            if (!used[static_cast<std::size_t>(b)] && --deg[static_cast<std::size_t>(b)] == 1)
                ++low_count;
    }
    void unmark(std::int64_t r) {
        for (std::int32_t b : graph.adj[static_cast<std::size_t>(r)])
            if (!used[static_cast<std::size_t>(b)] && deg[static_cast<std::size_t>(b)]++ == 1)
                --low_count;
        used[static_cast<std::size_t>(r)] = 0;
        ++unused_count;
        if (deg[static_cast<std::size_t>(r)] <= 1) ++low_count;
    }

    std::int64_t place_right(std::int32_t sym) {
        std::int64_t r = -1;
        if (right_end >= k - 1) { r = wrank_right(sym); mark(r); }
        buf[static_cast<std::size_t>(right_end++)] = sym;
        ++occ[static_cast<std::size_t>(sym)];
        return r;
    }
    void unplace_right(std::int64_t r) {
        --occ[static_cast<std::size_t>(buf[static_cast<std::size_t>(--right_end)])];
        if (r >= 0) unmark(r);
    }
    std::int64_t place_left(std::int32_t sym) {
        const std::int64_t r = wrank_left(sym);
        mark(r);
        buf[static_cast<std::size_t>(--left_end)] = sym;
        ++occ[static_cast<std::size_t>(sym)];
        return r;
    }
    void unplace_left(std::int64_t r) {
        --occ[static_cast<std::size_t>(buf[static_cast<std::size_t>(left_end++)])];
        unmark(r);
    }

    bool seed_prefix(const KString& prefix) {
        used.assign(static_cast<std::size_t>(
                        ranker.choose[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]),
                    0);
        occ.assign(static_cast<std::size_t>(n), 0);
        buf.assign(static_cast<std::size_t>(target), -1);
        right_end = 0;
        left_end = target;
        unused_count = static_cast<std::int64_t>(used.size());
        deg.assign(used.size(), 0);
        low_count = 0;
        for (std::size_t r = 0; r < used.size(); ++r) {
            deg[r] = static_cast<std::int32_t>(graph.adj[r].size());
            if (deg[r] <= 1) ++low_count;
        }
        for (Symbol s : prefix) {
            if (s.id < 0 || s.id >= n) return false;
            if (!valid_right(s.id)) return false;
            place_right(s.id);
        }
        return true;
    }

    bool close_ok() {
        std::vector<std::int64_t> marked;
        bool ok = true;
        for (std::int64_t x = right_end - (k - 1); x < right_end && ok; ++x) {
            std::int32_t t[16];
            for (std::int32_t i = 0; i < k; ++i) t[i] = at(x + i);
            std::sort(t, t + k);
            for (std::int32_t i = 0; i + 1 < k; ++i)
                if (t[i] == t[i + 1]) ok = false;
            if (!ok) break;
            const std::int64_t r = ranker.rank(t);
            if (used[static_cast<std::size_t>(r)]) { ok = false; break; }
            used[static_cast<std::size_t>(r)] = 1;
            marked.push_back(r);
        }
        for (std::int64_t r : marked) used[static_cast<std::size_t>(r)] = 0;
        return ok;
    }

    bool connected() {
        if (unused_count <= 1) return true;
        static thread_local std::vector<std::int32_t> stack_;
        static thread_local std::vector<std::uint8_t> seen;
        seen.assign(used.size(), 0);
        std::int64_t start = -1;
        for (std::size_t r = 0; r < used.size(); ++r)
            if (!used[r]) { start = static_cast<std::int64_t>(r); break; }
        stack_.clear();
        stack_.push_back(static_cast<std::int32_t>(start));
        seen[static_cast<std::size_t>(start)] = 1;
        std::int64_t count = 0;
        while (!stack_.empty()) {
            const std::int32_t a = stack_.back();
            stack_.pop_back();
            ++count;
            for (std::int32_t b : graph.adj[static_cast<std::size_t>(a)])
                if (!used[static_cast<std::size_t>(b)] && !seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = 1;
                    stack_.push_back(b);
                }
        }
        return count == unused_count;
    }

    bool extend() {
        ++nodes;
        if (nodes >= node_budget ||
            ((nodes & 4095) == 0 &&
             ((stop_flag && stop_flag->load(std::memory_order_relaxed)) ||
              Clock::now() >= deadline))) {
            stopped = true;
            return false;
        }
        if (filled() == target) return close_ok();
        if (low_count > 2) return false;
        if ((nodes & 15) == 0 && !connected()) return false;

        std::vector<std::int32_t> cr, cl;
        for (std::int32_t s = 0; s < n; ++s) {
            if (valid_right(s)) cr.push_back(s);
            if (bidi && filled() + 1 < target && valid_left(s)) cl.push_back(s);
        }
        const bool go_right =
            !bidi || filled() + 1 >= target || cl.empty() || cr.size() <= cl.size();
        std::vector<std::int32_t>& cand = go_right ? cr : cl;
        if (cand.empty()) return false;
        if (randomize) std::shuffle(cand.begin(), cand.end(), rng);

        if (order_by_onward) {
            std::vector<std::pair<std::int32_t, std::int32_t>> scored;
            scored.reserve(cand.size());
            const bool last = filled() + 1 == target;
            for (std::int32_t s : cand) {
                const std::int64_t r = go_right ? place_right(s) : place_left(s);
                std::int32_t onward = 0;
                if (go_right) {
                    for (std::int32_t s2 = 0; s2 < n; ++s2) onward += valid_right(s2);
                } else {
                    for (std::int32_t s2 = 0; s2 < n; ++s2) onward += valid_left(s2);
                }
                if (go_right) unplace_right(r); else unplace_left(r);
                if (onward == 0 && !last) continue;
                scored.emplace_back(onward, s);
            }
            std::stable_sort(scored.begin(), scored.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            cand.clear();
            for (const auto& [onward, s] : scored) cand.push_back(s);
        }

        for (std::int32_t s : cand) {
            const std::int64_t r = go_right ? place_right(s) : place_left(s);
            if (extend()) return true;
            if (go_right) unplace_right(r); else unplace_left(r);
            if (stopped) return false;
        }
        return false;
    }
};

constexpr std::uint64_t kSliceNodes = 400000;

SearchResult run_search(const SearchConfig& cfg, const KString& prefix) {
    require(cfg.k >= 1 && cfg.k <= cfg.n, Errc::precondition_violated, "need 1 <= k <= n");
    require(cfg.n <= 60 && cfg.k <= 12, Errc::precondition_violated,
            "search supports n <= 60 and k <= 12");

    SearchResult result;
    if (!necessary_condition(cfg.n, cfg.k)) {
        result.status = SearchStatus::necessary_condition_fails;
        return result;
    }

    const std::int64_t target = binomial_checked(cfg.n, cfg.k);
    require(target <= 200000, Errc::precondition_violated,
            "instance too large for the backtracking searcher");
    const Ranker ranker(cfg.n, cfg.k);
    const OverlapGraph graph(ranker, target == 0 ? 0 : binomial_checked(cfg.n, cfg.k));

    const Clock::time_point start = Clock::now();
    const Clock::time_point hard_deadline = start + std::chrono::milliseconds(cfg.budget_ms);

    std::atomic<bool> found{false};
    std::atomic<bool> give_up{false};
    std::mutex result_mutex;
    std::optional<Cycle> found_cycle;
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<std::int32_t> total_restarts{0};

    // The left frontier of a bidirectional run consumes windows that reuse
    // the anchor, so it needs at least k-1 anchored symbols.
    const bool bidi_allowed = static_cast<std::int64_t>(prefix.size()) >= cfg.k - 1 &&
                              static_cast<std::int64_t>(prefix.size()) < target;

    auto run_worker = [&](std::int32_t worker, std::int32_t stride) {
        for (std::int64_t restart = worker;; restart += stride) {
            if (found.load() || give_up.load() || Clock::now() >= hard_deadline) return;

            Searcher searcher(cfg.n, cfg.k, target, ranker, graph);
            searcher.stop_flag = &found;
            searcher.rng.seed(cfg.seed +
                              0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1));
            switch (cfg.heuristic) {
                case SearchHeuristic::lexicographic:
                    searcher.randomize = false;
                    searcher.order_by_onward = false;
                    searcher.bidi = false;
                    searcher.node_budget = ~std::uint64_t{0};
                    break;
                case SearchHeuristic::random_restart:
                    searcher.randomize = true;
                    searcher.order_by_onward = false;
                    searcher.bidi = false;
                    searcher.node_budget = kSliceNodes;
                    break;
                case SearchHeuristic::fewest_extensions:
                    searcher.randomize = true;
                    searcher.order_by_onward = true;
                    // portfolio: alternate single-ended and bidirectional
                    searcher.bidi = bidi_allowed && (restart % 2 == 1);
                    searcher.node_budget = kSliceNodes;
                    break;
            }
            total_restarts.fetch_add(1);

            // A deterministic ordering replays the same tree every restart;
            // give it one uncapped pass and stop.
            const bool single_pass = cfg.heuristic == SearchHeuristic::lexicographic;
            searcher.deadline = hard_deadline;

            bool ok = searcher.seed_prefix(prefix) && searcher.extend();
            total_nodes.fetch_add(searcher.nodes);
            if (ok) {
                std::vector<Symbol> syms;
                syms.reserve(static_cast<std::size_t>(target));
                for (std::int64_t p = 0; p < target; ++p)
                    syms.push_back(Symbol{searcher.buf[static_cast<std::size_t>(p)]});
                std::lock_guard<std::mutex> lock(result_mutex);
                if (!found.load()) {
                    found_cycle = Cycle(std::move(syms));
                    found.store(true);
                }
                return;
            }
            // A run that ended without hitting its budget explored the whole
            // tree, so the prefix is unsatisfiable.
            if (!searcher.stopped) {
                give_up.store(true);
                return;
            }
            if (single_pass) return;
        }
    };

    const std::int32_t workers = std::max<std::int32_t>(1, worker_count());
    if (workers == 1) {
        run_worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (std::int32_t w = 0; w < workers; ++w) threads.emplace_back(run_worker, w, workers);
        for (auto& t : threads) t.join();
    }

    result.nodes = total_nodes.load();
    result.restarts = total_restarts.load();
    if (found.load()) {
        // Never hand back an unverified candidate.
        const VerificationReport report = is_ucycle(*found_cycle, cfg.n, cfg.k);
        require(report.ok, Errc::constraint_unsatisfied,
                "search produced an invalid cycle: " + report.describe());
        result.status = SearchStatus::found;
        result.cycle = std::move(found_cycle);
    } else {
        result.status = SearchStatus::budget_exceeded;
    }
    return result;
}

}  // namespace

std::int32_t worker_count() {
    const char* env = std::getenv("UCYCLE_THREADS");
    if (!env) return 0;
    const long v = std::strtol(env, nullptr, 10);
    if (v <= 1) return 0;
    return static_cast<std::int32_t>(std::min<long>(v, 64));
}

SearchResult search_ucycle(const SearchConfig& cfg) {
    require(cfg.k >= 1 && cfg.k <= cfg.n, Errc::precondition_violated, "need 1 <= k <= n");
    KString anchor;
    for (std::int32_t i = 0; i < cfg.k; ++i) anchor.push_back(Symbol{i});
    return run_search(cfg, anchor);
}

SearchResult search_constrained(const SearchConfig& cfg, const KString& prefix) {
    require(cfg.k >= 1 && cfg.k <= cfg.n, Errc::precondition_violated, "need 1 <= k <= n");
    require(static_cast<std::int64_t>(prefix.size()) <= static_cast<std::int64_t>(cfg.k) + 1,
            Errc::precondition_violated, "prefix longer than k+1");
    KString probe = prefix;
    std::sort(probe.begin(), probe.end());
    require(std::adjacent_find(probe.begin(), probe.end()) == probe.end(),
            Errc::precondition_violated, "prefix symbols must be distinct");
    for (Symbol s : prefix)
        require(s.id >= 0 && s.id < cfg.n, Errc::precondition_violated,
                "prefix symbol outside [n]");
    return run_search(cfg, prefix);
}

}  // namespace ucycle
