#include <doctest.h>

#include <chrono>

#include "helpers.hpp"
#include "ucycle/search.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

SearchConfig config(std::int32_t n, std::int32_t k, std::uint64_t seed = 1,
                    std::int64_t budget_ms = 60000) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.seed = seed;
    cfg.budget_ms = budget_ms;
    return cfg;
}

}  // namespace

TEST_CASE("search finds verified cycles at desk scale") {
    for (auto [n, k] : {std::pair<int, int>{8, 3}, {5, 2}, {4, 1}}) {
        const auto result = search_ucycle(config(n, k));
        REQUIRE(result.status == SearchStatus::found);
        CHECK(result.cycle->length() == binomial_checked(n, k));
        CHECK(is_ucycle(*result.cycle, n, k).ok);
    }
}

TEST_CASE("search refuses when the necessary condition fails") {
    const auto result = search_ucycle(config(9, 3));
    CHECK(result.status == SearchStatus::necessary_condition_fails);
    CHECK_FALSE(result.cycle.has_value());
    CHECK(result.nodes == 0);
}

TEST_CASE("constrained search honors the prefix") {
    const KString prefix = {Symbol{0}, Symbol{1}, Symbol{2}};
    const auto result = search_constrained(config(8, 3), prefix);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(result.cycle->window(0, 3) == prefix);
    CHECK(is_ucycle(*result.cycle, 8, 3).ok);

    // empty prefix behaves like the plain search modulo symmetry anchoring
    const auto free_run = search_constrained(config(5, 2), {});
    REQUIRE(free_run.status == SearchStatus::found);
    CHECK(is_ucycle(*free_run.cycle, 5, 2).ok);
}

TEST_CASE("prefix preconditions") {
    const KString too_long = {Symbol{0}, Symbol{1}, Symbol{2}, Symbol{3}, Symbol{4}};
    CHECK_THROWS_AS((void)search_constrained(config(8, 3), too_long), Error);
    const KString repeated = {Symbol{0}, Symbol{0}};
    CHECK_THROWS_AS((void)search_constrained(config(8, 3), repeated), Error);
    const KString alien = {Symbol{11}};
    CHECK_THROWS_AS((void)search_constrained(config(8, 3), alien), Error);
    CHECK_THROWS_AS((void)search_ucycle(config(3, 5)), Error);
}

TEST_CASE("same seed, same cycle") {
    const auto a = search_ucycle(config(8, 3, 42));
    const auto b = search_ucycle(config(8, 3, 42));
    REQUIRE(a.status == SearchStatus::found);
    REQUIRE(b.status == SearchStatus::found);
    CHECK(*a.cycle == *b.cycle);
}

TEST_CASE("lexicographic heuristic is reproducible and exhaustive") {
    auto cfg = config(5, 2, 0);
    cfg.heuristic = SearchHeuristic::lexicographic;
    const auto a = search_ucycle(cfg);
    const auto b = search_ucycle(cfg);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(*a.cycle == *b.cycle);

    const auto t0 = std::chrono::steady_clock::now();
    auto hard = config(5, 2, 0, 5000);
    hard.heuristic = SearchHeuristic::random_restart;
    const auto run = search_constrained(hard, {Symbol{0}, Symbol{1}});
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    REQUIRE(run.status == SearchStatus::found);
    CHECK(elapsed < 5000);
}

TEST_CASE("parallel restarts find the same instances") {
    setenv("UCYCLE_THREADS", "4", 1);
    CHECK(worker_count() == 4);
    const auto result = search_ucycle(config(8, 3, 3));
    unsetenv("UCYCLE_THREADS");
    CHECK(worker_count() == 0);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(is_ucycle(*result.cycle, 8, 3).ok);
}

TEST_CASE("all heuristics solve a small instance") {
    // a fixed-order pass thrashes beyond tiny sizes, so it gets the tiny one
    for (auto h : {SearchHeuristic::lexicographic, SearchHeuristic::random_restart,
                   SearchHeuristic::fewest_extensions}) {
        auto cfg = config(5, 2, 7);
        cfg.heuristic = h;
        const auto result = search_ucycle(cfg);
        REQUIRE(result.status == SearchStatus::found);
        CHECK(is_ucycle(*result.cycle, 5, 2).ok);
    }
    for (auto h : {SearchHeuristic::random_restart, SearchHeuristic::fewest_extensions}) {
        auto cfg = config(8, 3, 7);
        cfg.heuristic = h;
        const auto result = search_ucycle(cfg);
        REQUIRE(result.status == SearchStatus::found);
        CHECK(is_ucycle(*result.cycle, 8, 3).ok);
    }
}
