#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "ucycle/builders.hpp"
#include "ucycle/search.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;
using tst::cyc;

namespace {

Cycle ids(std::initializer_list<std::int32_t> v) {
    std::vector<Symbol> syms;
    for (auto id : v) syms.push_back(Symbol{id});
    return Cycle(std::move(syms));
}

}  // namespace

TEST_CASE("is_ucycle accepts and rejects the basic shapes") {
    // a de Bruijn cycle repeats symbols inside windows, so it is not a
    // subset ucycle
    const auto bad = is_ucycle(ids({0, 0, 0, 1, 1, 1, 0, 1}), 2, 3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == VerificationReport::Failure::repeated_symbol_in_window);
    CHECK(bad.index_a == 0);

    CHECK(is_ucycle(ids({0, 1, 2}), 3, 2).ok);

    const auto pair = is_ucycle(pair_ucycle(9, 4), 9, 2);
    CHECK(pair.ok);
}

TEST_CASE("is_ucycle failure taxonomy is deterministic") {
    // the set {0,1} repeats immediately: windows 0 and 1 collide
    const auto dup = is_ucycle(ids({0, 1, 0, 1}), 3, 2);
    CHECK_FALSE(dup.ok);
    CHECK(dup.failure == VerificationReport::Failure::duplicate_k_set);
    CHECK(dup.index_a == 0);
    CHECK(dup.index_b == 1);

    // windows fine but too short for n = 4
    const auto short_c = is_ucycle(ids({0, 1, 2}), 4, 2);
    CHECK_FALSE(short_c.ok);
    CHECK(short_c.failure == VerificationReport::Failure::wrong_length);
    CHECK(short_c.expected_length == 6);
    CHECK(short_c.actual_length == 3);

    // right length, distinct sets, but symbols outside [3]
    const auto alien = is_ucycle(ids({1, 2, 3}), 3, 2);
    CHECK_FALSE(alien.ok);
    CHECK(alien.failure == VerificationReport::Failure::missing_k_set);
    REQUIRE(alien.missing.has_value());
    CHECK(alien.missing->sorted() == std::vector<Symbol>{Symbol{0}, Symbol{1}});
}

TEST_CASE("necessary_condition") {
    CHECK(necessary_condition(18, 4));        // C(17,3) = 680 = 4*170
    CHECK_FALSE(necessary_condition(9, 3));   // C(8,2) = 28, not divisible by 3
    CHECK(necessary_condition(1, 1));
    CHECK(necessary_condition(5, 1));
    // n = k: C(k-1, k-1) = 1, so only k = 1 passes
    CHECK_FALSE(necessary_condition(4, 4));
    CHECK_FALSE(necessary_condition(7, 7));
    CHECK(necessary_condition(8, 3));         // C(7,2) = 21
    CHECK(necessary_condition(9, 4));         // C(8,3) = 56
    // large n exercises the big-integer path
    CHECK_FALSE(necessary_condition(100, 5));  // C(99,4) = 3764376 = 5m+1
    CHECK(necessary_condition(102, 5));
    CHECK(necessary_condition(1000, 7));
    CHECK(necessary_condition(1001, 6));
}

TEST_CASE("verifier agrees with the brute-force oracle") {
    std::mt19937_64 rng(101);
    int agreements = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::int32_t n = static_cast<std::int32_t>(tst::rnd(rng, 2, 7));
        const std::int32_t k = static_cast<std::int32_t>(tst::rnd(rng, 1, std::min(n, 4)));
        const Cycle c = tst::random_cycle(rng, tst::rnd(rng, 1, 40), n, 0);
        const bool lib = is_ucycle(c, n, k).ok;
        const bool oracle = tst::oracle_is_ucycle(c, n, k);
        CHECK(lib == oracle);
        agreements += (lib == oracle);
    }
    CHECK(agreements == 400);

    // and on genuine ucycles
    const Cycle good = pair_ucycle(11, 4);
    CHECK(is_ucycle(good, 11, 2).ok);
    CHECK(tst::oracle_is_ucycle(good, 11, 2));
}

TEST_CASE("verifier success implies the necessary condition") {
    // metamorphic reading of the counting argument
    for (auto [n, k] : {std::pair<int, int>{9, 2}, {11, 2}, {8, 3}, {5, 2}}) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.seed = 1;
        cfg.budget_ms = 30000;
        const auto result = search_ucycle(cfg);
        REQUIRE(result.status == SearchStatus::found);
        CHECK(is_ucycle(*result.cycle, n, k).ok);
        CHECK(necessary_condition(n, k));
    }
}

TEST_CASE("benign witnesses") {
    const Cycle c = cyc("abcdaeed");
    const auto w = find_benign_witness(c, 3, 4);
    REQUIRE(w.has_value());
    CHECK(w->delta == 1);
    CHECK(w->i == 3);
    CHECK(witness_valid(c, 3, 4, *w));

    // every cycle is (1,k)-benign with the canonical witness
    for (int k : {1, 2, 5}) {
        const auto trivial = find_benign_witness(cyc("xyzw"), 1, k);
        REQUIRE(trivial.has_value());
        CHECK(trivial->delta == 1);
        CHECK(trivial->i == 0);
    }
    CHECK(find_benign_witness(cyc("q"), 1, 3).has_value());

    // no pair of 2-windows of abcd matches at distance 3*delta
    CHECK_FALSE(find_benign_witness(cyc("abcd"), 3, 3).has_value());
    // but at k = 4 the distance 4*delta wraps to zero, which the definition
    // allows: the window is compared with itself
    const auto degenerate = find_benign_witness(cyc("abcd"), 3, 4);
    REQUIRE(degenerate.has_value());
    CHECK(*degenerate == BenignWitness{1, 0});
}

TEST_CASE("witness search agrees with exhaustive enumeration") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 300; ++trial) {
        const Cycle c = tst::random_cycle(rng, tst::rnd(rng, 1, 12), tst::rnd(rng, 1, 4));
        const std::int32_t t = static_cast<std::int32_t>(tst::rnd(rng, 1, 4));
        const std::int32_t k = static_cast<std::int32_t>(tst::rnd(rng, 1, 5));
        CHECK(find_benign_witness(c, t, k).has_value() == tst::oracle_has_witness(c, t, k));
    }
}
