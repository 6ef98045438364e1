#pragma once

// Independent verification: the universal-cycle predicate, the divisibility
// necessary condition, and benign-witness detection. Nothing in here
// constructs; callers re-verify whatever they are handed.

#include <cstdint>
#include <optional>
#include <string>

#include "ucycle/cycle.hpp"

namespace ucycle {

struct VerificationReport {
    enum class Failure {
        none,
        repeated_symbol_in_window,  // index_a = window index
        duplicate_k_set,            // index_a, index_b = colliding window indices
        missing_k_set,              // missing = lexicographically least absent set
        wrong_length,               // expected_length vs actual_length
    };

    bool ok = true;
    Failure failure = Failure::none;
    std::int64_t index_a = -1;
    std::int64_t index_b = -1;
    std::int64_t expected_length = -1;
    std::int64_t actual_length = -1;
    std::optional<SymbolMultiset> missing;

    std::string describe() const;
};

// Universal cycle on the k-subsets of [n]. Checks run in a fixed order so the
// reported failure is deterministic: repeated symbol at the earliest window,
// then the earliest duplicated window set, then length, then the least
// missing set.
VerificationReport is_ucycle(const Cycle& c, std::int32_t alphabet_size, std::int32_t k);

// Same predicate over an explicit (duplicate-free) symbol set.
VerificationReport is_ucycle_on(const Cycle& c, std::span<const Symbol> alphabet, std::int32_t k);

// k | C(n-1, k-1), evaluated with exact big-integer arithmetic.
bool necessary_condition(std::int64_t n, std::int64_t k);

// C(n, k) when it fits in a signed 64-bit integer; raises otherwise.
std::int64_t binomial_checked(std::int64_t n, std::int64_t k);

struct BenignWitness {
    std::int64_t delta = 1;
    std::int64_t i = 0;
    friend bool operator==(const BenignWitness&, const BenignWitness&) = default;
};

// First (i ascending, then delta ascending) pair with gcd(delta,|C|)=1 and
// equal (t-1)-windows at distance k*delta.
std::optional<BenignWitness> find_benign_witness(const Cycle& c, std::int32_t t, std::int32_t k);

bool witness_valid(const Cycle& c, std::int32_t t, std::int32_t k, const BenignWitness& w);

}  // namespace ucycle
