#pragma once

// Cycle addition: k-sums of two cycles aligned on a shared (k-1)-string, and
// greedy k-summation of pools whose (k-1)-range intersection graph is
// connected. Both are deterministic: sums enumerate rotation-offset pairs in
// ascending order, summation always merges the lowest member-index pair.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ucycle/cycle.hpp"

namespace ucycle {

struct CyclePool {
    std::vector<Cycle> members;
    std::int32_t k = 2;
};

struct OffsetPair {
    std::int64_t left = 0;
    std::int64_t right = 0;
    friend bool operator==(const OffsetPair&, const OffsetPair&) = default;
};

struct MergeRecord {
    std::size_t left_id = 0;   // original pool indices
    std::size_t right_id = 0;
    OffsetPair offsets;        // rotations applied before concatenating
    KString shared;            // the common (k-1)-string
};

struct SumTrace {
    std::vector<MergeRecord> merges;
};

// All rotation-offset pairs (i, j) such that rotate(c, i) and rotate(d, j)
// start with the same (k-1)-string, ascending in (i, j).
std::vector<OffsetPair> k_sum_offsets(const Cycle& c, const Cycle& d, std::int32_t k);
std::optional<OffsetPair> first_k_sum_offset(const Cycle& c, const Cycle& d, std::int32_t k);

Cycle k_sum_at(const Cycle& c, const Cycle& d, const OffsetPair& o);
std::vector<Cycle> k_sums(const Cycle& c, const Cycle& d, std::int32_t k);
Cycle k_sum_first(const Cycle& c, const Cycle& d, std::int32_t k);  // raises no_common_window

// True when the w-window ranges share at least one string.
bool ranges_intersect(const Cycle& c, const Cycle& d, std::int64_t w);

// Connectivity of the (k-1)-range intersection graph over pool members.
bool is_summable(const CyclePool& pool);

std::pair<Cycle, SumTrace> summate(const CyclePool& pool);  // raises not_summable

// Re-executes a trace against the original pool; reproduces the output.
Cycle replay_trace(const CyclePool& pool, const SumTrace& trace);

}  // namespace ucycle
