#pragma once

// Backtracking construction of universal cycles on k-subsets of [n].
// Best-effort: absence of a result within budget proves nothing. Every
// returned cycle has already passed the verifier.

#include <cstdint>
#include <optional>

#include "ucycle/cycle.hpp"

namespace ucycle {

enum class SearchHeuristic { lexicographic, random_restart, fewest_extensions };

struct SearchConfig {
    std::int32_t n = 0;
    std::int32_t k = 0;
    std::uint64_t seed = 0;
    std::int64_t budget_ms = 1000;
    SearchHeuristic heuristic = SearchHeuristic::fewest_extensions;
};

enum class SearchStatus { found, necessary_condition_fails, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    std::optional<Cycle> cycle;
    std::uint64_t nodes = 0;
    std::int32_t restarts = 0;
};

// Symmetry-reduced: the sequence is anchored to start 0,1,...,k-1, which is
// always attainable by rotating and relabeling any solution.
SearchResult search_ucycle(const SearchConfig& cfg);

// As above but with a caller-prescribed opening window (distinct symbols,
// length <= k+1); no symmetry reduction is applied.
SearchResult search_constrained(const SearchConfig& cfg, const KString& prefix);

// Worker cap from UCYCLE_THREADS; 0 or 1 means serial deterministic mode.
std::int32_t worker_count();

}  // namespace ucycle
