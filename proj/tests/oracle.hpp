#pragma once

// Brute-force oracles. These deliberately avoid the library's verification
// and index machinery: windows are read straight off the symbol buffer,
// subsets are enumerated recursively, and the weave bookkeeping is recovered
// by simulating symbol consumption.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "ucycle/cycle.hpp"

namespace tst {

// All k-subsets of [n] as sorted id vectors.
inline std::vector<std::vector<std::int32_t>> oracle_subsets(std::int32_t n, std::int32_t k) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> cur;
    auto rec = [&](auto&& self, std::int32_t next) -> void {
        if (static_cast<std::int32_t>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::int32_t v = next; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Set-comparison ucycle predicate.
inline bool oracle_is_ucycle(const ucycle::Cycle& c, std::int32_t n, std::int32_t k) {
    const auto& syms = c.symbols();
    const std::int64_t len = static_cast<std::int64_t>(syms.size());
    std::set<std::vector<std::int32_t>> seen;
    for (std::int64_t x = 0; x < len; ++x) {
        std::vector<std::int32_t> w;
        w.reserve(static_cast<std::size_t>(k));
        for (std::int32_t i = 0; i < k; ++i)
            w.push_back(syms[static_cast<std::size_t>((x + i) % len)].id);
        std::sort(w.begin(), w.end());
        for (std::int32_t i = 0; i + 1 < k; ++i)
            if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i + 1)]) return false;
        if (w.front() < 0 || w.back() >= n) return false;
        if (!seen.insert(std::move(w)).second) return false;
    }
    const auto all = oracle_subsets(n, k);
    return seen.size() == all.size() &&
           std::equal(seen.begin(), seen.end(), all.begin(), all.end());
}

// Exhaustive merge-order search. Groups carry the union of their members'
// (k-1)-window sets; a merge needs intersecting sets. Explores every order.
inline bool oracle_summable(const std::vector<ucycle::Cycle>& pool, std::int32_t k) {
    using WindowSet = std::set<std::vector<std::int32_t>>;
    std::vector<WindowSet> groups;
    for (const auto& c : pool) {
        WindowSet ws;
        const auto& syms = c.symbols();
        const std::int64_t len = static_cast<std::int64_t>(syms.size());
        for (std::int64_t x = 0; x < len; ++x) {
            std::vector<std::int32_t> w;
            for (std::int32_t i = 0; i < k - 1; ++i)
                w.push_back(syms[static_cast<std::size_t>((x + i) % len)].id);
            ws.insert(std::move(w));
        }
        groups.push_back(std::move(ws));
    }

    auto rec = [&](auto&& self, std::vector<WindowSet> state) -> bool {
        if (state.size() <= 1) return true;
        for (std::size_t i = 0; i < state.size(); ++i) {
            for (std::size_t j = i + 1; j < state.size(); ++j) {
                const bool touch = std::any_of(state[i].begin(), state[i].end(),
                                               [&](const auto& w) { return state[j].count(w); });
                if (!touch) continue;
                std::vector<WindowSet> next;
                for (std::size_t l = 0; l < state.size(); ++l)
                    if (l != i && l != j) next.push_back(state[l]);
                WindowSet merged = state[i];
                merged.insert(state[j].begin(), state[j].end());
                next.push_back(std::move(merged));
                if (self(self, std::move(next))) return true;
            }
        }
        return false;
    };
    return rec(rec, std::move(groups));
}

// Minimal shift from the definition, with the offset table H recovered by
// counting how many symbols each factor has contributed.
inline std::int64_t oracle_minimal_s(std::int64_t len_c, std::int64_t len_d, std::int32_t t,
                                     std::int32_t u) {
    const std::int64_t k = t + u;
    std::int64_t r = 1;
    while ((r * t) % len_c != 0 || (r * u) % len_d != 0) ++r;

    std::set<std::pair<std::int64_t, std::int64_t>> h;
    std::int64_t from_c = 0, from_d = 0;
    for (std::int64_t i = 0; i < r * k; ++i) {
        h.emplace(from_c % len_c, from_d % len_d);
        if (i % k < t)
            ++from_c;
        else
            ++from_d;
    }

    for (std::int64_t s = 1;; ++s) {
        for (const auto& [f, g] : h) {
            const std::int64_t f2 = (f + s) % len_c;
            const std::int64_t g2 = ((g - s) % len_d + len_d) % len_d;
            if (h.count({f2, g2})) return s;
        }
    }
}

// Witness existence by full (i, delta) enumeration.
inline bool oracle_has_witness(const ucycle::Cycle& c, std::int32_t t, std::int32_t k) {
    const auto& syms = c.symbols();
    const std::int64_t len = static_cast<std::int64_t>(syms.size());
    auto window_eq = [&](std::int64_t p, std::int64_t q) {
        for (std::int32_t i = 0; i < t - 1; ++i) {
            const auto a = syms[static_cast<std::size_t>((((p + i) % len) + len) % len)];
            const auto b = syms[static_cast<std::size_t>((((q + i) % len) + len) % len)];
            if (!(a == b)) return false;
        }
        return true;
    };
    for (std::int64_t i = 0; i < len; ++i)
        for (std::int64_t delta = 1; delta <= std::max<std::int64_t>(len, 1); ++delta) {
            if (std::gcd(delta, len) != 1) continue;
            if (window_eq(i, i + k * delta)) return true;
        }
    return false;
}

}  // namespace tst
