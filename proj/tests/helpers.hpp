#pragma once

// Shared test shorthand: character-literal cycles and a seeded rng.

#include <random>
#include <string>
#include <string_view>

#include "ucycle/cycle.hpp"
#include "ucycle/io.hpp"

namespace tst {

inline ucycle::Cycle cyc(std::string_view s) { return ucycle::cycle_of_chars(s); }
inline ucycle::KString ks(std::string_view s) { return ucycle::kstring_of_chars(s); }
inline std::string str(const ucycle::KString& s) { return ucycle::chars_of(s); }
inline std::string str(const ucycle::Cycle& c) { return ucycle::chars_of(c); }

inline std::int64_t rnd(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline ucycle::Cycle random_cycle(std::mt19937_64& rng, std::int64_t len, std::int32_t alphabet,
                                  std::int32_t base = 'a') {
    std::vector<ucycle::Symbol> v;
    v.reserve(static_cast<std::size_t>(len));
    for (std::int64_t i = 0; i < len; ++i)
        v.push_back(ucycle::Symbol{static_cast<std::int32_t>(base + rnd(rng, 0, alphabet - 1))});
    return ucycle::Cycle(std::move(v));
}

}  // namespace tst
