#pragma once

// Cycle multiplication. WEAVE interleaves t-blocks of C with u-blocks of D
// until both cycles return to their starting offsets; the index machinery
// (F, G, the table H, similarity, and the shift count s) drives the product
// family {W_a = WEAVE_{a,-a} : a in [s]} whose k-ranges cover the full
// product of the factors' set families.

#include <cstdint>
#include <vector>

#include "ucycle/cycle.hpp"

namespace ucycle {

struct WeaveSpec {
    Cycle c;
    std::int32_t t = 1;
    Cycle d;
    std::int32_t u = 1;
    std::int64_t c_offset = 0;
    std::int64_t d_offset = 0;

    std::int32_t k() const { return t + u; }
};

// r = lcm(|C|u, |D|t) / (tu); the number of (t,u) block pairs per weave.
std::int64_t weave_r(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u);

// s = gcd(|C|u, |D|t) / (t+u); closed form for the minimal shift.
std::int64_t weave_s(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u);

// The defining minimality: the least positive s with some pair of H entries
// similar under (f+s, g-s). Kept as an independent route; the closed form is
// checked against it in tests and debug builds.
std::int64_t weave_s_minimal(std::int64_t len_c, std::int64_t len_d, std::int32_t t,
                             std::int32_t u);

Cycle weave(const WeaveSpec& spec);

// WEAVE_{a,-a}(C^t, D^u)
Cycle shifted_weave(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                    std::int64_t a);

struct IndexPair {
    std::int64_t f = 0;
    std::int64_t g = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// (F(i), G(i)): source offsets within C and D of the k-window of a weave
// starting at index i. Total on all integers; F(i) + G(i) = i.
IndexPair weave_offsets(std::int64_t i, std::int32_t t, std::int32_t u);

// H: the rk pairs (F(i), G(i)) for i in [0, rk).
std::vector<IndexPair> index_table(std::int64_t len_c, std::int64_t len_d, std::int32_t t,
                                   std::int32_t u);

// The rotation step between W_a and W_{a+s}: the least n*k with
// (n*t, n*u) similar to (s, -s), so W_{a+s}[i] = W_a[i + n*k].
std::int64_t loop_shift(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u);

// {W_a : a in [s]}.
std::vector<Cycle> product_family(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u);

}  // namespace ucycle
