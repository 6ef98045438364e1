#pragma once

// Explicit constructors: arithmetic-progression cycles D_w(x), universal
// cycles on 2-subsets built by summing the D-family (with or without the
// (2,k)-benign stitching), one-symbol-window ucycles, and relabeling through
// a symbol bijection anchored on a prescribed window.

#include <cstdint>
#include <span>
#include <vector>

#include "ucycle/cycle.hpp"

namespace ucycle {

struct DCycleSpec {
    std::int32_t n = 1;  // modulus
    std::int32_t w = 1;  // step
    std::int32_t x = 0;  // start
};

// Length n/gcd(w,n); symbol i is (x + i*w) mod n. Covers exactly the residue
// class of x modulo gcd(w,n).
Cycle d_cycle(const DCycleSpec& spec);

// Universal cycle on the 2-subsets of [n] for odd n >= 3: 2-summation of all
// D_w(x) for 1 <= w <= (n-1)/2, rotated to start at symbol 0.
Cycle pair_ucycle_basic(std::int32_t n);

// (2,k)-benign universal cycle on the 2-subsets of [n], k > 3, n odd,
// n >= 2k-1. Assembled as D_{n-1}(0) . D_{k-1}(0) . E where E sums the
// remaining D-family; the equal 1-windows sit at n-(k-1) and n+1.
Cycle pair_ucycle(std::int32_t n, std::int32_t k);

// The cycle listing the given distinct symbols in order.
Cycle singleton_ucycle(std::span<const Symbol> symbols);

// Bijective relabeling onto target_alphabet, anchored so that
// window(result, x, |target_window|) == target_window; remaining symbols map
// ascending-to-ascending. An empty anchor yields the plain ascending map.
Cycle relabel(const Cycle& c, const KString& target_window, std::int64_t x,
              std::span<const Symbol> target_alphabet);

}  // namespace ucycle
