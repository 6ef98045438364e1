#pragma once

// Benign stitching: when the t-side factor has two equal (t-1)-windows at
// distance k*delta (gcd(delta,|C|)=1), consecutive members of the weave
// family admit k-sums, which collapses the family into gcd(u,s) summable
// classes.

#include <cstdint>
#include <vector>

#include "ucycle/cycle.hpp"
#include "ucycle/sum.hpp"
#include "ucycle/verify.hpp"
#include "ucycle/weave.hpp"

namespace ucycle {

struct BenignPartition {
    std::int64_t class_count = 0;        // gcd(u, s)
    std::vector<CyclePool> classes;      // classes[i] holds W_a with a ≡ i (mod class_count)
    std::vector<std::int64_t> residue_of;  // a in [s] -> class index
};

// A k-sum of W_a and W_{a+u*delta}; the shared (k-1)-window sits at index j
// in the first weave and j + k*delta in the second.
Cycle benign_pair_sum(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                      const BenignWitness& witness, std::int64_t a);

BenignPartition benign_partition(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                                 const BenignWitness& witness);

// One cycle per class: the summation of each class of the partition. At most
// u cycles; their k-ranges union to the product of the factor families.
std::vector<Cycle> reduced_product(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                                   const BenignWitness& witness);

}  // namespace ucycle
