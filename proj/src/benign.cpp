#include "ucycle/benign.hpp"

#include <numeric>
#include <string>

namespace ucycle {

namespace {

// Least non-negative n with n*t ≡ z (mod m); requires gcd(t, m) | z.
std::int64_t solve_linear(std::int64_t t, std::int64_t z, std::int64_t m) {
    const std::int64_t g = std::gcd(t, m);
    require(floor_mod(z, g) == 0, Errc::constraint_unsatisfied, "congruence has no solution");
    const std::int64_t mr = m / g;
    std::int64_t tr = floor_mod(t / g, mr);
    std::int64_t zr = floor_mod(z / g, mr);
    if (mr == 1) return 0;
    // extended euclid for the inverse of tr mod mr
    std::int64_t r0 = mr, r1 = tr, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    // r0 == gcd(tr, mr) == 1 here
    return floor_mod(s0 * zr, mr);
}

void check_witness(const Cycle& c, std::int32_t t, std::int32_t k, const BenignWitness& w) {
    require(witness_valid(c, t, k, w), Errc::precondition_violated,
            "witness does not certify equal (t-1)-windows at distance k*delta");
}

}  // namespace

Cycle benign_pair_sum(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                      const BenignWitness& witness, std::int64_t a) {
    const std::int32_t k = t + u;
    check_witness(c, t, k, witness);

    const std::int64_t len_c = c.length();
    const std::int64_t g = std::gcd(static_cast<std::int64_t>(t), len_c);

    // The (k-1)-window of W_a starting at j = n*k + m (1 <= m <= t) carries
    // the (t-1)-window of C at offset a + n*t + m, interleaved with u symbols
    // of D. Pick (n, m) so that offset lands on the witness index.
    std::int64_t m = -1;
    for (std::int64_t cand = 1; cand <= t; ++cand) {
        if (floor_mod(witness.i - a - cand, g) == 0) {
            m = cand;
            break;
        }
    }
    require(m >= 1, Errc::constraint_unsatisfied, "no block offset reaches the witness window");
    const std::int64_t n = solve_linear(t, floor_mod(witness.i - a - m, len_c), len_c);
    const std::int64_t j = n * k + m;
    const std::int64_t j_other = j + static_cast<std::int64_t>(k) * witness.delta;

    const Cycle wa = shifted_weave(c, t, d, u, a);
    const Cycle wb = shifted_weave(c, t, d, u, a + static_cast<std::int64_t>(u) * witness.delta);
    require(wa.window(j, k - 1) == wb.window(j_other, k - 1), Errc::no_common_window,
            "weave windows disagree; witness invalid for these factors");

    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(wa.length() + wb.length()));
    const KString left = wa.window(j, wa.length());
    const KString right = wb.window(j_other, wb.length());
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    return Cycle(std::move(out));
}

BenignPartition benign_partition(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                                 const BenignWitness& witness) {
    const std::int32_t k = t + u;
    check_witness(c, t, k, witness);

    const std::vector<Cycle> family = product_family(c, t, d, u);
    const std::int64_t s = static_cast<std::int64_t>(family.size());
    const std::int64_t x = std::gcd(static_cast<std::int64_t>(u), s);

    BenignPartition partition;
    partition.class_count = x;
    partition.classes.assign(static_cast<std::size_t>(x), CyclePool{{}, k});
    partition.residue_of.resize(static_cast<std::size_t>(s));
    for (std::int64_t a = 0; a < s; ++a) {
        const std::int64_t cls = a % x;
        partition.residue_of[static_cast<std::size_t>(a)] = cls;
        partition.classes[static_cast<std::size_t>(cls)].members.push_back(
            family[static_cast<std::size_t>(a)]);
    }

    for (std::int64_t cls = 0; cls < x; ++cls) {
        require(is_summable(partition.classes[static_cast<std::size_t>(cls)]),
                Errc::constraint_unsatisfied,
                "class " + std::to_string(cls) + " of the weave family is not k-summable");
    }
    return partition;
}

std::vector<Cycle> reduced_product(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                                   const BenignWitness& witness) {
    const BenignPartition partition = benign_partition(c, t, d, u, witness);
    std::vector<Cycle> out;
    out.reserve(partition.classes.size());
    for (const CyclePool& cls : partition.classes) out.push_back(summate(cls).first);
    return out;
}

}  // namespace ucycle
