#include "ucycle/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace ucycle {

namespace {

mpz_class binomial_exact(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

bool has_repeat(const KString& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) return true;
    return false;
}

}  // namespace

std::string VerificationReport::describe() const {
    std::ostringstream os;
    switch (failure) {
        case Failure::none:
            os << "ok";
            break;
        case Failure::repeated_symbol_in_window:
            os << "repeated symbol in window at index " << index_a;
            break;
        case Failure::duplicate_k_set:
            os << "duplicate k-set at indices " << index_a << " and " << index_b;
            break;
        case Failure::missing_k_set: {
            os << "missing k-set {";
            if (missing) {
                bool first = true;
                for (Symbol s : missing->sorted()) {
                    if (!first) os << ",";
                    os << s.id;
                    first = false;
                }
            }
            os << "}";
            break;
        }
        case Failure::wrong_length:
            os << "wrong length: expected " << expected_length << ", got " << actual_length;
            break;
    }
    return os.str();
}

VerificationReport is_ucycle_on(const Cycle& c, std::span<const Symbol> alphabet, std::int32_t k) {
    require(k >= 1, Errc::precondition_violated, "ucycle check needs k >= 1");
    VerificationReport report;
    const std::int64_t len = c.length();

    // 1) every window must consist of k different symbols
    for (std::int64_t x = 0; x < len; ++x) {
        if (has_repeat(c.window(x, k))) {
            report.ok = false;
            report.failure = VerificationReport::Failure::repeated_symbol_in_window;
            report.index_a = x;
            return report;
        }
    }

    // 2) window sets must be pairwise distinct; report the earliest collision
    std::vector<SymbolMultiset> sets;
    sets.reserve(static_cast<std::size_t>(len));
    std::map<SymbolMultiset, std::int64_t> first_seen;
    for (std::int64_t x = 0; x < len; ++x) {
        sets.push_back(SymbolMultiset::of(c.window(x, k)));
        auto [it, inserted] = first_seen.emplace(sets.back(), x);
        if (!inserted) {
            report.ok = false;
            report.failure = VerificationReport::Failure::duplicate_k_set;
            report.index_a = it->second;
            report.index_b = x;
            return report;
        }
    }

    // 3) cardinality must match C(n, k)
    const mpz_class expected = binomial_exact(static_cast<std::int64_t>(alphabet.size()), k);
    if (mpz_cmp_si(expected.get_mpz_t(), static_cast<long>(len)) != 0) {
        report.ok = false;
        report.failure = VerificationReport::Failure::wrong_length;
        report.expected_length =
            expected.fits_slong_p() ? static_cast<std::int64_t>(expected.get_si()) : -1;
        report.actual_length = len;
        return report;
    }

    // 4) the distinct sets must be exactly the k-subsets of the alphabet
    const KSetFamily want = all_k_subsets(alphabet, k);
    const KSetFamily got = KSetFamily::of(std::move(sets));
    if (!(want == got)) {
        for (const auto& m : want.members()) {
            if (!std::binary_search(got.members().begin(), got.members().end(), m)) {
                report.ok = false;
                report.failure = VerificationReport::Failure::missing_k_set;
                report.missing = m;
                return report;
            }
        }
        // unreachable: equal cardinalities and distinct sets force equality
        report.ok = false;
        report.failure = VerificationReport::Failure::missing_k_set;
        return report;
    }

    return report;
}

VerificationReport is_ucycle(const Cycle& c, std::int32_t alphabet_size, std::int32_t k) {
    require(alphabet_size >= 1, Errc::precondition_violated, "alphabet size must be positive");
    const std::vector<Symbol> alphabet = ascending_symbols(alphabet_size);
    return is_ucycle_on(c, alphabet, k);
}

bool necessary_condition(std::int64_t n, std::int64_t k) {
    require(k >= 1 && k <= n, Errc::precondition_violated, "need 1 <= k <= n");
    const mpz_class b = binomial_exact(n - 1, k - 1);
    return mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(k)) != 0;
}

std::int64_t binomial_checked(std::int64_t n, std::int64_t k) {
    const mpz_class b = binomial_exact(n, k);
    require(b.fits_slong_p() != 0, Errc::precondition_violated, "binomial exceeds 64-bit range");
    return static_cast<std::int64_t>(b.get_si());
}

bool witness_valid(const Cycle& c, std::int32_t t, std::int32_t k, const BenignWitness& w) {
    if (t < 1 || k < 1) return false;
    if (std::gcd(w.delta, c.length()) != 1) return false;
    return c.window(w.i, t - 1) == c.window(w.i + static_cast<std::int64_t>(k) * w.delta, t - 1);
}

std::optional<BenignWitness> find_benign_witness(const Cycle& c, std::int32_t t, std::int32_t k) {
    require(t >= 1 && k >= 1, Errc::precondition_violated, "witness search needs t >= 1, k >= 1");
    const std::int64_t len = c.length();
    // delta is only meaningful modulo |C|; for |C| = 1 the canonical witness
    // uses delta = 1.
    const std::int64_t delta_end = std::max<std::int64_t>(len, 2);
    for (std::int64_t i = 0; i < len; ++i) {
        const KString left = c.window(i, t - 1);
        for (std::int64_t delta = 1; delta < delta_end; ++delta) {
            if (std::gcd(delta, len) != 1) continue;
            if (left == c.window(i + static_cast<std::int64_t>(k) * delta, t - 1))
                return BenignWitness{delta, i};
        }
    }
    return std::nullopt;
}

}  // namespace ucycle
