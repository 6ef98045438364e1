#include "ucycle/weave.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ucycle {

namespace {

void check_divisible(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u) {
    require(t >= 1 && u >= 1, Errc::precondition_violated, "block sizes must be positive");
    const std::int64_t k = t + u;
    require(len_c % k == 0 && len_d % k == 0, Errc::length_not_divisible,
            "cycle lengths must be multiples of t+u = " + std::to_string(k));
}

}  // namespace

std::int64_t weave_r(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u) {
    check_divisible(len_c, len_d, t, u);
    return std::lcm(len_c * u, len_d * t) / (static_cast<std::int64_t>(t) * u);
}

std::int64_t weave_s(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u) {
    check_divisible(len_c, len_d, t, u);
    return std::gcd(len_c * u, len_d * t) / (static_cast<std::int64_t>(t) + u);
}

IndexPair weave_offsets(std::int64_t i, std::int32_t t, std::int32_t u) {
    const std::int64_t k = static_cast<std::int64_t>(t) + u;
    const std::int64_t n = floor_div(i, k);
    const std::int64_t m = i - n * k;
    if (m < t) return IndexPair{n * t + m, n * u};
    return IndexPair{(n + 1) * t, n * u + (m - t)};
}

std::vector<IndexPair> index_table(std::int64_t len_c, std::int64_t len_d, std::int32_t t,
                                   std::int32_t u) {
    const std::int64_t rk = weave_r(len_c, len_d, t, u) * (static_cast<std::int64_t>(t) + u);
    std::vector<IndexPair> h;
    h.reserve(static_cast<std::size_t>(rk));
    for (std::int64_t i = 0; i < rk; ++i) h.push_back(weave_offsets(i, t, u));
    return h;
}

std::int64_t weave_s_minimal(std::int64_t len_c, std::int64_t len_d, std::int32_t t,
                             std::int32_t u) {
    const std::vector<IndexPair> h = index_table(len_c, len_d, t, u);
    std::vector<std::pair<std::int64_t, std::int64_t>> normalized;
    normalized.reserve(h.size());
    for (const IndexPair& p : h)
        normalized.emplace_back(floor_mod(p.f, len_c), floor_mod(p.g, len_d));
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    const std::int64_t bound = std::lcm(len_c, len_d);
    for (std::int64_t s = 1; s <= bound; ++s) {
        for (const auto& [f, g] : normalized) {
            const auto key = std::make_pair(floor_mod(f + s, len_c), floor_mod(g - s, len_d));
            if (std::binary_search(normalized.begin(), normalized.end(), key)) return s;
        }
    }
    raise(Errc::constraint_unsatisfied, "no shift found up to lcm of lengths");
}

Cycle weave(const WeaveSpec& spec) {
    const std::int64_t r = weave_r(spec.c.length(), spec.d.length(), spec.t, spec.u);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(r * (spec.t + spec.u)));
    for (std::int64_t n = 0; n < r; ++n) {
        const KString from_c = spec.c.window(spec.c_offset + n * spec.t, spec.t);
        const KString from_d = spec.d.window(spec.d_offset + n * spec.u, spec.u);
        out.insert(out.end(), from_c.begin(), from_c.end());
        out.insert(out.end(), from_d.begin(), from_d.end());
    }
    return Cycle(std::move(out));
}

Cycle shifted_weave(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u,
                    std::int64_t a) {
    return weave(WeaveSpec{c, t, d, u, a, -a});
}

std::int64_t loop_shift(std::int64_t len_c, std::int64_t len_d, std::int32_t t, std::int32_t u) {
    const std::int64_t r = weave_r(len_c, len_d, t, u);
    const std::int64_t s = weave_s(len_c, len_d, t, u);
    const std::int64_t k = static_cast<std::int64_t>(t) + u;
    for (std::int64_t n = 0; n < r; ++n) {
        if (floor_mod(n * t - s, len_c) == 0 && floor_mod(n * u + s, len_d) == 0) return n * k;
    }
    raise(Errc::constraint_unsatisfied, "no rotation step below r; shift count inconsistent");
}

std::vector<Cycle> product_family(const Cycle& c, std::int32_t t, const Cycle& d, std::int32_t u) {
    const std::int64_t s = weave_s(c.length(), d.length(), t, u);
    // The closed form is a derived quantity; the minimality search is the
    // definition. They must agree.
    assert(s == weave_s_minimal(c.length(), d.length(), t, u));
    std::vector<Cycle> family;
    family.reserve(static_cast<std::size_t>(s));
    for (std::int64_t a = 0; a < s; ++a) family.push_back(shifted_weave(c, t, d, u, a));
    return family;
}

}  // namespace ucycle
