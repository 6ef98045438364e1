#include "ucycle/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ucycle/sum.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {

Cycle d_cycle(const DCycleSpec& spec) {
    require(spec.n >= 1, Errc::precondition_violated, "modulus must be positive");
    require(spec.w >= 1 && spec.w < spec.n, Errc::precondition_violated,
            "step must satisfy 1 <= w < n");
    require(spec.x >= 0 && spec.x < spec.n, Errc::precondition_violated,
            "start must satisfy 0 <= x < n");
    const std::int32_t len = spec.n / std::gcd(spec.w, spec.n);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::int32_t i = 0; i < len; ++i)
        out.push_back(Symbol{static_cast<std::int32_t>(
            floor_mod(spec.x + static_cast<std::int64_t>(i) * spec.w, spec.n))});
    return Cycle(std::move(out));
}

namespace {

// All D_w(x) for 1 <= w <= (n-1)/2, w ascending then x ascending, minus any
// listed exclusions.
std::vector<Cycle> d_family(std::int32_t n, const std::vector<DCycleSpec>& excluded) {
    std::vector<Cycle> members;
    for (std::int32_t w = 1; w <= (n - 1) / 2; ++w) {
        const std::int32_t g = std::gcd(w, n);
        for (std::int32_t x = 0; x < g; ++x) {
            const bool skip = std::any_of(excluded.begin(), excluded.end(),
                                          [&](const DCycleSpec& e) { return e.w == w && e.x == x; });
            if (!skip) members.push_back(d_cycle({n, w, x}));
        }
    }
    return members;
}

Cycle rotate_to_symbol(const Cycle& c, Symbol s) {
    for (std::int64_t i = 0; i < c.length(); ++i)
        if (c.at(i) == s) return c.rotated(i);
    raise(Errc::constraint_unsatisfied, "symbol not present in cycle");
}

}  // namespace

Cycle pair_ucycle_basic(std::int32_t n) {
    require(n >= 3 && n % 2 == 1, Errc::precondition_violated, "need odd n >= 3");
    CyclePool pool{d_family(n, {}), 2};
    Cycle e = rotate_to_symbol(summate(pool).first, Symbol{0});
    const VerificationReport report = is_ucycle(e, n, 2);
    require(report.ok, Errc::constraint_unsatisfied,
            "pair ucycle self-check failed: " + report.describe());
    return e;
}

Cycle pair_ucycle(std::int32_t n, std::int32_t k) {
    require(k > 3, Errc::precondition_violated, "need k > 3");
    require(n % 2 == 1 && n >= 2 * k - 1, Errc::precondition_violated, "need odd n >= 2k-1");

    // Everything except D_{k-1}(0) and D_1(0); D_2(0) stays and touches all
    // symbols, so the pool is 2-summable.
    CyclePool pool{d_family(n, {{n, k - 1, 0}, {n, 1, 0}}), 2};
    const Cycle e = rotate_to_symbol(summate(pool).first, Symbol{0});

    // D_{n-1}(0) . D_{k-1}(0) . E; all three start with symbol 0, so both
    // 2-sums use rotation offsets (0, 0) and reproduce plain concatenation.
    const Cycle lead = d_cycle({n, n - 1, 0});
    const Cycle mid = d_cycle({n, k - 1, 0});
    const Cycle out = k_sum_first(k_sum_first(lead, mid, 2), e, 2);

    const VerificationReport report = is_ucycle(out, n, 2);
    require(report.ok, Errc::constraint_unsatisfied,
            "pair ucycle self-check failed: " + report.describe());
    const std::int64_t i = n - (k - 1);
    require(out.at(i) == Symbol{k - 1} && out.at(i + k) == Symbol{k - 1},
            Errc::constraint_unsatisfied, "expected equal 1-windows at n-(k-1) and n+1");
    return out;
}

Cycle singleton_ucycle(std::span<const Symbol> symbols) {
    require(!symbols.empty(), Errc::precondition_violated, "need at least one symbol");
    std::vector<Symbol> sorted(symbols.begin(), symbols.end());
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            Errc::alphabet_mismatch, "symbols must be distinct");
    return Cycle(std::vector<Symbol>(symbols.begin(), symbols.end()));
}

Cycle relabel(const Cycle& c, const KString& target_window, std::int64_t x,
              std::span<const Symbol> target_alphabet) {
    const std::vector<Symbol> source = c.distinct_symbols();
    std::vector<Symbol> target(target_alphabet.begin(), target_alphabet.end());
    std::sort(target.begin(), target.end());
    require(std::adjacent_find(target.begin(), target.end()) == target.end(),
            Errc::alphabet_mismatch, "target alphabet has duplicate symbols");
    require(source.size() == target.size(), Errc::alphabet_mismatch,
            "target alphabet size " + std::to_string(target.size()) +
                " does not match source size " + std::to_string(source.size()));

    const KString anchor_src = c.window(x, static_cast<std::int64_t>(target_window.size()));
    {
        KString probe = anchor_src;
        std::sort(probe.begin(), probe.end());
        require(std::adjacent_find(probe.begin(), probe.end()) == probe.end(),
                Errc::precondition_violated, "anchor window has a repeated symbol");
        probe = target_window;
        std::sort(probe.begin(), probe.end());
        require(std::adjacent_find(probe.begin(), probe.end()) == probe.end(),
                Errc::precondition_violated, "target window has a repeated symbol");
    }
    for (Symbol s : target_window)
        require(std::binary_search(target.begin(), target.end(), s), Errc::alphabet_mismatch,
                "target window symbol outside target alphabet");

    std::map<Symbol, Symbol> f;
    for (std::size_t i = 0; i < target_window.size(); ++i) f[anchor_src[i]] = target_window[i];

    std::vector<Symbol> rest_src;
    for (Symbol s : source)
        if (!f.contains(s)) rest_src.push_back(s);
    std::vector<Symbol> rest_tgt;
    for (Symbol s : target) {
        const bool used = std::any_of(target_window.begin(), target_window.end(),
                                      [&](Symbol w) { return w == s; });
        if (!used) rest_tgt.push_back(s);
    }
    require(rest_src.size() == rest_tgt.size(), Errc::alphabet_mismatch,
            "anchor window symbols do not line up with the target alphabet");
    for (std::size_t i = 0; i < rest_src.size(); ++i) f[rest_src[i]] = rest_tgt[i];

    std::vector<Symbol> out;
    out.reserve(c.symbols().size());
    for (Symbol s : c.symbols()) out.push_back(f.at(s));
    return Cycle(std::move(out));
}

}  // namespace ucycle
