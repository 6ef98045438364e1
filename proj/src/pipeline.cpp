#include "ucycle/pipeline.hpp"

#include <algorithm>
#include <string>

#include "ucycle/benign.hpp"
#include "ucycle/builders.hpp"
#include "ucycle/weave.hpp"

namespace ucycle {

namespace {

bool member(std::span<const Symbol> sorted, Symbol s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
}

Symbol smallest_not_in(std::span<const Symbol> sorted, const KString& taken) {
    for (Symbol s : sorted) {
        if (std::find(taken.begin(), taken.end(), s) == taken.end()) return s;
    }
    raise(Errc::constraint_unsatisfied, "alphabet exhausted while padding a window");
}

void verify_component(const Cycle& c, std::span<const Symbol> alphabet, std::int32_t k,
                      const std::string& name) {
    const VerificationReport report = is_ucycle_on(c, alphabet, k);
    require(report.ok, Errc::verification_failed, name + ": " + report.describe());
}

// Prescribed first three symbols, remaining alphabet ascending.
Cycle ordered_singleton(const KString& head, std::span<const Symbol> alphabet) {
    std::vector<Symbol> symbols = {head.begin(), head.end()};
    for (Symbol s : alphabet)
        if (std::find(head.begin(), head.end(), s) == head.end()) symbols.push_back(s);
    return singleton_ucycle(symbols);
}

}  // namespace

ComponentAlphabets ComponentAlphabets::layout(std::int32_t a, std::int32_t b) {
    ComponentAlphabets alph;
    alph.a = a;
    alph.b = b;
    for (std::int32_t i = 0; i < a; ++i) alph.set_a.push_back(Symbol{i});
    for (std::int32_t i = 0; i < b; ++i) alph.set_b.push_back(Symbol{a + i});
    alph.alpha = Symbol{a + b};
    alph.beta = Symbol{a + b + 1};
    alph.global = ascending_symbols(a + b + 2);
    alph.a_alpha = alph.set_a;
    alph.a_alpha.push_back(alph.alpha);
    alph.b_beta = alph.set_b;
    alph.b_beta.push_back(alph.beta);
    alph.a_alpha_beta = alph.a_alpha;
    alph.a_alpha_beta.push_back(alph.beta);
    alph.b_alpha_beta = alph.set_b;
    alph.b_alpha_beta.push_back(alph.alpha);
    alph.b_alpha_beta.push_back(alph.beta);
    return alph;
}

DecompositionPlan decomposition_plan(const ComponentAlphabets& alph) {
    DecompositionPlan plan;
    plan.m0 = all_k_subsets(alph.a_alpha_beta, 4);
    plan.m1 = all_k_subsets(alph.a_alpha, 3).product(all_k_subsets(alph.set_b, 1));
    plan.m2 = all_k_subsets(alph.a_alpha, 2).product(all_k_subsets(alph.b_beta, 2));
    plan.m3 = all_k_subsets(alph.set_a, 1).product(all_k_subsets(alph.b_beta, 3));
    plan.m4 = all_k_subsets(alph.b_alpha_beta, 4);
    return plan;
}

bool plan_disjoint_cover(const DecompositionPlan& plan, const ComponentAlphabets& alph) {
    // P_4 of the full alphabet is duplicate-free, so multiset equality of the
    // union both covers it and forces the five families pairwise disjoint.
    const KSetFamily all = all_k_subsets(alph.global, 4);
    const KSetFamily got =
        plan.m0.united(plan.m1).united(plan.m2).united(plan.m3).united(plan.m4);
    return got == all;
}

std::string check_figure_equations(const ComponentSet& cs) {
    struct Eq {
        std::int32_t id;
        KString lhs, rhs;
    };
    const Cycle &c0 = cs.c0, &c1 = cs.c1, &c2 = cs.c2, &c3 = cs.c3;
    const Cycle &d1 = cs.d1, &d2 = cs.d2, &d3 = cs.d3, &d4 = cs.d4;
    const std::vector<Eq> eqs = {
        {1, c3.window(0, 1), c2.window(3, 1)},
        {2, c3.window(1, 1), c2.window(1, 1)},
        {3, c3.window(2, 1), c2.window(2, 1)},
        {4, c1.window(-2, 2), c2.window(0, 2)},
        {5, c1.window(-1, 2), c2.window(1, 2)},
        {6, c0.window(-1, 3), c1.window(-1, 3)},
        {7, c0.window(0, 3), c1.window(0, 3)},
        {8, d1.window(0, 1), d2.window(0, 1)},
        {9, d1.window(1, 1), d2.window(-2, 1)},
        {10, d1.window(2, 1), d2.window(-1, 1)},
        {11, d3.window(-2, 2), d2.window(-1, 2)},
        {12, d3.window(-1, 2), d2.window(0, 2)},
        {13, d4.window(0, 3), d3.window(-1, 3)},
        {14, d4.window(1, 3), d3.window(0, 3)},
    };
    for (const Eq& eq : eqs)
        if (eq.lhs != eq.rhs) return "window equation (" + std::to_string(eq.id) + ") violated";
    return "";
}

ComponentSet build_components(std::int32_t a, std::int32_t b, const Cycle& base_a,
                              const Cycle& base_b, const Cycle& k3_a, const Cycle& k3_b,
                              const BuildOptions& options) {
    require(a > 0 && b > 0 && a % 8 == 0 && b % 8 == 0, Errc::precondition_violated,
            "a and b must be positive multiples of 8");
    require((a + 1) % 3 != 0 && (b + 1) % 3 != 0, Errc::precondition_violated,
            "a+1 and b+1 must not be divisible by 3");

    ComponentSet cs;
    cs.alph = ComponentAlphabets::layout(a, b);
    const ComponentAlphabets& alph = cs.alph;

    if (options.verify_inputs) {
        verify_component(base_a, ascending_symbols(a + 2), 4, "base cycle for side A");
        verify_component(base_b, ascending_symbols(b + 2), 4, "base cycle for side B");
        verify_component(k3_a, ascending_symbols(a + 1), 3, "3-subset cycle for side A");
        verify_component(k3_b, ascending_symbols(b + 1), 3, "3-subset cycle for side B");
    }

    // C(2), D(2): benign pair ucycles, relabeled so the guarded 3-windows
    // avoid the special symbols.
    cs.c2 = relabel(pair_ucycle(a + 1, 4), {alph.set_a[0], alph.set_a[1], alph.set_a[2]}, 1,
                    alph.a_alpha);
    cs.d2 = relabel(pair_ucycle(b + 1, 4), {alph.set_b[0], alph.set_b[1], alph.set_b[2]}, -2,
                    alph.b_beta);
    verify_component(cs.c2, alph.a_alpha, 2, "C(2)");
    verify_component(cs.d2, alph.b_beta, 2, "D(2)");
    for (Symbol s : cs.c2.window(1, 3))
        require(s != alph.alpha, Errc::constraint_unsatisfied, "alpha inside C(2) window at 1");
    for (Symbol s : cs.d2.window(-2, 3))
        require(s != alph.beta, Errc::constraint_unsatisfied, "beta inside D(2) window at -2");
    {
        const auto witness = find_benign_witness(cs.c2, 2, 4);
        require(witness.has_value(), Errc::constraint_unsatisfied, "C(2) lost its benign witness");
        cs.c2_witness = *witness;
    }

    // C(3), D(1): one-symbol ucycles opening with the prescribed windows.
    const KString c3_head = {cs.c2.at(3), cs.c2.at(1), cs.c2.at(2)};
    for (Symbol s : c3_head)
        require(member(alph.set_a, s), Errc::constraint_unsatisfied,
                "C(3) opening window reaches outside the A symbols");
    cs.c3 = ordered_singleton(c3_head, alph.set_a);

    const KString d1_head = {cs.d2.at(0), cs.d2.at(-2), cs.d2.at(-1)};
    for (Symbol s : d1_head)
        require(member(alph.set_b, s), Errc::constraint_unsatisfied,
                "D(1) opening window reaches outside the B symbols");
    cs.d1 = ordered_singleton(d1_head, alph.set_b);
    verify_component(cs.c3, alph.set_a, 1, "C(3)");
    verify_component(cs.d1, alph.set_b, 1, "D(1)");

    // C(1), D(3): relabeled 3-subset ucycles. The C side pins a full
    // 4-window; the D side pins 3 symbols and pads with the least unused one.
    cs.c1 = relabel(k3_a, cs.c2.window(0, 4), -2, alph.a_alpha);
    {
        KString s = cs.d2.window(-1, 3);
        s.push_back(smallest_not_in(alph.b_beta, s));
        cs.d3 = relabel(k3_b, s, -2, alph.b_beta);
    }

    // C(0), D(4): relabeled base cycles, pinned to the 4-windows above.
    {
        KString s = cs.c1.window(-1, 4);
        s.push_back(smallest_not_in(alph.a_alpha_beta, s));
        cs.c0 = relabel(base_a, s, -1, alph.a_alpha_beta);
    }
    {
        KString s = cs.d3.window(-1, 4);
        s.push_back(smallest_not_in(alph.b_alpha_beta, s));
        cs.d4 = relabel(base_b, s, 0, alph.b_alpha_beta);
    }

    if (options.verify_inputs) {
        verify_component(cs.c1, alph.a_alpha, 3, "C(1)");
        verify_component(cs.d3, alph.b_beta, 3, "D(3)");
        verify_component(cs.c0, alph.a_alpha_beta, 4, "C(0)");
        verify_component(cs.d4, alph.b_alpha_beta, 4, "D(4)");
    }

    // Anchor equalities, then the fourteen derived equations.
    require(cs.c3.window(0, 3) == c3_head, Errc::constraint_unsatisfied, "C(3) anchor mismatch");
    require(cs.d1.window(0, 3) == d1_head, Errc::constraint_unsatisfied, "D(1) anchor mismatch");
    require(cs.c1.window(-2, 4) == cs.c2.window(0, 4), Errc::constraint_unsatisfied,
            "C(1) anchor mismatch");
    require(cs.d3.window(-2, 3) == cs.d2.window(-1, 3), Errc::constraint_unsatisfied,
            "D(3) anchor mismatch");
    require(cs.c0.window(-1, 4) == cs.c1.window(-1, 4), Errc::constraint_unsatisfied,
            "C(0) anchor mismatch");
    require(cs.d4.window(0, 4) == cs.d3.window(-1, 4), Errc::constraint_unsatisfied,
            "D(4) anchor mismatch");
    const std::string eq = check_figure_equations(cs);
    require(eq.empty(), Errc::constraint_unsatisfied, eq);

    for (const auto& [cycle, name] :
         {std::pair<const Cycle*, const char*>{&cs.c1, "C(1)"}, {&cs.c2, "C(2)"},
          {&cs.c3, "C(3)"}, {&cs.d1, "D(1)"}, {&cs.d2, "D(2)"}, {&cs.d3, "D(3)"}}) {
        require(cycle->length() % 4 == 0, Errc::constraint_unsatisfied,
                std::string(name) + " length is not divisible by 4");
    }

    return cs;
}

std::vector<Cycle> weave_connectors(const ComponentSet& cs, std::int32_t j) {
    std::vector<Cycle> out;
    switch (j) {
        case 1:
            for (std::int64_t i = 0; i < 3; ++i)
                out.push_back(weave(WeaveSpec{cs.d1, 1, cs.c1, 3, i, -i}));
            break;
        case 2:
            for (std::int64_t i = 0; i < 2; ++i)
                out.push_back(weave(WeaveSpec{cs.c2, 2, cs.d2, 2, i, -i}));
            break;
        case 3:
            for (std::int64_t i = 0; i < 3; ++i)
                out.push_back(weave(WeaveSpec{cs.c3, 1, cs.d3, 3, i, -i}));
            break;
        default:
            raise(Errc::precondition_violated, "connector family index must be 1, 2 or 3");
    }
    return out;
}

ComposeReport compose_k4_report(const ComponentSet& cs) {
    const BenignWitness trivial{1, 0};
    const std::vector<Cycle> family1 = reduced_product(cs.d1, 1, cs.c1, 3, trivial);
    const std::vector<Cycle> family2 = reduced_product(cs.c2, 2, cs.d2, 2, cs.c2_witness);
    const std::vector<Cycle> family3 = reduced_product(cs.c3, 1, cs.d3, 3, trivial);

    CyclePool pool{{cs.c0, cs.d4}, 4};
    for (const auto& family : {family1, family2, family3})
        pool.members.insert(pool.members.end(), family.begin(), family.end());

    ComposeReport report;
    report.pool_size = pool.members.size();
    report.pool_summable = is_summable(pool);
    if (!report.pool_summable) return report;

    auto [cycle, trace] = summate(pool);
    report.trace = std::move(trace);
    report.final_check = is_ucycle(cycle, cs.alph.a + cs.alph.b + 2, 4);
    report.result = std::move(cycle);
    return report;
}

Cycle compose_k4(const ComponentSet& cs) {
    ComposeReport report = compose_k4_report(cs);
    require(report.pool_summable, Errc::not_summable, "component pool is not 4-summable");
    require(report.final_check.ok, Errc::verification_failed,
            "assembled cycle failed verification: " + report.final_check.describe());
    return *std::move(report.result);
}

Cycle compose_k2(std::int32_t a, std::int32_t b) {
    require(a >= 4 && b >= 4 && a % 2 == 0 && b % 2 == 0, Errc::precondition_violated,
            "need even a, b >= 4");
    const std::int32_t n = a + b + 1;
    const Symbol alpha{a + b};

    std::vector<Symbol> set_a, set_b;
    for (std::int32_t i = 0; i < a; ++i) set_a.push_back(Symbol{i});
    for (std::int32_t i = 0; i < b; ++i) set_b.push_back(Symbol{a + i});
    std::vector<Symbol> a_alpha = set_a;
    a_alpha.push_back(alpha);
    std::vector<Symbol> b_alpha = set_b;
    b_alpha.push_back(alpha);

    const Cycle ua = relabel(pair_ucycle_basic(a + 1), {}, 0, a_alpha);
    const Cycle ub = relabel(pair_ucycle_basic(b + 1), {}, 0, b_alpha);
    const Cycle sa = singleton_ucycle(set_a);
    const Cycle sb = singleton_ucycle(set_b);

    // Singletons are trivially (1,2)-benign; one class covers the product.
    const std::vector<Cycle> mid = reduced_product(sa, 1, sb, 1, BenignWitness{1, 0});
    require(mid.size() == 1, Errc::constraint_unsatisfied, "expected a single product class");

    CyclePool pool{{ua, mid.front(), ub}, 2};
    require(is_summable(pool), Errc::not_summable, "k=2 pool is not connected");
    const Cycle out = summate(pool).first;

    const VerificationReport report = is_ucycle(out, n, 2);
    require(report.ok, Errc::constraint_unsatisfied,
            "k=2 assembly failed verification: " + report.describe());
    return out;
}

std::vector<ScheduleStep> corollary_schedule(std::int32_t n) {
    require(n >= 18 && n % 8 == 2, Errc::precondition_violated, "need n >= 18 with n = 2 mod 8");
    std::vector<ScheduleStep> out;
    const std::int32_t index = (n - 2) / 8;

    // Walk the induction backwards, then emit in execution order.
    std::vector<std::int32_t> chain;
    std::int32_t i = index;
    while (i > 3) {
        chain.push_back(i);
        if (i == 4) break;
        const std::int32_t x = i - 1;
        i = (x % 3 == 2) ? x - 2 : x - 1;
    }
    std::reverse(chain.begin(), chain.end());

    for (std::int32_t idx : chain) {
        ScheduleStep step;
        if (idx == 4) {
            step = {16, 16};
        } else {
            const std::int32_t x = idx - 1;
            step = (x % 3 == 2) ? ScheduleStep{8 * (x - 2), 24} : ScheduleStep{8 * (x - 1), 16};
        }
        require(step.a % 8 == 0 && step.b % 8 == 0 && (step.a + 1) % 3 != 0 &&
                    (step.b + 1) % 3 != 0,
                Errc::constraint_unsatisfied, "schedule step violates the divisibility conditions");
        require(step.target() == 8 * idx + 2, Errc::constraint_unsatisfied,
                "schedule step misses its target");
        out.push_back(step);
    }
    return out;
}

}  // namespace ucycle
