#pragma once

// Assembly pipelines. The k=4 path builds the eight component cycles under
// the prescribed window equations, weaves the mixed families, collapses them
// through benign partitions, and 4-summates the lot into a universal cycle
// on a+b+2 symbols. The k=2 analog exercises the same machinery end to end
// at desk scale, where all of its inputs are constructible.

#include <cstdint>
#include <optional>
#include <vector>

#include "ucycle/cycle.hpp"
#include "ucycle/sum.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {

struct ComponentAlphabets {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::vector<Symbol> set_a;       // [0, a)
    std::vector<Symbol> set_b;       // [a, a+b)
    Symbol alpha;                    // a+b
    Symbol beta;                     // a+b+1
    std::vector<Symbol> global;      // [0, a+b+2)
    std::vector<Symbol> a_alpha;     // set_a + alpha
    std::vector<Symbol> b_beta;      // set_b + beta
    std::vector<Symbol> a_alpha_beta;
    std::vector<Symbol> b_alpha_beta;

    static ComponentAlphabets layout(std::int32_t a, std::int32_t b);
};

struct ComponentSet {
    ComponentAlphabets alph;
    // placeholder values; build_components fills every slot
    Cycle c0{{Symbol{0}}}, c1{{Symbol{0}}}, c2{{Symbol{0}}}, c3{{Symbol{0}}};
    Cycle d1{{Symbol{0}}}, d2{{Symbol{0}}}, d3{{Symbol{0}}}, d4{{Symbol{0}}};
    BenignWitness c2_witness;
};

// The five target families the component ranges must cover.
struct DecompositionPlan {
    KSetFamily m0, m1, m2, m3, m4;
};

DecompositionPlan decomposition_plan(const ComponentAlphabets& alph);

// M_0 ... M_4 are pairwise disjoint and union to the 4-subsets of the full
// alphabet.
bool plan_disjoint_cover(const DecompositionPlan& plan, const ComponentAlphabets& alph);

struct BuildOptions {
    // When false, the four supplied base cycles are taken as-is (structural
    // runs with stand-ins); window equations and component self-checks still
    // apply.
    bool verify_inputs = true;
};

// Builds C(0..3) and D(1..4). base_a/base_b are universal cycles on the
// 4-subsets of [a+2]/[b+2]; k3_a/k3_b on the 3-subsets of [a+1]/[b+1].
// Raises constraint_unsatisfied naming the first violated window equation.
ComponentSet build_components(std::int32_t a, std::int32_t b, const Cycle& base_a,
                              const Cycle& base_b, const Cycle& k3_a, const Cycle& k3_b,
                              const BuildOptions& options = {});

// The fourteen window equations, in order; empty string means all hold.
std::string check_figure_equations(const ComponentSet& cs);

// The first u_j shifted weaves of mixed family j in {1,2,3}: the connectors
// that tie the final pool together.
std::vector<Cycle> weave_connectors(const ComponentSet& cs, std::int32_t j);

struct ComposeReport {
    std::size_t pool_size = 0;
    bool pool_summable = false;
    VerificationReport final_check;
    std::optional<Cycle> result;
    SumTrace trace;
};

// Full assembly; never throws on a failed final verification (the report
// carries it). Component preconditions still raise.
ComposeReport compose_k4_report(const ComponentSet& cs);

// Convenience wrapper: raises not_summable / verification_failed.
Cycle compose_k4(const ComponentSet& cs);

// k=2 analog on a+b+1 symbols (a, b even, >= 4); returns a verified cycle.
Cycle compose_k2(std::int32_t a, std::int32_t b);

struct ScheduleStep {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::int32_t target() const { return a + b + 2; }
    friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

// Induction plan reaching n (n ≡ 2 mod 8, n >= 18) from the bases {18, 26}:
// the composition steps in execution order; empty for the bases themselves.
std::vector<ScheduleStep> corollary_schedule(std::int32_t n);

}  // namespace ucycle
