// Command-line front end. Subcommands operate on plain-text cycle files and
// print bare cycles on stdout (compact when every alphabet token is a single
// character). Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ucycle/benign.hpp"
#include "ucycle/builders.hpp"
#include "ucycle/cycle.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/io.hpp"
#include "ucycle/pipeline.hpp"
#include "ucycle/search.hpp"
#include "ucycle/sum.hpp"
#include "ucycle/verify.hpp"
#include "ucycle/weave.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) ucycle::raise(ucycle::Errc::parse_error, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ucycle::CycleFile load(const std::string& path) {
    return ucycle::parse_cycle_file(read_input(path));
}

ucycle::Cycle first_cycle(const ucycle::CycleFile& file) {
    if (file.cycles.empty())
        ucycle::raise(ucycle::Errc::parse_error, "file contains no cycle");
    return file.cycles.front().cycle;
}

void print_cycle(const ucycle::Cycle& c, const ucycle::Alphabet& alphabet) {
    std::cout << ucycle::format_cycle(c, alphabet) << "\n";
}

void write_output(const std::string& path, const ucycle::CycleFile& file) {
    std::ofstream out(path);
    if (!out) ucycle::raise(ucycle::Errc::parse_error, "cannot open output file: " + path);
    out << ucycle::serialize(file);
}

ucycle::KString parse_tokens(const std::string& text, const ucycle::Alphabet& alphabet) {
    ucycle::KString out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        const auto sym = alphabet.find(tok);
        if (!sym)
            ucycle::raise(ucycle::Errc::alphabet_mismatch, "token '" + tok + "' not in alphabet");
        out.push_back(*sym);
    }
    return out;
}

// Token-preserving merge of two file alphabets; cycles from either file can
// then be remapped into the shared id space.
ucycle::Alphabet merge_alphabets(const ucycle::Alphabet& a, const ucycle::Alphabet& b) {
    std::vector<std::string> labels;
    for (std::int32_t i = 0; i < a.size(); ++i) labels.push_back(a.label(ucycle::Symbol{i}));
    for (std::int32_t i = 0; i < b.size(); ++i) {
        const std::string& tok = b.label(ucycle::Symbol{i});
        if (!a.find(tok)) labels.push_back(tok);
    }
    return ucycle::Alphabet(std::move(labels));
}

ucycle::Cycle remap(const ucycle::Cycle& c, const ucycle::Alphabet& from,
                    const ucycle::Alphabet& to) {
    std::vector<ucycle::Symbol> out;
    out.reserve(c.symbols().size());
    for (ucycle::Symbol s : c.symbols()) {
        const auto mapped = to.find(from.label(s));
        if (!mapped)
            ucycle::raise(ucycle::Errc::alphabet_mismatch,
                          "token '" + from.label(s) + "' missing from merged alphabet");
        out.push_back(*mapped);
    }
    return ucycle::Cycle(std::move(out));
}

int exit_code_for(const ucycle::Error& e) {
    switch (e.code()) {
        case ucycle::Errc::budget_exceeded:
            return kExitBudget;
        case ucycle::Errc::verification_failed:
        case ucycle::Errc::not_summable:
        case ucycle::Errc::no_common_window:
        case ucycle::Errc::constraint_unsatisfied:
            return kExitVerification;
        default:
            return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal cycle toolkit: sums, weaves, benign partitions, assembly"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "check the ucycle property of a cycle file");
    std::string verify_file;
    int verify_k = 2;
    verify->add_option("file", verify_file, "cycle file ('-' for stdin)")->required();
    verify->add_option("--k", verify_k, "subset size")->required();

    auto* range = app.add_subcommand("range", "print the k-range windows of a cycle");
    std::string range_file;
    int range_k = 2;
    range->add_option("file", range_file)->required();
    range->add_option("--k", range_k)->required();

    auto* sum = app.add_subcommand("sum", "k-sum of two cycles");
    std::string sum_file_a, sum_file_b;
    int sum_k = 2;
    bool sum_all = false;
    sum->add_option("left", sum_file_a)->required();
    sum->add_option("right", sum_file_b)->required();
    sum->add_option("--k", sum_k)->required();
    sum->add_flag("--all", sum_all, "print every k-sum, one per line");

    auto* summ = app.add_subcommand("summate", "k-summation of all cycles in a file");
    std::string summate_file, summate_out;
    int summate_k = 2;
    summ->add_option("file", summate_file)->required();
    summ->add_option("--k", summate_k)->required();
    summ->add_option("--out", summate_out, "write result as a cycle file");

    auto* weave_cmd = app.add_subcommand("weave", "interleave two cycles from one file");
    std::string weave_file;
    int weave_t = 1, weave_u = 1;
    std::int64_t weave_c = 0, weave_d = 0;
    weave_cmd->add_option("file", weave_file, "file with the two factor cycles")->required();
    weave_cmd->add_option("--t", weave_t)->required();
    weave_cmd->add_option("--u", weave_u)->required();
    weave_cmd->add_option("--c", weave_c, "offset into the first factor");
    weave_cmd->add_option("--d", weave_d, "offset into the second factor");

    auto* product = app.add_subcommand("product", "the full family of shifted weaves");
    std::string product_file;
    int product_t = 1, product_u = 1;
    product->add_option("file", product_file)->required();
    product->add_option("--t", product_t)->required();
    product->add_option("--u", product_u)->required();

    auto* bcheck = app.add_subcommand("benign-check", "find a benign witness");
    std::string bcheck_file;
    int bcheck_t = 1, bcheck_k = 2;
    bcheck->add_option("file", bcheck_file)->required();
    bcheck->add_option("--t", bcheck_t)->required();
    bcheck->add_option("--k", bcheck_k)->required();

    auto* bpart = app.add_subcommand("benign-partition", "partition the weave family");
    std::string bpart_file;
    int bpart_t = 1, bpart_u = 1;
    bpart->add_option("file", bpart_file, "file with the two factor cycles")->required();
    bpart->add_option("--t", bpart_t)->required();
    bpart->add_option("--u", bpart_u)->required();

    auto* pairs = app.add_subcommand("build-pairs", "benign ucycle on 2-subsets");
    int pairs_n = 9, pairs_k = 4;
    std::string pairs_out;
    pairs->add_option("--n", pairs_n)->required();
    pairs->add_option("--k", pairs_k)->required();
    pairs->add_option("--out", pairs_out, "write result as a cycle file");

    auto* rel = app.add_subcommand("relabel", "apply a window-anchored symbol bijection");
    std::string rel_file, rel_window;
    std::int64_t rel_x = 0;
    rel->add_option("file", rel_file)->required();
    rel->add_option("--window", rel_window, "target window tokens, space separated")->required();
    rel->add_option("--x", rel_x, "anchor index");

    auto* search = app.add_subcommand("search", "backtracking search for a ucycle");
    int search_n = 8, search_k = 3;
    std::uint64_t search_seed = 0;
    std::int64_t search_budget = 1000;
    std::string search_heuristic = "fewest-extensions";
    std::string search_prefix, search_out;
    search->add_option("--n", search_n)->required();
    search->add_option("--k", search_k)->required();
    search->add_option("--seed", search_seed);
    search->add_option("--budget-ms", search_budget);
    search->add_option("--heuristic", search_heuristic)
        ->check(CLI::IsMember({"lexicographic", "random-restart", "fewest-extensions"}));
    search->add_option("--prefix", search_prefix, "space-separated symbol ids");
    search->add_option("--out", search_out, "write result as a cycle file");

    auto* k2 = app.add_subcommand("compose-k2", "assemble a ucycle on 2-subsets");
    int k2_a = 4, k2_b = 4;
    std::string k2_out;
    k2->add_option("--a", k2_a)->required();
    k2->add_option("--b", k2_b)->required();
    k2->add_option("--out", k2_out, "write result as a cycle file");

    auto* k4 = app.add_subcommand("compose-k4", "assemble a ucycle on 4-subsets from bases");
    int k4_a = 16, k4_b = 16;
    std::string k4_base_a, k4_base_b, k4_k3a, k4_k3b, k4_out;
    bool k4_allow_unverified = false;
    k4->add_option("--a", k4_a)->required();
    k4->add_option("--b", k4_b)->required();
    k4->add_option("--base-a", k4_base_a, "ucycle on 4-subsets of [a+2]")->required();
    k4->add_option("--base-b", k4_base_b, "ucycle on 4-subsets of [b+2]")->required();
    k4->add_option("--k3-a", k4_k3a, "ucycle on 3-subsets of [a+1]")->required();
    k4->add_option("--k3-b", k4_k3b, "ucycle on 3-subsets of [b+1]")->required();
    k4->add_flag("--allow-unverified-inputs", k4_allow_unverified,
                 "skip input verification (structural runs with stand-ins)");
    k4->add_option("--out", k4_out, "write result as a cycle file");

    auto* nec = app.add_subcommand("necessary", "divisibility condition for existence");
    int nec_n = 0, nec_k = 0;
    nec->add_option("--n", nec_n)->required();
    nec->add_option("--k", nec_k)->required();

    auto* sched = app.add_subcommand("schedule", "composition steps reaching n from the bases");
    int sched_n = 0;
    sched->add_option("--n", sched_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            const auto file = load(verify_file);
            if (file.cycles.empty())
                ucycle::raise(ucycle::Errc::parse_error, "file contains no cycle");
            bool all_ok = true;
            for (const auto& nc : file.cycles) {
                const auto report =
                    ucycle::is_ucycle(nc.cycle, file.alphabet.size(), verify_k);
                std::cout << nc.name << ": " << report.describe() << "\n";
                all_ok = all_ok && report.ok;
            }
            return all_ok ? kExitOk : kExitVerification;
        }
        if (*range) {
            const auto file = load(range_file);
            const auto c = first_cycle(file);
            for (const auto& w : ucycle::k_range(c, range_k))
                std::cout << ucycle::format_kstring(w, file.alphabet) << "\n";
            return kExitOk;
        }
        if (*sum) {
            const auto fa = load(sum_file_a);
            const auto fb = load(sum_file_b);
            const auto merged = merge_alphabets(fa.alphabet, fb.alphabet);
            const auto a = remap(first_cycle(fa), fa.alphabet, merged);
            const auto b = remap(first_cycle(fb), fb.alphabet, merged);
            if (sum_all) {
                for (const auto& e : ucycle::k_sums(a, b, sum_k)) print_cycle(e, merged);
                return kExitOk;
            }
            print_cycle(ucycle::k_sum_first(a, b, sum_k), merged);
            return kExitOk;
        }
        if (*summ) {
            const auto file = load(summate_file);
            ucycle::CyclePool pool;
            pool.k = summate_k;
            for (const auto& nc : file.cycles) pool.members.push_back(nc.cycle);
            const auto [result, trace] = ucycle::summate(pool);
            print_cycle(result, file.alphabet);
            if (!summate_out.empty())
                write_output(summate_out,
                             ucycle::CycleFile{file.alphabet, {{"summation", result, {}}}});
            return kExitOk;
        }
        if (*weave_cmd) {
            const auto file = load(weave_file);
            if (file.cycles.size() < 2)
                ucycle::raise(ucycle::Errc::parse_error, "weave needs two cycles in the file");
            const ucycle::WeaveSpec spec{file.cycles[0].cycle, weave_t, file.cycles[1].cycle,
                                         weave_u, weave_c, weave_d};
            print_cycle(ucycle::weave(spec), file.alphabet);
            return kExitOk;
        }
        if (*product) {
            const auto file = load(product_file);
            if (file.cycles.size() < 2)
                ucycle::raise(ucycle::Errc::parse_error, "product needs two cycles in the file");
            for (const auto& w : ucycle::product_family(file.cycles[0].cycle, product_t,
                                                        file.cycles[1].cycle, product_u))
                print_cycle(w, file.alphabet);
            return kExitOk;
        }
        if (*bcheck) {
            const auto file = load(bcheck_file);
            const auto witness =
                ucycle::find_benign_witness(first_cycle(file), bcheck_t, bcheck_k);
            if (!witness) {
                std::cout << "none\n";
                return kExitVerification;
            }
            std::cout << "delta=" << witness->delta << " i=" << witness->i << "\n";
            return kExitOk;
        }
        if (*bpart) {
            const auto file = load(bpart_file);
            if (file.cycles.size() < 2)
                ucycle::raise(ucycle::Errc::parse_error,
                              "benign-partition needs two cycles in the file");
            const auto& c = file.cycles[0].cycle;
            const auto& d = file.cycles[1].cycle;
            const int k = bpart_t + bpart_u;
            const auto witness = ucycle::find_benign_witness(c, bpart_t, k);
            if (!witness) {
                std::cout << "none\n";
                return kExitVerification;
            }
            const auto partition = ucycle::benign_partition(c, bpart_t, d, bpart_u, *witness);
            std::cout << "classes=" << partition.class_count << "\n";
            for (std::size_t i = 0; i < partition.classes.size(); ++i) {
                std::cout << "class " << i << ":";
                for (std::size_t a = 0; a < partition.residue_of.size(); ++a)
                    if (partition.residue_of[a] == static_cast<std::int64_t>(i))
                        std::cout << " " << a;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*pairs) {
            const auto c = ucycle::pair_ucycle(pairs_n, pairs_k);
            const auto alphabet = ucycle::Alphabet::decimal(pairs_n);
            print_cycle(c, alphabet);
            if (!pairs_out.empty()) {
                const auto witness = ucycle::find_benign_witness(c, 2, pairs_k);
                std::map<std::string, std::string> meta = {{"k", "2"}, {"ucycle", "true"}};
                if (witness) {
                    meta["benign-delta"] = std::to_string(witness->delta);
                    meta["benign-i"] = std::to_string(witness->i);
                }
                write_output(pairs_out, ucycle::CycleFile{alphabet, {{"pair", c, meta}}});
            }
            return kExitOk;
        }
        if (*rel) {
            const auto file = load(rel_file);
            const auto target = parse_tokens(rel_window, file.alphabet);
            const auto c = first_cycle(file);
            const auto source_symbols = c.distinct_symbols();
            print_cycle(ucycle::relabel(c, target, rel_x, source_symbols), file.alphabet);
            return kExitOk;
        }
        if (*search) {
            ucycle::SearchConfig cfg;
            cfg.n = search_n;
            cfg.k = search_k;
            cfg.seed = search_seed;
            cfg.budget_ms = search_budget;
            if (search_heuristic == "lexicographic")
                cfg.heuristic = ucycle::SearchHeuristic::lexicographic;
            else if (search_heuristic == "random-restart")
                cfg.heuristic = ucycle::SearchHeuristic::random_restart;
            else
                cfg.heuristic = ucycle::SearchHeuristic::fewest_extensions;

            const auto alphabet = ucycle::Alphabet::decimal(search_n);
            ucycle::SearchResult result;
            if (search_prefix.empty()) {
                result = ucycle::search_ucycle(cfg);
            } else {
                result = ucycle::search_constrained(cfg, parse_tokens(search_prefix, alphabet));
            }
            switch (result.status) {
                case ucycle::SearchStatus::found:
                    print_cycle(*result.cycle, alphabet);
                    if (!search_out.empty())
                        write_output(search_out,
                                     ucycle::CycleFile{alphabet,
                                                       {{"found", *result.cycle,
                                                         {{"k", std::to_string(search_k)},
                                                          {"ucycle", "true"}}}}});
                    return kExitOk;
                case ucycle::SearchStatus::necessary_condition_fails:
                    std::cout << "necessary condition fails: " << search_k << " does not divide "
                              << "C(" << search_n - 1 << "," << search_k - 1 << ")\n";
                    return kExitVerification;
                case ucycle::SearchStatus::budget_exceeded:
                    std::cout << "budget exceeded after " << result.nodes << " nodes\n";
                    return kExitBudget;
            }
        }
        if (*k2) {
            const auto c = ucycle::compose_k2(k2_a, k2_b);
            const auto alphabet = ucycle::Alphabet::decimal(k2_a + k2_b + 1);
            print_cycle(c, alphabet);
            if (!k2_out.empty())
                write_output(k2_out, ucycle::CycleFile{alphabet,
                                                       {{"composed", c,
                                                         {{"k", "2"}, {"ucycle", "true"}}}}});
            return kExitOk;
        }
        if (*k4) {
            const auto base_a = first_cycle(load(k4_base_a));
            const auto base_b = first_cycle(load(k4_base_b));
            const auto k3_a = first_cycle(load(k4_k3a));
            const auto k3_b = first_cycle(load(k4_k3b));
            const ucycle::BuildOptions options{!k4_allow_unverified};
            const auto components =
                ucycle::build_components(k4_a, k4_b, base_a, base_b, k3_a, k3_b, options);
            const auto report = ucycle::compose_k4_report(components);
            if (!report.pool_summable) {
                std::cout << "component pool is not 4-summable\n";
                return kExitVerification;
            }
            if (!report.final_check.ok) {
                std::cout << "assembled cycle failed verification: "
                          << report.final_check.describe() << "\n";
                return kExitVerification;
            }
            const auto alphabet = ucycle::Alphabet::decimal(k4_a + k4_b + 2);
            print_cycle(*report.result, alphabet);
            if (!k4_out.empty())
                write_output(k4_out, ucycle::CycleFile{alphabet,
                                                       {{"composed", *report.result,
                                                         {{"k", "4"}, {"ucycle", "true"}}}}});
            return kExitOk;
        }
        if (*nec) {
            const bool ok = ucycle::necessary_condition(nec_n, nec_k);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? kExitOk : kExitVerification;
        }
        if (*sched) {
            for (const auto& step : ucycle::corollary_schedule(sched_n))
                std::cout << step.a << " " << step.b << " -> " << step.target() << "\n";
            return kExitOk;
        }
    } catch (const ucycle::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
