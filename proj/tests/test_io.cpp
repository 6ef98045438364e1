#include <doctest.h>

#include "helpers.hpp"
#include "ucycle/builders.hpp"
#include "ucycle/io.hpp"

using namespace ucycle;

TEST_CASE("round trip") {
    CycleFile file{Alphabet::decimal(9), {}};
    const Cycle c = pair_ucycle(9, 4);
    file.cycles.push_back(NamedCycle{"main", c, {{"k", "2"}, {"ucycle", "true"}}});
    file.cycles.push_back(NamedCycle{"aux", d_cycle({9, 2, 0}), {}});

    const std::string text = serialize(file);
    const CycleFile parsed = parse_cycle_file(text);
    CHECK(parsed.alphabet == file.alphabet);
    REQUIRE(parsed.cycles.size() == 2);
    CHECK(parsed.cycles[0].name == "main");
    CHECK(parsed.cycles[0].cycle == c);
    CHECK(parsed.cycles[0].meta == file.cycles[0].meta);
    CHECK(parsed.cycles[1].cycle == d_cycle({9, 2, 0}));

    // byte-stable: serializing the parse reproduces the text
    CHECK(serialize(parsed) == text);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# a comment\n"
        "ucycle-file v1\n"
        "\n"
        "alphabet: a b c   # trailing comment\n"
        "cycle x: a b c a c b # another\n";
    const CycleFile file = parse_cycle_file(text);
    CHECK(file.alphabet.size() == 3);
    REQUIRE(file.cycles.size() == 1);
    CHECK(file.cycles[0].cycle.length() == 6);
}

TEST_CASE("parse errors") {
    auto code_of = [](const std::string& text) {
        try {
            (void)parse_cycle_file(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::verification_failed;  // sentinel: no throw
    };

    CHECK(code_of("") == Errc::parse_error);
    CHECK(code_of("nonsense v1\nalphabet: a\n") == Errc::parse_error);
    CHECK(code_of("ucycle-file v1\nalphabet: a b\ncycle x:\n") == Errc::parse_error);
    CHECK(code_of("ucycle-file v1\nalphabet: a b\ncycle x: a q\n") == Errc::alphabet_mismatch);
    CHECK(code_of("ucycle-file v1\nalphabet: a a\n") == Errc::alphabet_mismatch);
    CHECK(code_of("ucycle-file v1\nalphabet: a b\nmeta x: k=2\n") == Errc::parse_error);
    CHECK(code_of("ucycle-file v1\nalphabet: a b\ncycle x: a\ncycle x: b\n") == Errc::parse_error);
    CHECK(code_of("ucycle-file v1\nalphabet: a b\ncycle x: a\nmeta x: kv\n") == Errc::parse_error);
}

TEST_CASE("cycle formatting follows label width") {
    const Cycle c = cycle_of_chars("abca");
    std::vector<std::string> single = {"a", "b", "c"};
    // remap ids onto a dense alphabet for printing
    const Cycle dense = relabel(c, {}, 0, ascending_symbols(3));
    CHECK(format_cycle(dense, Alphabet({"a", "b", "c"})) == "abca");
    CHECK(format_cycle(dense, Alphabet({"s0", "s1", "s2"})) == "s0 s1 s2 s0");
}

TEST_CASE("char helpers") {
    CHECK(chars_of(cycle_of_chars("inoh")) == "inoh");
    CHECK(chars_of(kstring_of_chars("xy")) == "xy");
}
