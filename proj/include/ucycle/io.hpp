#pragma once

// Plain-text cycle files: diffable, hand-editable, exact round-trip.
//
//   ucycle-file v1
//   alphabet: tok tok ...
//   cycle <name>: tok tok ...
//   meta <name>: key=value ...
//
// '#' starts a comment; blank lines are ignored. Metadata is advisory only.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/cycle.hpp"

namespace ucycle {

struct NamedCycle {
    std::string name;
    Cycle cycle;
    std::map<std::string, std::string> meta;  // sorted keys; serialized in order
};

struct CycleFile {
    Alphabet alphabet;
    std::vector<NamedCycle> cycles;
};

CycleFile parse_cycle_file(std::string_view text);
std::string serialize(const CycleFile& file);

// Tokens joined without separators when every label is a single character,
// space-separated otherwise.
std::string format_cycle(const Cycle& c, const Alphabet& alphabet);
std::string format_kstring(const KString& s, const Alphabet& alphabet);

// Literal helpers: symbols are raw character codes. Handy for tests and for
// cross-checking worked examples written as plain strings.
Cycle cycle_of_chars(std::string_view text);
KString kstring_of_chars(std::string_view text);
std::string chars_of(const KString& s);
std::string chars_of(const Cycle& c);

}  // namespace ucycle
