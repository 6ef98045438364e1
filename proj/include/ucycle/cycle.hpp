#pragma once

// Core value types: symbols, cycles with wrap-around indexing, k-strings,
// and the two multiset layers (multiset of symbols, multiset of symbol
// multisets) that the rest of the library is written against.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ucycle/errors.hpp"

namespace ucycle {

struct Symbol {
    std::int32_t id = 0;
    friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

// A k-string: order matters, no wrap-around semantics of its own.
using KString = std::vector<Symbol>;

// floor-division helpers; every index in this library reduces modulo a
// positive length, negatives included.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}
constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) {
    std::int64_t q = x / m;
    if ((x % m) != 0 && ((x < 0) != (m < 0))) --q;
    return q;
}

std::vector<Symbol> ascending_symbols(std::int32_t n);

// Ordered table of display tokens; symbol ids index into it.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);
    static Alphabet decimal(std::int32_t n);  // labels "0", "1", ..., "n-1"

    std::int32_t size() const { return static_cast<std::int32_t>(labels_.size()); }
    const std::string& label(Symbol s) const;
    std::optional<Symbol> find(std::string_view token) const;
    bool single_char_labels() const;
    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::int32_t> index_;
};

class Cycle {
public:
    explicit Cycle(std::vector<Symbol> symbols);

    std::int64_t length() const { return static_cast<std::int64_t>(symbols_.size()); }
    Symbol at(std::int64_t x) const { return symbols_[floor_mod(x, length())]; }
    KString window(std::int64_t x, std::int64_t k) const;
    Cycle rotated(std::int64_t x) const;
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::vector<Symbol> distinct_symbols() const;  // sorted, deduplicated

    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<Symbol> symbols_;
};

// Canonical multiset of symbols (sorted encoding). Union adds multiplicities.
class SymbolMultiset {
public:
    SymbolMultiset() = default;
    static SymbolMultiset of(std::span<const Symbol> symbols);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<Symbol>& sorted() const { return sorted_; }
    SymbolMultiset united(const SymbolMultiset& other) const;
    bool contains(Symbol s) const;

    friend auto operator<=>(const SymbolMultiset&, const SymbolMultiset&) = default;

private:
    std::vector<Symbol> sorted_;
};

// Canonical multiset of symbol multisets.
class KSetFamily {
public:
    KSetFamily() = default;
    static KSetFamily of(std::vector<SymbolMultiset> members);

    std::size_t size() const { return members_.size(); }
    const std::vector<SymbolMultiset>& members() const { return members_; }
    KSetFamily product(const KSetFamily& other) const;  // all pairwise unions
    KSetFamily united(const KSetFamily& other) const;

    friend bool operator==(const KSetFamily&, const KSetFamily&) = default;

private:
    std::vector<SymbolMultiset> members_;
};

// Primitive operations on cycles and strings.
KString window(const Cycle& c, std::int64_t x, std::int64_t k);
std::vector<KString> k_range(const Cycle& c, std::int64_t k);
std::vector<KString> substrings(std::span<const Symbol> s, std::int64_t k);
SymbolMultiset gamma(std::span<const Symbol> s);
KSetFamily gamma_family(const std::vector<KString>& strings);
KSetFamily gamma_of_range(const Cycle& c, std::int64_t k);
Cycle rotate(const Cycle& c, std::int64_t x);
std::vector<Cycle> rotations(const Cycle& c);

// All k-element subsets of a duplicate-free symbol list, as a family.
KSetFamily all_k_subsets(std::span<const Symbol> alphabet, std::int32_t k);

// Multiset comparison helpers for window lists.
std::vector<KString> sorted_multiset(std::vector<KString> v);
bool multiset_equal(std::vector<KString> a, std::vector<KString> b);

}  // namespace ucycle
