#include "ucycle/cycle.hpp"

#include <algorithm>

namespace ucycle {

std::vector<Symbol> ascending_symbols(std::int32_t n) {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) out.push_back(Symbol{i});
    return out;
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    require(!labels_.empty(), Errc::alphabet_mismatch, "alphabet must have at least one token");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        require(!labels_[i].empty(), Errc::alphabet_mismatch, "empty alphabet token");
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<std::int32_t>(i));
        (void)it;
        require(inserted, Errc::alphabet_mismatch, "duplicate alphabet token: " + labels_[i]);
    }
}

Alphabet Alphabet::decimal(std::int32_t n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Alphabet(std::move(labels));
}

const std::string& Alphabet::label(Symbol s) const {
    require(s.id >= 0 && s.id < size(), Errc::alphabet_mismatch,
            "symbol id " + std::to_string(s.id) + " outside alphabet of size " + std::to_string(size()));
    return labels_[static_cast<std::size_t>(s.id)];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return Symbol{it->second};
}

bool Alphabet::single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const std::string& l) { return l.size() == 1; });
}

Cycle::Cycle(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    require(!symbols_.empty(), Errc::precondition_violated, "cycle must be non-empty");
}

KString Cycle::window(std::int64_t x, std::int64_t k) const {
    require(k >= 0, Errc::precondition_violated, "window length must be non-negative");
    KString out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) out.push_back(at(x + i));
    return out;
}

Cycle Cycle::rotated(std::int64_t x) const { return Cycle(window(x, length())); }

std::vector<Symbol> Cycle::distinct_symbols() const {
    std::vector<Symbol> out = symbols_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SymbolMultiset SymbolMultiset::of(std::span<const Symbol> symbols) {
    SymbolMultiset m;
    m.sorted_.assign(symbols.begin(), symbols.end());
    std::sort(m.sorted_.begin(), m.sorted_.end());
    return m;
}

SymbolMultiset SymbolMultiset::united(const SymbolMultiset& other) const {
    SymbolMultiset m;
    m.sorted_.resize(sorted_.size() + other.sorted_.size());
    std::merge(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end(),
               m.sorted_.begin());
    return m;
}

bool SymbolMultiset::contains(Symbol s) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), s);
}

KSetFamily KSetFamily::of(std::vector<SymbolMultiset> members) {
    KSetFamily f;
    f.members_ = std::move(members);
    std::sort(f.members_.begin(), f.members_.end());
    return f;
}

KSetFamily KSetFamily::product(const KSetFamily& other) const {
    std::vector<SymbolMultiset> out;
    out.reserve(members_.size() * other.members_.size());
    for (const auto& a : members_)
        for (const auto& b : other.members_) out.push_back(a.united(b));
    return KSetFamily::of(std::move(out));
}

KSetFamily KSetFamily::united(const KSetFamily& other) const {
    std::vector<SymbolMultiset> out;
    out.reserve(members_.size() + other.members_.size());
    out.insert(out.end(), members_.begin(), members_.end());
    out.insert(out.end(), other.members_.begin(), other.members_.end());
    return KSetFamily::of(std::move(out));
}

KString window(const Cycle& c, std::int64_t x, std::int64_t k) { return c.window(x, k); }

std::vector<KString> k_range(const Cycle& c, std::int64_t k) {
    require(k >= 1, Errc::precondition_violated, "k-range needs k >= 1");
    std::vector<KString> out;
    out.reserve(static_cast<std::size_t>(c.length()));
    for (std::int64_t x = 0; x < c.length(); ++x) out.push_back(c.window(x, k));
    return out;
}

std::vector<KString> substrings(std::span<const Symbol> s, std::int64_t k) {
    require(k >= 1, Errc::precondition_violated, "substrings needs k >= 1");
    require(k <= static_cast<std::int64_t>(s.size()), Errc::empty_window_set,
            "window length exceeds string length");
    std::vector<KString> out;
    out.reserve(s.size() - static_cast<std::size_t>(k) + 1);
    for (std::size_t x = 0; x + static_cast<std::size_t>(k) <= s.size(); ++x)
        out.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(x),
                         s.begin() + static_cast<std::ptrdiff_t>(x + static_cast<std::size_t>(k)));
    return out;
}

SymbolMultiset gamma(std::span<const Symbol> s) { return SymbolMultiset::of(s); }

KSetFamily gamma_family(const std::vector<KString>& strings) {
    std::vector<SymbolMultiset> out;
    out.reserve(strings.size());
    for (const auto& s : strings) out.push_back(SymbolMultiset::of(s));
    return KSetFamily::of(std::move(out));
}

KSetFamily gamma_of_range(const Cycle& c, std::int64_t k) { return gamma_family(k_range(c, k)); }

Cycle rotate(const Cycle& c, std::int64_t x) { return c.rotated(x); }

std::vector<Cycle> rotations(const Cycle& c) {
    std::vector<Cycle> out;
    out.reserve(static_cast<std::size_t>(c.length()));
    for (std::int64_t x = 0; x < c.length(); ++x) out.push_back(c.rotated(x));
    return out;
}

KSetFamily all_k_subsets(std::span<const Symbol> alphabet, std::int32_t k) {
    require(k >= 0, Errc::precondition_violated, "k must be non-negative");
    std::vector<Symbol> sorted(alphabet.begin(), alphabet.end());
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            Errc::alphabet_mismatch, "subset enumeration needs distinct symbols");

    std::vector<SymbolMultiset> out;
    if (k > static_cast<std::int32_t>(sorted.size())) return KSetFamily::of(std::move(out));

    std::vector<std::int32_t> idx(static_cast<std::size_t>(k));
    for (std::int32_t i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    const std::int32_t n = static_cast<std::int32_t>(sorted.size());
    while (true) {
        KString pick;
        pick.reserve(static_cast<std::size_t>(k));
        for (std::int32_t i : idx) pick.push_back(sorted[static_cast<std::size_t>(i)]);
        out.push_back(SymbolMultiset::of(pick));
        // advance combination
        std::int32_t j = k - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (std::int32_t l = j + 1; l < k; ++l)
            idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
    return KSetFamily::of(std::move(out));
}

std::vector<KString> sorted_multiset(std::vector<KString> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool multiset_equal(std::vector<KString> a, std::vector<KString> b) {
    return sorted_multiset(std::move(a)) == sorted_multiset(std::move(b));
}

}  // namespace ucycle
