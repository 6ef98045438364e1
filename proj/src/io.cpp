#include "ucycle/io.hpp"

#include <algorithm>
#include <sstream>

namespace ucycle {

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
    raise(Errc::parse_error, "line " + std::to_string(line) + ": " + reason);
}

}  // namespace

CycleFile parse_cycle_file(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, stripped content)
    {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            std::string_view raw = text.substr(start, end - start);
            if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            const std::string stripped(raw);
            if (!split_tokens(stripped).empty()) lines.emplace_back(line_no, stripped);
            if (end == text.size()) break;
            start = end + 1;
        }
    }

    if (lines.empty()) parse_fail(1, "empty file");
    if (split_tokens(lines[0].second) != std::vector<std::string>{"ucycle-file", "v1"})
        parse_fail(lines[0].first, "expected header 'ucycle-file v1'");
    if (lines.size() < 2) parse_fail(lines[0].first, "missing alphabet line");

    const auto alphabet_tokens = split_tokens(lines[1].second);
    if (alphabet_tokens.empty() || alphabet_tokens[0] != "alphabet:")
        parse_fail(lines[1].first, "expected 'alphabet: tok ...'");
    std::vector<std::string> labels(alphabet_tokens.begin() + 1, alphabet_tokens.end());
    if (labels.empty()) parse_fail(lines[1].first, "alphabet must list at least one token");

    CycleFile file{Alphabet(std::move(labels)), {}};

    for (std::size_t li = 2; li < lines.size(); ++li) {
        const auto& [line_no, content] = lines[li];
        const auto tokens = split_tokens(content);
        if (tokens.size() < 2 || tokens[1].back() != ':')
            parse_fail(line_no, "expected 'cycle <name>:' or 'meta <name>:'");
        const std::string name = tokens[1].substr(0, tokens[1].size() - 1);
        if (name.empty()) parse_fail(line_no, "missing name");

        if (tokens[0] == "cycle") {
            if (tokens.size() == 2) parse_fail(line_no, "empty cycle");
            std::vector<Symbol> symbols;
            symbols.reserve(tokens.size() - 2);
            for (std::size_t ti = 2; ti < tokens.size(); ++ti) {
                const auto sym = file.alphabet.find(tokens[ti]);
                require(sym.has_value(), Errc::alphabet_mismatch,
                        "line " + std::to_string(line_no) + ": token '" + tokens[ti] +
                            "' not in alphabet");
                symbols.push_back(*sym);
            }
            const bool duplicate =
                std::any_of(file.cycles.begin(), file.cycles.end(),
                            [&](const NamedCycle& nc) { return nc.name == name; });
            if (duplicate) parse_fail(line_no, "duplicate cycle name '" + name + "'");
            file.cycles.push_back(NamedCycle{name, Cycle(std::move(symbols)), {}});
        } else if (tokens[0] == "meta") {
            auto it = std::find_if(file.cycles.begin(), file.cycles.end(),
                                   [&](const NamedCycle& nc) { return nc.name == name; });
            if (it == file.cycles.end())
                parse_fail(line_no, "meta for unknown cycle '" + name + "'");
            for (std::size_t ti = 2; ti < tokens.size(); ++ti) {
                const std::size_t eq = tokens[ti].find('=');
                if (eq == std::string::npos || eq == 0)
                    parse_fail(line_no, "expected key=value, got '" + tokens[ti] + "'");
                it->meta[tokens[ti].substr(0, eq)] = tokens[ti].substr(eq + 1);
            }
        } else {
            parse_fail(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    return file;
}

std::string serialize(const CycleFile& file) {
    std::ostringstream os;
    os << "ucycle-file v1\n";
    os << "alphabet:";
    for (std::int32_t i = 0; i < file.alphabet.size(); ++i)
        os << ' ' << file.alphabet.label(Symbol{i});
    os << '\n';
    for (const NamedCycle& nc : file.cycles) {
        os << "cycle " << nc.name << ':';
        for (Symbol s : nc.cycle.symbols()) os << ' ' << file.alphabet.label(s);
        os << '\n';
        if (!nc.meta.empty()) {
            os << "meta " << nc.name << ':';
            for (const auto& [key, value] : nc.meta) os << ' ' << key << '=' << value;
            os << '\n';
        }
    }
    return os.str();
}

std::string format_kstring(const KString& s, const Alphabet& alphabet) {
    std::ostringstream os;
    const bool compact = alphabet.single_char_labels();
    bool first = true;
    for (Symbol sym : s) {
        if (!first && !compact) os << ' ';
        os << alphabet.label(sym);
        first = false;
    }
    return os.str();
}

std::string format_cycle(const Cycle& c, const Alphabet& alphabet) {
    return format_kstring(KString(c.symbols()), alphabet);
}

Cycle cycle_of_chars(std::string_view text) { return Cycle(kstring_of_chars(text)); }

KString kstring_of_chars(std::string_view text) {
    KString out;
    out.reserve(text.size());
    for (char ch : text) out.push_back(Symbol{static_cast<std::int32_t>(static_cast<unsigned char>(ch))});
    return out;
}

std::string chars_of(const KString& s) {
    std::string out;
    out.reserve(s.size());
    for (Symbol sym : s) {
        require(sym.id >= 0 && sym.id < 256, Errc::alphabet_mismatch,
                "symbol is not a character code");
        out.push_back(static_cast<char>(sym.id));
    }
    return out;
}

std::string chars_of(const Cycle& c) { return chars_of(KString(c.symbols())); }

}  // namespace ucycle
