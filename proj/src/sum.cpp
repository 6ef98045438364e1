#include "ucycle/sum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ucycle {

namespace {

Cycle concat(const Cycle& a, const Cycle& b) {
    std::vector<Symbol> out;
    out.reserve(a.symbols().size() + b.symbols().size());
    out.insert(out.end(), a.symbols().begin(), a.symbols().end());
    out.insert(out.end(), b.symbols().begin(), b.symbols().end());
    return Cycle(std::move(out));
}

// Sorted unique w-windows of a cycle.
std::vector<KString> window_set(const Cycle& c, std::int64_t w) {
    std::vector<KString> v = k_range(c, w);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool sorted_intersects(const std::vector<KString>& a, const std::vector<KString>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

}  // namespace

std::vector<OffsetPair> k_sum_offsets(const Cycle& c, const Cycle& d, std::int32_t k) {
    require(k >= 2, Errc::precondition_violated, "k-sum needs k >= 2");
    const std::int64_t w = k - 1;
    std::map<KString, std::vector<std::int64_t>> by_window;
    for (std::int64_t j = 0; j < d.length(); ++j) by_window[d.window(j, w)].push_back(j);

    std::vector<OffsetPair> out;
    for (std::int64_t i = 0; i < c.length(); ++i) {
        auto it = by_window.find(c.window(i, w));
        if (it == by_window.end()) continue;
        for (std::int64_t j : it->second) out.push_back(OffsetPair{i, j});
    }
    return out;
}

std::optional<OffsetPair> first_k_sum_offset(const Cycle& c, const Cycle& d, std::int32_t k) {
    require(k >= 2, Errc::precondition_violated, "k-sum needs k >= 2");
    const std::int64_t w = k - 1;
    std::map<KString, std::int64_t> first_at;
    for (std::int64_t j = d.length() - 1; j >= 0; --j) first_at[d.window(j, w)] = j;
    for (std::int64_t i = 0; i < c.length(); ++i) {
        auto it = first_at.find(c.window(i, w));
        if (it != first_at.end()) return OffsetPair{i, it->second};
    }
    return std::nullopt;
}

Cycle k_sum_at(const Cycle& c, const Cycle& d, const OffsetPair& o) {
    return concat(c.rotated(o.left), d.rotated(o.right));
}

std::vector<Cycle> k_sums(const Cycle& c, const Cycle& d, std::int32_t k) {
    std::vector<Cycle> out;
    for (const OffsetPair& o : k_sum_offsets(c, d, k)) out.push_back(k_sum_at(c, d, o));
    return out;
}

Cycle k_sum_first(const Cycle& c, const Cycle& d, std::int32_t k) {
    const auto o = first_k_sum_offset(c, d, k);
    require(o.has_value(), Errc::no_common_window,
            "cycles share no (k-1)-string at k = " + std::to_string(k));
    return k_sum_at(c, d, *o);
}

bool ranges_intersect(const Cycle& c, const Cycle& d, std::int64_t w) {
    return sorted_intersects(window_set(c, w), window_set(d, w));
}

bool is_summable(const CyclePool& pool) {
    require(pool.k >= 2, Errc::precondition_violated, "pool order must be >= 2");
    require(!pool.members.empty(), Errc::precondition_violated, "pool must be non-empty");
    const std::size_t n = pool.members.size();
    if (n == 1) return true;

    std::vector<std::vector<KString>> sets;
    sets.reserve(n);
    for (const Cycle& c : pool.members) sets.push_back(window_set(c, pool.k - 1));

    // union-find over members
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (find(i) != find(j) && sorted_intersects(sets[i], sets[j]))
                parent[find(i)] = find(j);

    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

std::pair<Cycle, SumTrace> summate(const CyclePool& pool) {
    require(pool.k >= 2, Errc::precondition_violated, "pool order must be >= 2");
    require(!pool.members.empty(), Errc::precondition_violated, "pool must be non-empty");

    struct Entry {
        Cycle cycle;
        std::size_t id;
    };
    std::vector<Entry> live;
    live.reserve(pool.members.size());
    for (std::size_t i = 0; i < pool.members.size(); ++i) live.push_back({pool.members[i], i});

    SumTrace trace;
    while (live.size() > 1) {
        bool merged = false;
        for (std::size_t i = 0; i < live.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < live.size() && !merged; ++j) {
                const auto o = first_k_sum_offset(live[i].cycle, live[j].cycle, pool.k);
                if (!o) continue;
                MergeRecord rec;
                rec.left_id = live[i].id;
                rec.right_id = live[j].id;
                rec.offsets = *o;
                rec.shared = live[i].cycle.window(o->left, pool.k - 1);
                Cycle sum = k_sum_at(live[i].cycle, live[j].cycle, *o);
                live[i].cycle = std::move(sum);
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
                trace.merges.push_back(std::move(rec));
                merged = true;
            }
        }
        require(merged, Errc::not_summable,
                "pool is not connected under shared (k-1)-strings");
    }
    return {std::move(live.front().cycle), std::move(trace)};
}

Cycle replay_trace(const CyclePool& pool, const SumTrace& trace) {
    std::map<std::size_t, Cycle> live;
    for (std::size_t i = 0; i < pool.members.size(); ++i) live.emplace(i, pool.members[i]);
    std::size_t last = 0;
    for (const MergeRecord& rec : trace.merges) {
        auto li = live.find(rec.left_id);
        auto ri = live.find(rec.right_id);
        require(li != live.end() && ri != live.end(), Errc::precondition_violated,
                "trace references a consumed cycle");
        require(li->second.window(rec.offsets.left, static_cast<std::int64_t>(rec.shared.size())) ==
                    rec.shared,
                Errc::constraint_unsatisfied, "trace shared window mismatch");
        Cycle sum = k_sum_at(li->second, ri->second, rec.offsets);
        li->second = std::move(sum);
        live.erase(ri);
        last = rec.left_id;
    }
    require(live.size() == 1, Errc::precondition_violated, "trace does not reduce pool to one cycle");
    return live.at(last);
}

}  // namespace ucycle
