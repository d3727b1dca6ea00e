#include "mbmod/minimal.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "mbmod/connect.hpp"
#include "mbmod/error.hpp"

namespace mbmod {

ClosureReport forward_closure(const ActionTable& t, const IndexSet& seed) {
    ClosureReport rep;
    rep.seed = seed;
    canonicalize(rep.seed);
    if (!rep.seed.empty() && rep.seed.back() >= t.v_size())
        fail(errc::index_out_of_range, "closure seed index " + std::to_string(rep.seed.back()) +
                                           " outside v_size " + std::to_string(t.v_size()));

    std::vector<char> in_closure(t.v_size(), 0);
    // Pending holds exactly the unprocessed closure members, so each index
    // is pushed once and the pop order is the pinned smallest-first order.
    std::priority_queue<Index, std::vector<Index>, std::greater<>> pending;
    for (Index s : rep.seed) {
        in_closure[s] = 1;
        pending.push(s);
    }
    const Entry* base = t.entries().data();
    while (!pending.empty()) {
        Index a = pending.top();
        pending.pop();
        for (const Entry& e : t.row(a)) {
            if (in_closure[e.k]) continue;
            in_closure[e.k] = 1;
            rep.trace.emplace_back(e.k, static_cast<std::uint32_t>(&e - base));
            pending.push(e.k);
        }
    }
    rep.closure.reserve(rep.seed.size() + rep.trace.size());
    for (Index i = 0; i < t.v_size(); ++i)
        if (in_closure[i]) rep.closure.push_back(i);
    return rep;
}

StarMultReport check_star_multiplicative(const ActionTable& t) {
    // Pack the forward pairs i -> k once; each entry (i, j, k) then asserts
    // the barred relation i in star(k, bar(j)), which holds multiplicatively
    // iff the reversed pair k -> i also appears somewhere in the table.
    std::vector<std::uint64_t> pairs;
    pairs.reserve(t.entries().size());
    for (const Entry& e : t.entries())
        pairs.push_back((static_cast<std::uint64_t>(e.i) << 32) | e.k);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    StarMultReport rep;
    for (const Entry& e : t.entries()) {
        std::uint64_t rev = (static_cast<std::uint64_t>(e.k) << 32) | e.i;
        if (!std::binary_search(pairs.begin(), pairs.end(), rev))
            rep.violations.push_back({e.k, e.i, WLabel{e.j, true}});
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const StarMultViolation& l, const StarMultViolation& r) {
                  return std::tie(l.a, l.b, l.x) < std::tie(r.a, r.b, r.x);
              });
    rep.holds = rep.violations.empty();
    return rep;
}

namespace {

// Marks everything reachable from index 0 along entry arcs i -> k (forward)
// or k -> i (transposed).  Plain FIFO sweep; order does not matter here.
std::size_t sweep_from_zero(const ActionTable& t, bool transposed, std::vector<char>& seen) {
    seen.assign(t.v_size(), 0);
    seen[0] = 1;
    std::size_t count = 1;
    std::vector<Index> queue{0};
    auto visit = [&](Index v) {
        if (seen[v]) return;
        seen[v] = 1;
        ++count;
        queue.push_back(v);
    };
    while (!queue.empty()) {
        Index a = queue.back();
        queue.pop_back();
        if (!transposed) {
            for (const Entry& e : t.row(a)) visit(e.k);
        } else {
            for (std::uint32_t id : t.column_into(a)) visit(t.entries()[id].i);
        }
    }
    return count;
}

} // namespace

MinimalityReport is_minimal(const ActionTable& t) {
    if (t.v_size() == 0)
        fail(errc::empty_module, "minimality is undefined for an empty V basis");

    MinimalityReport rep;
    if (check_star_multiplicative(t).holds) {
        rep.method = MinimalityMethod::star_mult_shortcut;
        rep.minimal = components(t).size() == 1;
        return rep;
    }

    // Every singleton closure equals I iff the arc relation is strongly
    // connected, i.e. index 0 reaches everything and everything reaches 0.
    rep.method = MinimalityMethod::closure_scan;
    std::vector<char> seen;
    rep.minimal = sweep_from_zero(t, false, seen) == t.v_size() &&
                  sweep_from_zero(t, true, seen) == t.v_size();
    return rep;
}

std::vector<IndexSet> minimal_closed_subsets(const ActionTable& t) {
    std::vector<IndexSet> closures;
    closures.reserve(t.v_size());
    for (Index i = 0; i < t.v_size(); ++i)
        closures.push_back(forward_closure(t, {i}).closure);
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()), closures.end());

    // Size-ascending scan: a candidate survives iff no already-kept (hence
    // no smaller) closure sits strictly inside it.
    std::stable_sort(closures.begin(), closures.end(),
                     [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    std::vector<IndexSet> kept;
    for (IndexSet& c : closures) {
        bool dominated = false;
        for (const IndexSet& k : kept) {
            if (k.size() < c.size() && std::includes(c.begin(), c.end(), k.begin(), k.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
    return kept;
}

} // namespace mbmod
