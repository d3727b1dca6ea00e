#include "mbmod/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "mbmod/decompose.hpp"
#include "mbmod/error.hpp"

namespace mbmod {

IndexSet oracle_star(const ActionTable& t, Index i, WLabel x) {
    IndexSet out;
    for (const Entry& e : t.entries()) {
        if (!x.barred && e.i == i && e.j == x.j) out.push_back(e.k);
        if (x.barred && e.k == i && e.j == x.j) out.push_back(e.i);
    }
    canonicalize(out);
    return out;
}

namespace {

std::vector<WLabel> all_labels(const ActionTable& t) {
    std::vector<WLabel> labels;
    labels.reserve(2 * t.w_size());
    for (Index j = 0; j < t.w_size(); ++j) {
        labels.push_back({j, false});
        labels.push_back({j, true});
    }
    return labels;
}

} // namespace

bool oracle_connected(const ActionTable& t, Index i, Index k, std::size_t max_len) {
    if (i >= t.v_size() || k >= t.v_size())
        fail(errc::index_out_of_range, "oracle_connected index outside v_size");
    if (i == k) return true;
    if (max_len == 0) max_len = t.v_size() * 2 * t.w_size();

    const std::vector<WLabel> labels = all_labels(t);
    std::set<IndexSet> seen;
    std::vector<IndexSet> frontier{IndexSet{i}};
    seen.insert(frontier.front());
    for (std::size_t depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
        std::vector<IndexSet> next;
        for (const IndexSet& u : frontier) {
            for (WLabel x : labels) {
                IndexSet v = phi(t, u, x);
                if (v.empty()) continue;
                if (index_set_contains(v, k)) return true;
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

Decomposition oracle_components(const ActionTable& t) {
    const std::size_t n = t.v_size();
    // Pairwise relation, then the partition it induces.  Quadratic on
    // purpose; the fast path lives in components().
    std::vector<Index> cls(n);
    for (Index i = 0; i < n; ++i) cls[i] = i;
    for (Index i = 0; i < n; ++i)
        for (Index k = i + 1; k < n; ++k)
            if (cls[i] != cls[k] && oracle_connected(t, i, k)) {
                Index to = std::min(cls[i], cls[k]);
                Index from = std::max(cls[i], cls[k]);
                for (Index m = 0; m < n; ++m)
                    if (cls[m] == from) cls[m] = to;
            }
    std::vector<IndexSet> blocks;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (Index m = 0; m < n; ++m) {
        if (slot[cls[m]] == SIZE_MAX) {
            slot[cls[m]] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[cls[m]]].push_back(m);
    }
    return Decomposition(std::move(blocks), n);
}

std::vector<IndexSet> oracle_minimal_closed(const ActionTable& t) {
    const std::size_t n = t.v_size();
    if (n > 20)
        fail(errc::size_limit_exceeded,
             "powerset oracle capped at v_size 20, got " + std::to_string(n));

    std::vector<std::uint32_t> closed;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        IndexSet s;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) s.push_back(static_cast<Index>(b));
        if (is_closed_subset(t, s)) closed.push_back(mask);
    }
    std::sort(closed.begin(), closed.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t c : closed) {
        bool dominated = false;
        for (std::uint32_t m : minimal)
            if (m != c && (m & c) == m) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    std::vector<IndexSet> out;
    for (std::uint32_t m : minimal) {
        IndexSet s;
        for (std::size_t b = 0; b < n; ++b)
            if (m & (1u << b)) s.push_back(static_cast<Index>(b));
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace mbmod
