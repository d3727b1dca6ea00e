#include "mbmod/star.hpp"

#include <algorithm>

namespace mbmod {

void canonicalize(IndexSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool index_set_contains(const IndexSet& s, Index x) {
    return std::binary_search(s.begin(), s.end(), x);
}

IndexSet index_set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet index_set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet star(const ActionTable& t, Index i, WLabel x) {
    if (i >= t.v_size()) fail(errc::index_out_of_range, "V-index " + std::to_string(i));
    if (x.j >= t.w_size()) fail(errc::index_out_of_range, "W-index " + std::to_string(x.j));
    if (!x.barred) {
        const Entry* e = t.find_entry(i, x.j);
        if (e == nullptr) return {};
        return {e->k};
    }
    auto col = t.column_into(i); // entry ids sorted by (j, i)
    auto es = t.entries();
    auto lo = std::lower_bound(col.begin(), col.end(), x.j,
                               [&](std::uint32_t id, Index j) { return es[id].j < j; });
    IndexSet out;
    for (auto it = lo; it != col.end() && es[*it].j == x.j; ++it) out.push_back(es[*it].i);
    return out; // ascending by construction of column_into
}

IndexSet phi(const ActionTable& t, const IndexSet& u, WLabel x) {
    IndexSet out;
    for (Index a : u) {
        IndexSet part = star(t, a, x);
        out.insert(out.end(), part.begin(), part.end());
    }
    canonicalize(out);
    return out;
}

} // namespace mbmod
