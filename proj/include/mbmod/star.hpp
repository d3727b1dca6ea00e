#pragma once

#include <compare>

#include "mbmod/table.hpp"

namespace mbmod {

/// A W-basis label, possibly barred.  Barring is an involution:
/// bar(bar(x)) == x.  Ordering is (j, forward-before-barred), which is the
/// tie-break order used everywhere labels compete.
struct WLabel {
    Index j = 0;
    bool barred = false;

    WLabel bar() const { return {j, !barred}; }
    auto operator<=>(const WLabel&) const = default;
};

/// Subset of the V-index set: sorted, duplicate-free.
using IndexSet = std::vector<Index>;

void canonicalize(IndexSet& s);
bool index_set_contains(const IndexSet& s, Index x);
IndexSet index_set_union(const IndexSet& a, const IndexSet& b);
IndexSet index_set_intersection(const IndexSet& a, const IndexSet& b);

/// The star operation.  For unbarred x: the (at most one) target of
/// v_i w_j.  For barred x: every source whose product under w_j lands in
/// the line of v_i, answered from the precomputed target-side index in
/// O(answer size).  The scan-based equivalent lives in oracle_star.
IndexSet star(const ActionTable& t, Index i, WLabel x);

/// Set extension of star: union of star(a, x) over a in u.
IndexSet phi(const ActionTable& t, const IndexSet& u, WLabel x);

} // namespace mbmod
