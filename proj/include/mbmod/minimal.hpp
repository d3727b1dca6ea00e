#pragma once

#include "mbmod/decompose.hpp"

namespace mbmod {

/// Least forward-closed superset of a seed, with the discovery trace.
struct ClosureReport {
    IndexSet seed;
    IndexSet closure;
    /// (member, entry id) in discovery order: the entry that first
    /// produced each non-seed member.
    std::vector<std::pair<Index, std::uint32_t>> trace;
};

/// Worklist fixpoint of s -> s union star(a, j) over members a and all
/// columns j, smallest pending id first.  The result is the least closed
/// superset of the seed; the trace is deterministic.
ClosureReport forward_closure(const ActionTable& t, const IndexSet& seed);

struct StarMultViolation {
    Index a = 0;
    Index b = 0;
    WLabel x;

    bool operator==(const StarMultViolation&) const = default;
};

struct StarMultReport {
    bool holds = true;
    std::vector<StarMultViolation> violations; // sorted by (a, b, x)
};

/// Checks that every star relation b in star(a, x), barred x included, is
/// realized by an actual product: some entry (a, j', b).  Forward
/// relations satisfy themselves, so the scan is over barred ones: each
/// entry (b, j, a) must be matched by an entry from a to b.
StarMultReport check_star_multiplicative(const ActionTable& t);

enum class MinimalityMethod : std::uint8_t {
    /// Star-multiplicativity held, so minimality reduces to having a
    /// single connection component.
    star_mult_shortcut,
    /// Reachability form of the closure criterion: every singleton's
    /// forward closure is the whole index set iff the forward closure of
    /// {0} covers I and every index reaches 0 backwards.
    closure_scan,
};

struct MinimalityReport {
    bool minimal = false;
    MinimalityMethod method = MinimalityMethod::closure_scan;
};

/// True iff every nonempty forward-closed subset of the index set is the
/// whole set, equivalently each singleton's forward closure covers it.
/// Throws EmptyModule for v_size 0, where the notion is undefined.
MinimalityReport is_minimal(const ActionTable& t);

/// The inclusion-minimal nonempty closed subsets: minimal elements among
/// the deduplicated singleton closures.  Always pairwise disjoint; they
/// cover the index set exactly when the basis is star-multiplicative.
std::vector<IndexSet> minimal_closed_subsets(const ActionTable& t);

} // namespace mbmod
