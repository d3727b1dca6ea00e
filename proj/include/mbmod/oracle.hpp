#pragma once

#include "mbmod/connect.hpp"
#include "mbmod/minimal.hpp"

namespace mbmod {

/// Brute-force counterparts of the fast algorithms.  Deliberately literal
/// and slow; intended for cross-validation on small instances and for the
/// CLI --oracle flags.

/// star by full scan of the entry list, no precomputed index.
IndexSet oracle_star(const ActionTable& t, Index i, WLabel x);

/// Literal connection search: breadth-first over label sequences from
/// J together with the barred labels, evaluating phi-chains from {i} and
/// memoizing the reached subset states.  Nonempty intermediate sets come
/// free (phi of an empty set is empty, so a chain that reaches k never
/// passes through one).  max_len 0 means the stabilization bound
/// v_size * 2 * w_size.  i == k is connected by the empty sequence.
bool oracle_connected(const ActionTable& t, Index i, Index k, std::size_t max_len = 0);

/// Partition of the index set induced by pairwise oracle_connected.
Decomposition oracle_components(const ActionTable& t);

/// All inclusion-minimal nonempty closed subsets by powerset enumeration
/// with is_closed_subset.  Hard cap v_size <= 20 (SizeLimitExceeded).
std::vector<IndexSet> oracle_minimal_closed(const ActionTable& t);

} // namespace mbmod
