#pragma once

#include <optional>

#include "mbmod/star.hpp"

namespace mbmod {

struct SupportEdge {
    Index to = 0;
    WLabel label;

    auto operator<=>(const SupportEdge&) const = default;
};

/// Undirected view of the action's support.  Each entry (a, j, b, .)
/// contributes the forward arc a -> b labeled j and the reverse arc
/// b -> a labeled j-barred; an edge {a, b} exists iff some entry relates
/// a and b in either direction.  Self-loops are kept.
class SupportGraph {
public:
    explicit SupportGraph(const ActionTable& t);

    std::size_t size() const { return offsets_.size() - 1; }

    /// Arcs out of a, sorted by (to, j, forward-before-barred).
    std::span<const SupportEdge> neighbors(Index a) const;

private:
    std::vector<SupportEdge> edges_;
    std::vector<std::size_t> offsets_;
};

/// An explicit connection from one V-index to another: the label sequence
/// whose phi-chain from {from} has nonempty intermediate sets and reaches
/// to.  Empty steps stand for the reflexive connection (from == to).
struct ConnectionWitness {
    Index from = 0;
    Index to = 0;
    std::vector<WLabel> steps;

    bool operator==(const ConnectionWitness&) const = default;
};

/// Partition of 0..v_size-1 into connection components.  Blocks are
/// sorted ascending internally, ordered by representative (their smallest
/// member), disjoint, nonempty, and cover the index set exactly.
class Decomposition {
public:
    Decomposition(std::vector<IndexSet> blocks, std::size_t v_size);

    std::span<const IndexSet> blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    std::size_t v_size() const { return block_of_.size(); }
    Index block_of(Index i) const;
    Index representative(std::size_t block) const { return blocks_[block].front(); }
    bool same_block(Index a, Index b) const { return block_of(a) == block_of(b); }

    bool operator==(const Decomposition& rhs) const { return blocks_ == rhs.blocks_; }

private:
    std::vector<IndexSet> blocks_;
    std::vector<Index> block_of_;
};

/// Connection components of the index set, computed as connected
/// components of the support graph by union-find (path compression and
/// union by rank) streaming the entry list once.  Isolated indices form
/// singleton blocks.
Decomposition components(const ActionTable& t);

/// Checks the literal phi-chain: U_1 = phi({from}, steps[0]), ...,
/// requiring U_1..U_{n-1} nonempty and to in U_n; an empty chain verifies
/// iff from == to.  Malformed witnesses (out-of-range indices or labels)
/// return false rather than throwing.  Nonempty cyclic chains from i to i
/// are accepted when their phi-chain conditions hold.
bool verify_witness(const ActionTable& t, const ConnectionWitness& w);

/// Shortest witness from one index to another, or nullopt when the two
/// lie in different components.  Ties are broken per step by smallest
/// predecessor id, then smallest label id, forward before barred.  A
/// returned witness always passes verify_witness.
std::optional<ConnectionWitness> find_witness(const ActionTable& t, Index from, Index to);

/// Swaps endpoints, reverses the step order and bars every step.  The
/// reversal of a verified witness verifies; reversing twice is the
/// identity.
ConnectionWitness reverse_witness(const ConnectionWitness& w);

/// Joins witnesses end to end (a.to must equal b.from).  Concatenation of
/// two verified witnesses verifies, which is the transitivity of the
/// connection relation in executable form.
ConnectionWitness concat_witness(const ConnectionWitness& a, const ConnectionWitness& b);

} // namespace mbmod
