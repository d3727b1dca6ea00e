#include "mbmod/connect.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mbmod {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        for (std::size_t x = 0; x < n; ++x) parent_[x] = static_cast<Index>(x);
    }

    Index find(Index x) {
        Index root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            Index next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<Index> parent_;
    std::vector<std::uint8_t> rank_;
};

} // namespace

SupportGraph::SupportGraph(const ActionTable& t) {
    const std::size_t n = t.v_size();
    std::vector<std::size_t> degree(n + 1, 0);
    for (const Entry& e : t.entries()) {
        ++degree[e.i + 1];
        ++degree[e.k + 1];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) offsets_[x] = offsets_[x - 1] + degree[x];
    edges_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Entry& e : t.entries()) {
        edges_[cursor[e.i]++] = SupportEdge{e.k, {e.j, false}};
        edges_[cursor[e.k]++] = SupportEdge{e.i, {e.j, true}};
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::sort(edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[a]),
                  edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[a + 1]));
    }
}

std::span<const SupportEdge> SupportGraph::neighbors(Index a) const {
    if (a + 1 >= offsets_.size())
        fail(errc::index_out_of_range, "V-index " + std::to_string(a));
    return {edges_.data() + offsets_[a], offsets_[a + 1] - offsets_[a]};
}

Decomposition::Decomposition(std::vector<IndexSet> blocks, std::size_t v_size)
    : blocks_(std::move(blocks)), block_of_(v_size, 0) {
    std::vector<bool> seen(v_size, false);
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const IndexSet& block = blocks_[b];
        if (block.empty()) throw std::invalid_argument("empty block in decomposition");
        if (!std::is_sorted(block.begin(), block.end()))
            throw std::invalid_argument("unsorted block in decomposition");
        for (Index x : block) {
            if (x >= v_size || seen[x])
                throw std::invalid_argument("blocks do not partition the index set");
            seen[x] = true;
            block_of_[x] = static_cast<Index>(b);
        }
        covered += block.size();
        if (b > 0 && blocks_[b - 1].front() >= block.front())
            throw std::invalid_argument("blocks not ordered by representative");
    }
    if (covered != v_size) throw std::invalid_argument("blocks do not cover the index set");
}

Index Decomposition::block_of(Index i) const {
    if (i >= block_of_.size()) fail(errc::index_out_of_range, "V-index " + std::to_string(i));
    return block_of_[i];
}

Decomposition components(const ActionTable& t) {
    const std::size_t n = t.v_size();
    DisjointSets sets(n);
    for (const Entry& e : t.entries()) sets.unite(e.i, e.k);

    // First-seen roots assign block slots, so blocks come out ordered by
    // their smallest member.
    std::vector<Index> slot(n, std::numeric_limits<Index>::max());
    std::vector<IndexSet> blocks;
    for (Index x = 0; x < n; ++x) {
        Index root = sets.find(x);
        if (slot[root] == std::numeric_limits<Index>::max()) {
            slot[root] = static_cast<Index>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[root]].push_back(x);
    }
    return Decomposition(std::move(blocks), n);
}

bool verify_witness(const ActionTable& t, const ConnectionWitness& w) {
    if (w.from >= t.v_size() || w.to >= t.v_size()) return false;
    for (const WLabel& step : w.steps) {
        if (step.j >= t.w_size()) return false;
    }
    if (w.steps.empty()) return w.from == w.to;
    IndexSet u = {w.from};
    for (std::size_t n = 0; n < w.steps.size(); ++n) {
        u = phi(t, u, w.steps[n]);
        if (u.empty() && n + 1 < w.steps.size()) return false;
    }
    return index_set_contains(u, w.to);
}

std::optional<ConnectionWitness> find_witness(const ActionTable& t, Index from, Index to) {
    if (from >= t.v_size()) fail(errc::index_out_of_range, "V-index " + std::to_string(from));
    if (to >= t.v_size()) fail(errc::index_out_of_range, "V-index " + std::to_string(to));
    if (from == to) return ConnectionWitness{from, to, {}};

    SupportGraph graph(t);
    constexpr Index unset = std::numeric_limits<Index>::max();
    std::vector<Index> parent(t.v_size(), unset);
    std::vector<WLabel> via(t.v_size());

    // Level-synchronous BFS.  Levels are scanned in ascending id order and
    // each adjacency is (to, j, forward-first) sorted, so the first
    // assignment a vertex gets is the lexicographically smallest
    // (predecessor, label) pair among its shortest predecessors.
    IndexSet level = {from};
    std::vector<bool> discovered(t.v_size(), false);
    discovered[from] = true;
    while (!level.empty()) {
        IndexSet next;
        for (Index u : level) {
            for (const SupportEdge& e : graph.neighbors(u)) {
                if (discovered[e.to]) continue;
                discovered[e.to] = true;
                parent[e.to] = u;
                via[e.to] = e.label;
                if (e.to == to) {
                    std::vector<WLabel> steps;
                    for (Index x = to; x != from; x = parent[x]) steps.push_back(via[x]);
                    std::reverse(steps.begin(), steps.end());
                    return ConnectionWitness{from, to, std::move(steps)};
                }
                next.push_back(e.to);
            }
        }
        canonicalize(next);
        level = std::move(next);
    }
    return std::nullopt;
}

ConnectionWitness reverse_witness(const ConnectionWitness& w) {
    ConnectionWitness out{w.to, w.from, {}};
    out.steps.reserve(w.steps.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) out.steps.push_back(it->bar());
    return out;
}

ConnectionWitness concat_witness(const ConnectionWitness& a, const ConnectionWitness& b) {
    if (a.to != b.from)
        throw std::invalid_argument("witness endpoints do not chain");
    ConnectionWitness out{a.from, b.to, a.steps};
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

} // namespace mbmod
