#pragma once

#include "mbmod/connect.hpp"

namespace mbmod {

/// One connection component seen as a submodule: the component's index
/// set (which is also the inherited basis, identified by ambient index)
/// plus a view over the parent table's entries sourced inside it.  The
/// view keeps ambient ids and owns no entry data; materialize() builds a
/// standalone reindexed table when one is needed.
class ComponentModule {
public:
    ComponentModule(const ActionTable& parent, IndexSet component,
                    std::vector<std::uint32_t> entry_ids);

    const IndexSet& component() const { return component_; }

    /// The inherited basis {v_a : a in component}, identified by ambient index.
    const IndexSet& inherited_basis() const { return component_; }

    /// Ids into parent().entries() of the entries sourced in the
    /// component; closure guarantees their targets lie inside too.
    std::span<const std::uint32_t> entry_ids() const { return entry_ids_; }
    std::size_t entry_count() const { return entry_ids_.size(); }

    const ActionTable& parent() const { return *parent_; }

    /// Standalone table over just this component: v-ids are compacted to
    /// the member's rank within the component, the W-side is kept whole,
    /// labels (when present) follow along.  Revalidated through build_table.
    ActionTable materialize() const;

private:
    const ActionTable* parent_;
    IndexSet component_;
    std::vector<std::uint32_t> entry_ids_;
};

/// Splits the module into its connection components: one ComponentModule
/// per block of components(t), ordered by representative.  The component
/// sets partition the index set and every entry lands in exactly one view.
std::vector<ComponentModule> decompose(const ActionTable& t);

/// True iff the span of {v_a : a in s} is a submodule, i.e. star(a, j)
/// stays inside s for every member a and every column j.
bool is_closed_subset(const ActionTable& t, const IndexSet& s);

} // namespace mbmod
