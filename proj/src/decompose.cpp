#include "mbmod/decompose.hpp"

#include <algorithm>

namespace mbmod {

ComponentModule::ComponentModule(const ActionTable& parent, IndexSet component,
                                 std::vector<std::uint32_t> entry_ids)
    : parent_(&parent), component_(std::move(component)), entry_ids_(std::move(entry_ids)) {}

ActionTable ComponentModule::materialize() const {
    std::vector<Entry> entries;
    entries.reserve(entry_ids_.size());
    auto rank_of = [this](Index ambient) {
        auto it = std::lower_bound(component_.begin(), component_.end(), ambient);
        return static_cast<Index>(it - component_.begin());
    };
    for (std::uint32_t id : entry_ids_) {
        const Entry& e = parent_->entries()[id];
        entries.push_back(Entry{rank_of(e.i), e.j, rank_of(e.k), e.c});
    }
    std::optional<std::vector<std::string>> v_labels;
    if (parent_->v_labels()) {
        v_labels.emplace();
        v_labels->reserve(component_.size());
        for (Index a : component_) v_labels->push_back((*parent_->v_labels())[a]);
    }
    return build_table(std::move(entries), component_.size(), parent_->w_size(),
                       parent_->field(), std::move(v_labels), parent_->w_labels());
}

std::vector<ComponentModule> decompose(const ActionTable& t) {
    Decomposition parts = components(t);
    std::vector<std::vector<std::uint32_t>> routed(parts.size());
    auto es = t.entries();
    for (std::uint32_t id = 0; id < es.size(); ++id) {
        routed[parts.block_of(es[id].i)].push_back(id);
    }
    std::vector<ComponentModule> out;
    out.reserve(parts.size());
    for (std::size_t b = 0; b < parts.size(); ++b) {
        out.emplace_back(t, parts.blocks()[b], std::move(routed[b]));
    }
    return out;
}

bool is_closed_subset(const ActionTable& t, const IndexSet& s) {
    for (Index a : s) {
        for (const Entry& e : t.row(a)) {
            if (!index_set_contains(s, e.k)) return false;
        }
    }
    return true;
}

} // namespace mbmod
