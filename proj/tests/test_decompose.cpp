#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "mbmod/oracle.hpp"

using namespace mbmod;
using namespace mbt;

TEST_CASE("decompose splits the running example") {
    ActionTable t = e1();
    std::vector<ComponentModule> mods = decompose(t);
    REQUIRE(mods.size() == 2);

    // blocks must match the brute-force relation
    Decomposition oracle = oracle_components(t);
    CHECK(mods[0].component() == oracle.blocks()[0]);
    CHECK(mods[1].component() == oracle.blocks()[1]);

    // entries route by source block: recompute the routing by hand
    for (const ComponentModule& m : mods) {
        std::vector<std::uint32_t> expect;
        for (std::uint32_t id = 0; id < t.entries().size(); ++id)
            if (index_set_contains(m.component(), t.entries()[id].i)) expect.push_back(id);
        CHECK(std::vector<std::uint32_t>(m.entry_ids().begin(), m.entry_ids().end()) == expect);
    }
    CHECK(mods[0].entry_count() == 1);
    CHECK(mods[1].entry_count() == 1);
    CHECK(mods[0].inherited_basis() == IndexSet{0, 1});
}

TEST_CASE("decompose of an empty module is empty") {
    CHECK(decompose(rat_table(0, 0, {})).empty());
    CHECK(decompose(rat_table(0, 3, {})).empty());
}

TEST_CASE("a generated single-component instance stays whole") {
    GenSpec spec;
    spec.v_size = 30;
    spec.w_size = 4;
    spec.density = 0.4;
    spec.seed = 99;
    spec.target_components = 1;
    ActionTable t = generate(spec);
    std::vector<ComponentModule> mods = decompose(t);
    REQUIRE(mods.size() == 1);
    CHECK(mods[0].component().size() == t.v_size());
    CHECK(mods[0].entry_count() == t.entries().size());
}

TEST_CASE("is_closed_subset on the running example") {
    ActionTable t = e1();
    CHECK(is_closed_subset(t, {2}));
    CHECK_FALSE(is_closed_subset(t, {0})); // star(0, w0) leaves the set
    CHECK(is_closed_subset(t, {0, 1}));
    CHECK(is_closed_subset(t, {1}));
    CHECK(is_closed_subset(t, {}));
    CHECK(is_closed_subset(t, {0, 1, 2}));
}

TEST_CASE("blocks are closed and partition the index set") {
    SplitMix64 meta(71);
    for (int round = 0; round < 40; ++round) {
        ActionTable t = generate(draw_spec(meta, 50, 8, {0.08, 0.3}));
        std::vector<ComponentModule> mods = decompose(t);
        std::vector<bool> covered(t.v_size(), false);
        std::size_t routed = 0;
        for (const ComponentModule& m : mods) {
            CHECK(is_closed_subset(t, m.component()));
            for (Index a : m.component()) {
                CHECK_FALSE(covered[a]);
                covered[a] = true;
            }
            routed += m.entry_count();
            // closure of the view: every referenced entry stays inside
            for (std::uint32_t id : m.entry_ids()) {
                CHECK(index_set_contains(m.component(), t.entries()[id].i));
                CHECK(index_set_contains(m.component(), t.entries()[id].k));
            }
        }
        CHECK(std::count(covered.begin(), covered.end(), false) == 0);
        CHECK(routed == t.entries().size()); // every entry lands in exactly one view
    }
}

TEST_CASE("a block with multiple components witnesses non-simplicity") {
    // two blocks: either one is a proper nonzero closed subset
    ActionTable t = e1();
    std::vector<ComponentModule> mods = decompose(t);
    REQUIRE(mods.size() >= 2);
    for (const ComponentModule& m : mods) {
        CHECK(!m.component().empty());
        CHECK(m.component().size() < t.v_size());
        CHECK(is_closed_subset(t, m.component()));
    }
}

TEST_CASE("materialize reindexes a component standalone") {
    ActionTable t = rat_table(5, 2, {{0, 0, 2, 1, 2}, {2, 1, 0, 3}, {1, 0, 3, 1}, {4, 0, 4, 7}},
                              std::vector<std::string>{"a", "b", "c", "d", "e"},
                              std::vector<std::string>{"p", "q"});
    std::vector<ComponentModule> mods = decompose(t);
    REQUIRE(mods.size() == 3); // {0,2}, {1,3}, {4}
    CHECK(mods[0].component() == IndexSet{0, 2});

    ActionTable sub = mods[0].materialize();
    CHECK(sub.v_size() == 2);
    CHECK(sub.w_size() == t.w_size()); // W side stays whole
    REQUIRE(sub.entries().size() == 2);
    // ambient 0 -> rank 0, ambient 2 -> rank 1
    CHECK(sub.entries()[0].i == 0);
    CHECK(sub.entries()[0].k == 1);
    CHECK(sub.entries()[0].c == Scalar::from_fraction(1, 2));
    CHECK(sub.entries()[1].i == 1);
    CHECK(sub.entries()[1].k == 0);
    REQUIRE(sub.v_labels().has_value());
    CHECK(*sub.v_labels() == std::vector<std::string>{"a", "c"});
    CHECK(*sub.w_labels() == std::vector<std::string>{"p", "q"});
}

TEST_CASE("materialized blocks revalidate and stay whole") {
    SplitMix64 meta(72);
    for (int round = 0; round < 25; ++round) {
        ActionTable t = generate(draw_spec(meta, 30, 5, {0.15, 0.5}));
        for (const ComponentModule& m : decompose(t)) {
            ActionTable sub = m.materialize(); // build_table re-runs all validation
            CHECK(sub.v_size() == m.component().size());
            CHECK(sub.entries().size() == m.entry_count());
            CHECK(decompose(sub).size() == 1); // a component is itself connected
        }
    }
}
