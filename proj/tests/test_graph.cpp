#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "support/oracles.hpp"
#include "tdt/graph.hpp"
#include "tdt/zoo.hpp"

using namespace tdt;

TEST_CASE("build_graph basics") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.n == 3);
    CHECK(p3.num_edges() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 0));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph lone = build_graph(1, {});
    CHECK(lone.n == 1);
    CHECK(lone.num_edges() == 0);

    Graph dup = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(dup.num_edges() == 2);

    CHECK_THROWS(build_graph(2, {{0, 2}}));
    CHECK_THROWS(build_graph(2, {{1, 1}}));
}

TEST_CASE("components") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    auto split = components(p3, {1});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == std::vector<int>{0});
    CHECK(split[1] == std::vector<int>{2});

    Graph tri = gen_cycle(3);
    auto whole = components(tri, {});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == std::vector<int>{0, 1, 2});

    Graph k4 = gen_clique(4);
    auto rest = components(k4, {0, 1});
    REQUIRE(rest.size() == 1);
    CHECK(rest[0] == std::vector<int>{2, 3});
}

TEST_CASE("components classes are separated and internally connected") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen_random(10, 0.25, seed);
        std::vector<int> deleted{(int)(seed % 10), (int)((3 * seed) % 10)};
        deleted = sorted_unique(std::move(deleted));
        auto classes = components(g, deleted);
        for (size_t a = 0; a < classes.size(); ++a) {
            // internally connected: one component of the induced subgraph
            auto sub = induced_subgraph(g, classes[a]);
            CHECK(components(sub.g, {}).size() == 1);
            // pairwise non-adjacent
            for (size_t b = a + 1; b < classes.size(); ++b)
                for (int u : classes[a])
                    for (int v : classes[b]) CHECK_FALSE(g.has_edge(u, v));
        }
    }
}

TEST_CASE("induced_subgraph") {
    Graph tri = gen_cycle(3);
    auto sub = induced_subgraph(tri, {0, 1});
    CHECK(sub.g.n == 2);
    CHECK(sub.g.num_edges() == 1);
    CHECK(sub.old_id == std::vector<int>{0, 1});
    CHECK(sub.new_id == std::vector<int>{0, 1, -1});

    Graph p3 = gen_path(3);
    auto copy = induced_subgraph(p3, {0, 1, 2});
    CHECK(copy.g.n == 3);
    CHECK(copy.g.num_edges() == 2);
    CHECK(copy.old_id == std::vector<int>{0, 1, 2});

    auto ends = induced_subgraph(p3, {0, 2});
    CHECK(ends.g.n == 2);
    CHECK(ends.g.num_edges() == 0);
}

TEST_CASE("generated graphs are well formed") {
    CHECK_NOTHROW(assert_well_formed(gen_path(6)));
    CHECK_NOTHROW(assert_well_formed(gen_cycle(6)));
    CHECK_NOTHROW(assert_well_formed(gen_clique(6)));
    CHECK_NOTHROW(assert_well_formed(gen_grid(3, 4)));
    CHECK_NOTHROW(assert_well_formed(gen_random(20, 0.3, 7)));
    CHECK_NOTHROW(assert_well_formed(gen_planar_witness({5, 2, 12}).first));
    CHECK_NOTHROW(assert_well_formed(gen_clique_rows({8}).first));
    CHECK_NOTHROW(assert_well_formed(gen_seq_tree({2, 2, 6}).first));
}

TEST_CASE("neighborhood and set helpers") {
    Graph p4 = gen_path(4);
    CHECK(neighborhood(p4, {1, 2}) == std::vector<int>{0, 3});
    CHECK(neighborhood(p4, {0}) == std::vector<int>{1});

    CHECK(set_union({1, 3}, {2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(set_intersect({1, 3, 5}, {3, 4, 5}) == std::vector<int>{3, 5});
    CHECK(set_minus({1, 2, 3}, {2}) == std::vector<int>{1, 3});
    CHECK(set_contains({1, 4, 6}, 4));
    CHECK_FALSE(set_contains({1, 4, 6}, 5));
    CHECK(is_subset({1, 4}, {1, 2, 4}));
    CHECK_FALSE(is_subset({1, 3}, {1, 2, 4}));
    CHECK(sorted_unique({3, 1, 3, 2}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("component_of matches components") {
    Graph g = gen_random(12, 0.2, 3);
    std::vector<char> del(g.n, 0);
    del[0] = del[5] = 1;
    auto classes = components(g, {0, 5});
    for (const auto& cls : classes)
        for (int v : cls) CHECK(component_of(g, v, del) == cls);
    CHECK(component_of(g, 0, del).empty());
}

TEST_CASE("small-graph corpus census") {
    auto corpus = tdt_test::connected_graphs_upto(6);
    CHECK(corpus.size() == 1 + 1 + 2 + 6 + 21 + 112);
    for (const auto& g : corpus) {
        CHECK_NOTHROW(assert_well_formed(g));
        CHECK(is_connected(g));
    }
}
