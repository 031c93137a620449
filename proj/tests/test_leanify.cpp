#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "support/oracles.hpp"
#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"
#include "tdt/leanify.hpp"
#include "tdt/treewidth.hpp"
#include "tdt/verify.hpp"
#include "tdt/zoo.hpp"

using namespace tdt;

namespace {

TreeDecomposition single_bag(int n) {
    TreeDecomposition td;
    td.num_nodes = 1;
    td.bags.resize(1);
    for (int v = 0; v < n; ++v) td.bags[0].push_back(v);
    return td;
}

std::vector<std::vector<int>> sorted_bags(const TreeDecomposition& td) {
    auto bags = td.bags;
    std::sort(bags.begin(), bags.end());
    return bags;
}

}  // namespace

TEST_CASE("improve_step splits the all-in-one bag of a path") {
    Graph p3 = gen_path(3);
    auto td = single_bag(3);
    auto v = check_lean(p3, td);
    REQUIRE(v.has_value());
    auto out = improve_step(p3, td, *v);
    CHECK(validate_td(p3, out).empty());
    CHECK(sorted_bags(out) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(width(out) == 1);
    CHECK(fatness_to_string(fatness(td, 3)) == "(1,0,0)");
    CHECK(fatness_to_string(fatness(out, 3)) == "(0,2,0)");
    CHECK(fatness_less(fatness(out, 3), fatness(td, 3)));
}

TEST_CASE("improve_step splits K4 minus an edge along the missing pair") {
    Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto td = single_bag(4);
    auto v = check_lean(g, td);
    REQUIRE(v.has_value());
    auto out = improve_step(g, td, *v);
    CHECK(validate_td(g, out).empty());
    CHECK(sorted_bags(out) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});
}

TEST_CASE("each improvement strictly reduces fatness and never grows width") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = tdt_test::random_connected_graph(9, 0.3, seed * 7);
        auto td = tdt_test::random_rooted_td(g, seed * 7);
        int guard = 0;
        while (auto v = check_lean(g, td)) {
            auto next = improve_step(g, td, *v);
            CHECK(validate_td(g, next).empty());
            CHECK(width(next) <= width(td));
            CHECK(fatness_less(fatness(next, g.n), fatness(td, g.n)));
            td = std::move(next);
            REQUIRE(++guard < 500);
        }
        CHECK_FALSE(check_lean(g, td).has_value());
    }
}

TEST_CASE("leanify_loop reaches a lean decomposition and logs its trace") {
    Graph g = tdt_test::random_connected_graph(10, 0.3, 4242);
    auto td0 = tdt_test::random_rooted_td(g, 4242);
    auto res = leanify_loop(g, td0);
    CHECK(res.lean);
    CHECK(validate_td(g, res.td).empty());
    CHECK_FALSE(check_lean(g, res.td).has_value());
    CHECK(width(res.td) <= width(td0));
    for (size_t i = 0; i < res.trace.size(); ++i) {
        const auto& e = res.trace[i];
        CHECK(e.iter == (int)i);
        CHECK(e.sep_order < e.ell);
        CHECK(e.width_after <= e.width_before);
        CHECK(fatness_less(e.fatness_after, e.fatness_before));
    }
}

TEST_CASE("leanify from an optimal-width start keeps width at treewidth") {
    int checked = 0;
    for (const Graph& g : tdt_test::connected_graphs_upto(5)) {
        if (g.n < 2) continue;
        auto tw = treewidth_exact(g);
        auto res = leanify_loop(g, tw.td);
        CHECK(res.lean);
        CHECK(width(res.td) == treewidth_oracle(g));
        ++checked;
    }
    CHECK(checked == 30);  // connected graphs on 2..5 vertices: 1+2+6+21
}

TEST_CASE("already lean inputs come back unchanged") {
    Graph k4 = gen_clique(4);
    auto td = single_bag(4);
    auto res = leanify_loop(k4, td);
    CHECK(res.lean);
    CHECK(res.trace.empty());
    CHECK(res.td.bags == td.bags);

    Graph p4 = gen_path(4);
    auto chain = treewidth_exact(p4);
    CHECK(chain.width == 1);
    auto res2 = leanify_loop(p4, chain.td);
    CHECK(res2.lean);
    CHECK(width(res2.td) == 1);
}

TEST_CASE("max_iters caps the loop") {
    Graph p3 = gen_path(3);
    LeanifyOptions opt;
    opt.max_iters = 0;
    auto res = leanify_loop(p3, single_bag(3), opt);
    CHECK_FALSE(res.lean);
    CHECK(res.trace.empty());
    CHECK(res.td.bags == single_bag(3).bags);
}

TEST_CASE("exact treewidth on known graphs") {
    CHECK(treewidth_exact(gen_path(4)).width == 1);
    CHECK(treewidth_exact(gen_cycle(4)).width == 2);
    CHECK(treewidth_exact(gen_cycle(5)).width == 2);
    CHECK(treewidth_exact(gen_clique(4)).width == 3);
    CHECK(treewidth_exact(gen_clique(5)).width == 4);
    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(treewidth_exact(star).width == 1);
    Graph grid = gen_grid(3, 3);
    auto res = treewidth_exact(grid);
    CHECK(res.width == 3);
    CHECK(validate_td(grid, res.td).empty());
    CHECK(width(res.td) == 3);
    CHECK((int)res.order.size() == grid.n);
}

TEST_CASE("treewidth agrees with the all-orders reference") {
    for (const Graph& g : tdt_test::connected_graphs_upto(6)) {
        auto res = treewidth_exact(g);
        CHECK(res.width == treewidth_oracle(g));
        CHECK(validate_td(g, res.td).empty());
        CHECK(width(res.td) == res.width);
    }
}

TEST_CASE("size limits are enforced") {
    CHECK_THROWS(treewidth_exact(gen_path(21)));
    CHECK_THROWS(treewidth_oracle(gen_path(9)));
    CHECK_NOTHROW(treewidth_oracle(gen_path(8)));
}
