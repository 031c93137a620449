#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"
#include "tdt/menger.hpp"
#include "tdt/verify.hpp"
#include "tdt/zoo.hpp"

using namespace tdt;

namespace {

TreeDecomposition path_td(std::vector<std::vector<int>> bags) {
    TreeDecomposition td;
    td.num_nodes = (int)bags.size();
    td.bags = std::move(bags);
    for (int i = 0; i + 1 < td.num_nodes; ++i) td.edges.push_back({i, i + 1});
    return td;
}

bool same_violation(const LeannessViolation& a, const LeannessViolation& b) {
    return a.s == b.s && a.t == b.t && a.ell == b.ell && a.Zs == b.Zs && a.Zt == b.Zt &&
           a.X == b.X;
}

}  // namespace

TEST_CASE("check_lean worked examples") {
    Graph p3 = gen_path(3);
    auto v = check_lean(p3, path_td({{0, 1, 2}}));
    REQUIRE(v.has_value());
    CHECK(v->s == 0);
    CHECK(v->t == 0);
    CHECK(v->ell == 2);
    CHECK(v->Zs == std::vector<int>{0, 1});
    CHECK(v->Zt == std::vector<int>{1, 2});
    CHECK(v->X == std::vector<int>{1});
    CHECK_NOTHROW(assert_violation_valid(p3, path_td({{0, 1, 2}}), *v));

    Graph k4 = gen_clique(4);
    CHECK_FALSE(check_lean(k4, path_td({{0, 1, 2, 3}})).has_value());

    Graph k4_minus = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto w = check_lean(k4_minus, path_td({{0, 1, 2, 3}}));
    REQUIRE(w.has_value());
    CHECK(w->s == 0);
    CHECK(w->t == 0);
    CHECK(w->ell == 3);
    CHECK(w->Zs == std::vector<int>{0, 1, 2});
    CHECK(w->Zt == std::vector<int>{0, 1, 3});
    CHECK(w->X == std::vector<int>{0, 1});
}

TEST_CASE("a bag holding both z sets carries their deficiency as a violation") {
    auto [g, atlas] = gen_clique_rows({8});
    const int m = 3;
    auto Z1 = atlas.at("z1/3");
    auto Z2 = atlas.at("z2/3");
    REQUIRE(Z1.size() == m + 3);
    auto res = max_disjoint_paths(g, Z1, Z2);
    CHECK(res.k == m + 2);

    // Any bag containing Z1 and Z2 makes (Z1, Z2) a same-bag violation of
    // size m+3 against a cut of size m+2; it validates even though the
    // minimum the scan reports is smaller.
    TreeDecomposition td = path_td({set_union(Z1, Z2)});
    LeannessViolation v;
    v.s = 0;
    v.t = 0;
    v.ell = m + 3;
    v.Zs = Z1;
    v.Zt = Z2;
    v.X = res.sep.X;
    v.sideA = res.sep.sideA;
    v.sideB = res.sep.sideB;
    CHECK(v.X.size() == m + 2);
    CHECK_NOTHROW(assert_violation_valid(g, td, v));
}

TEST_CASE("check_lean agrees with the brute-force oracle") {
    std::mt19937_64 rng(12345);
    int compared = 0;
    for (uint64_t seed = 1; compared < 60; ++seed) {
        int n = 5 + (int)(seed % 5);  // 5..9 vertices
        Graph g = tdt_test::random_connected_graph(n, 0.35, seed);
        auto td = tdt_test::random_rooted_td(g, seed);
        if (width(td) > 5) continue;  // oracle budget: bags <= 6
        ++compared;
        auto fast = check_lean(g, td);
        auto slow = tdt_test::brute_check_lean(g, td);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(same_violation(*fast, *slow));
            CHECK_NOTHROW(assert_violation_valid(g, td, *fast));
        }
    }
    CHECK(compared == 60);
}

TEST_CASE("serial and parallel scans return the identical violation") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = tdt_test::random_connected_graph(8 + (int)(seed % 4), 0.3, seed * 7);
        auto td = tdt_test::random_rooted_td(g, seed * 7);
        LeanOptions serial, parallel;
        serial.parallel = false;
        parallel.parallel = true;
        auto a = check_lean(g, td, serial);
        auto b = check_lean(g, td, parallel);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(same_violation(*a, *b));
    }
}

TEST_CASE("bag cap is enforced") {
    Graph g = gen_clique(8);
    TreeDecomposition td = path_td({{0, 1, 2, 3, 4, 5, 6, 7}});
    LeanOptions opt;
    opt.max_bag_cap = 6;
    CHECK_THROWS(check_lean(g, td, opt));
}

TEST_CASE("comparable-only mode never fails where the full scan passes") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = tdt_test::random_connected_graph(8, 0.35, seed * 13);
        auto td = tdt_test::random_rooted_td(g, seed * 13);
        LeanOptions comparable;
        comparable.comparable_only = true;
        comparable.root = 0;
        if (!check_lean(g, td).has_value()) CHECK_FALSE(check_lean(g, td, comparable).has_value());
    }
}

TEST_CASE("linked and strongly linked checkers") {
    Graph p3 = gen_path(3);
    CHECK_FALSE(check_strongly_linked(p3, path_td({{0, 1}, {1, 2}})).has_value());

    Graph bridged = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto td = path_td({{0, 1, 2}, {2, 3}, {3, 4, 5}});
    CHECK(validate_td(bridged, td).empty());
    CHECK_FALSE(check_strongly_linked(bridged, td).has_value());
    CHECK_FALSE(check_linked(bridged, td, 0).has_value());

    // not strongly linked: both outer adhesions of the middle bag have size
    // two, but only one disjoint path joins the end bags through the path
    Graph p4 = gen_path(4);
    auto bad = path_td({{0, 1}, {0, 1, 2, 3}, {2, 3}});
    REQUIRE(validate_td(p4, bad).empty());
    auto v = check_strongly_linked(p4, bad);
    REQUIRE(v.has_value());
    CHECK(v->flow < v->required);
    CHECK((int)v->X.size() == v->flow);
    CHECK(is_separator(p4, v->X, set_minus(bad.bags[v->s], v->X),
                       set_minus(bad.bags[v->t], v->X)));
}

TEST_CASE("componental and tight checkers") {
    Graph p3 = gen_path(3);
    CHECK_FALSE(check_componental(p3, path_td({{0, 1}, {1, 2}}), 0).has_value());

    auto empty_above = path_td({{0, 1, 2}, {1}});
    auto v = check_componental(p3, empty_above, 0);
    REQUIRE(v.has_value());
    CHECK(v->parent == 0);
    CHECK(v->child == 1);

    CHECK_FALSE(check_tight(p3, path_td({{0, 1}, {1, 2}}), 0).has_value());
    auto slack = path_td({{0, 1}, {0, 1, 2}});
    auto w = check_tight(p3, slack, 0);
    REQUIRE(w.has_value());

    auto fixed = make_tight(p3, slack, 0);
    CHECK_FALSE(check_tight(p3, fixed, 0).has_value());
    CHECK(fixed.bags[1] == std::vector<int>{1, 2});
}

TEST_CASE("ray decomposition") {
    Graph k3 = gen_clique(3);
    std::vector<int> order{0, 1, 2};
    auto td = ray_decomposition(k3, order);
    REQUIRE(td.num_nodes == 3);
    CHECK(td.bags[0] == std::vector<int>{0});
    CHECK(td.bags[1] == std::vector<int>{0, 1});
    CHECK(td.bags[2] == std::vector<int>{0, 1, 2});
    CHECK(validate_td(k3, td).empty());

    Graph lone = build_graph(1, {});
    auto single = ray_decomposition(lone, {0});
    CHECK(single.num_nodes == 1);
    CHECK(single.bags[0] == std::vector<int>{0});

    // complete graphs: every prefix decomposition is lean
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 8; ++n) {
        Graph kn = gen_clique(n);
        std::vector<int> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        CHECK_FALSE(check_lean(kn, ray_decomposition(kn, ord)).has_value());
        std::shuffle(ord.begin(), ord.end(), rng);
        CHECK_FALSE(check_lean(kn, ray_decomposition(kn, ord)).has_value());
    }
}

TEST_CASE("cumulative closure") {
    auto td = path_td({{0, 1}, {1, 2}, {2, 3}});
    auto cc = cumulative_closure(td, 0);
    CHECK(cc.bags[0] == std::vector<int>{0, 1});
    CHECK(cc.bags[1] == std::vector<int>{0, 1, 2});
    CHECK(cc.bags[2] == std::vector<int>{0, 1, 2, 3});

    auto again = cumulative_closure(cc, 0);
    CHECK(again.bags == cc.bags);

    // closure output: strongly linked plus the meet identity
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = tdt_test::random_connected_graph(8, 0.3, seed * 31);
        auto raw = tdt_test::random_rooted_td(g, seed * 31);
        auto closed = cumulative_closure(raw, 0);
        CHECK(validate_td(g, closed).empty());
        CHECK_FALSE(check_strongly_linked(g, closed).has_value());
        auto rt = root_td(closed, 0);
        std::vector<int> depth(closed.num_nodes, 0);
        for (int node : rt.preorder)
            if (rt.parent[node] >= 0) depth[node] = depth[rt.parent[node]] + 1;
        for (int s = 0; s < closed.num_nodes; ++s)
            for (int t = s; t < closed.num_nodes; ++t) {
                int a = s, b = t;
                while (a != b) {
                    if (depth[a] < depth[b]) std::swap(a, b);
                    a = rt.parent[a];
                }
                CHECK(set_intersect(closed.bags[s], closed.bags[t]) == closed.bags[a]);
            }
    }
}

TEST_CASE("make_tight on the componental corpus") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = tdt_test::random_connected_graph(9, 0.3, seed * 17);
        auto td = tdt_test::random_componental_td(g, seed * 17);
        REQUIRE(validate_td(g, td).empty());
        REQUIRE_FALSE(check_componental(g, td, 0).has_value());
        auto tight = make_tight(g, td, 0);
        CHECK(validate_td(g, tight).empty());
        CHECK_FALSE(check_tight(g, tight, 0).has_value());
        CHECK_FALSE(check_componental(g, tight, 0).has_value());
        CHECK(width(tight) <= width(td));
        auto twice = make_tight(g, tight, 0);
        CHECK(twice.bags == tight.bags);
    }
}

TEST_CASE("every reported violation revalidates") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = tdt_test::random_connected_graph(8, 0.25, seed * 41);
        auto td = tdt_test::random_rooted_td(g, seed * 41);
        if (auto v = check_lean(g, td)) {
            CHECK_NOTHROW(assert_violation_valid(g, td, *v));
            CHECK((int)v->X.size() < v->ell);
            CHECK(is_separator(g, v->X, v->Zs, v->Zt));
        }
        if (auto lv = check_strongly_linked(g, td)) {
            CHECK(lv->flow < lv->required);
            MengerSolver solver(g);
            CHECK(solver.flow_value(td.bags[lv->s], td.bags[lv->t]) == lv->flow);
        }
    }
}

TEST_CASE("implication chain lean => strongly linked => linked") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = tdt_test::random_connected_graph(7 + (int)(seed % 3), 0.3, seed * 53);
        auto td = tdt_test::random_rooted_td(g, seed * 53);
        bool lean = !check_lean(g, td).has_value();
        bool slink = !check_strongly_linked(g, td).has_value();
        bool linked = !check_linked(g, td, 0).has_value();
        if (lean) CHECK(slink);
        if (slink) CHECK(linked);
    }
}
