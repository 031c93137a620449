#include "tdt/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef TDT_HAVE_OPENMP
#include <atomic>
#include <omp.h>
#endif

namespace tdt {

namespace {

void require_valid(const Graph& g, const TreeDecomposition& td) {
    auto problems = validate_td(g, td);
    if (!problems.empty()) throw std::invalid_argument(problems.front());
}

// nodes of the subtree rooted at c
std::vector<int> subtree_nodes(const RootedTd& rt, int c) {
    std::vector<int> nodes = {c};
    for (size_t i = 0; i < nodes.size(); i++)
        for (int w : rt.children[nodes[i]]) nodes.push_back(w);
    return nodes;
}

// entry/exit times of a rooted DFS, for ancestor tests
struct EulerTimes {
    std::vector<int> tin, tout;
    bool is_ancestor(int a, int d) const { return tin[a] <= tin[d] && tout[d] <= tout[a]; }
};

EulerTimes euler_times(const RootedTd& rt) {
    int N = (int)rt.parent.size();
    EulerTimes et;
    et.tin.assign(N, 0);
    et.tout.assign(N, 0);
    int clock = 0;
    // preorder is parent-before-child, so a single forward/backward sweep works
    for (int u : rt.preorder) et.tin[u] = clock++;
    for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
        int u = *it;
        et.tout[u] = et.tin[u];
        for (int c : rt.children[u]) et.tout[u] = std::max(et.tout[u], et.tout[c]);
    }
    return et;
}

}  // namespace

std::optional<EdgeViolation> check_componental(const Graph& g, const TreeDecomposition& td,
                                               int root) {
    require_valid(g, td);
    auto rt = root_td(td, root);
    for (int c = 0; c < td.num_nodes; c++) {
        if (c == rt.root) continue;
        auto part = part_strictly_above(td, rt, c);
        if (part.empty())
            return EdgeViolation{rt.parent[c], c, "part strictly above the edge is empty"};
        auto sub = induced_subgraph(g, part);
        if (!is_connected(sub.g))
            return EdgeViolation{rt.parent[c], c, "part strictly above the edge is disconnected"};
    }
    return std::nullopt;
}

std::optional<EdgeViolation> check_tight(const Graph& g, const TreeDecomposition& td, int root) {
    require_valid(g, td);
    auto rt = root_td(td, root);
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; v++) all[v] = v;
    for (int c = 0; c < td.num_nodes; c++) {
        if (c == rt.root) continue;
        auto part = part_strictly_above(td, rt, c);
        auto adh = set_intersect(td.bags[rt.parent[c]], td.bags[c]);
        bool found = false;
        for (const auto& comp : components(g, set_minus(all, part))) {
            if (neighborhood(g, comp) == adh) {
                found = true;
                break;
            }
        }
        if (!found)
            return EdgeViolation{rt.parent[c], c,
                                 "no component above the edge sees the whole adhesion set"};
    }
    return std::nullopt;
}

namespace {

// Shared body of the two linkedness checks: scan pairs (s, t) of `pairs` in
// order, verify max-flow between the bags reaches the path bound.
std::optional<LinkViolation> scan_link_pairs(const Graph& g, const TreeDecomposition& td,
                                             const std::vector<std::pair<int, int>>& pairs,
                                             const std::vector<std::vector<int>>& bound,
                                             bool parallel) {
    auto deficient = [&](MengerSolver& solver, int s, int t) {
        int need = bound[s][t];
        if (need <= 0) return false;
        if ((int)set_intersect(td.bags[s], td.bags[t]).size() >= need) return false;
        return solver.flow_value(td.bags[s], td.bags[t], need) < need;
    };
    int found = -1;
#ifdef TDT_HAVE_OPENMP
    if (parallel) {
        std::atomic<int> best{(int)pairs.size()};
#pragma omp parallel
        {
            MengerSolver solver(g);
#pragma omp for schedule(dynamic, 8)
            for (int i = 0; i < (int)pairs.size(); i++) {
                if (i > best.load(std::memory_order_relaxed)) continue;
                if (deficient(solver, pairs[i].first, pairs[i].second)) {
                    int cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        }
        if (best.load() < (int)pairs.size()) found = best.load();
    }
#else
    (void)parallel;
#endif
    if (found < 0) {
        MengerSolver solver(g);
        for (int i = 0; i < (int)pairs.size(); i++) {
            if (deficient(solver, pairs[i].first, pairs[i].second)) {
                found = i;
                break;
            }
        }
    }
    if (found < 0) return std::nullopt;
    auto [s, t] = pairs[found];
    auto res = max_disjoint_paths(g, td.bags[s], td.bags[t]);
    LinkViolation v;
    v.s = s;
    v.t = t;
    v.required = bound[s][t];
    v.flow = res.k;
    v.X = res.sep.X;
    if (v.flow >= v.required) throw std::runtime_error("link scan disagrees with full solve");
    return v;
}

}  // namespace

std::optional<LinkViolation> check_strongly_linked(const Graph& g, const TreeDecomposition& td,
                                                   bool parallel) {
    require_valid(g, td);
    auto bound = min_adhesion_table(td);
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < td.num_nodes; s++)
        for (int t = s + 1; t < td.num_nodes; t++) pairs.push_back({s, t});
    return scan_link_pairs(g, td, pairs, bound, parallel);
}

std::optional<LinkViolation> check_linked(const Graph& g, const TreeDecomposition& td, int root) {
    require_valid(g, td);
    auto rt = root_td(td, root);
    auto et = euler_times(rt);
    auto bound = min_adhesion_table(td);
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < td.num_nodes; s++)
        for (int t = s + 1; t < td.num_nodes; t++)
            if (et.is_ancestor(s, t) || et.is_ancestor(t, s)) pairs.push_back({s, t});
    return scan_link_pairs(g, td, pairs, bound, false);
}

TreeDecomposition ray_decomposition(const Graph& g, const std::vector<int>& order) {
    if ((int)order.size() != g.n) throw std::invalid_argument("order size differs from graph size");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("order contains out-of-range vertex");
        if (seen[v]) throw std::invalid_argument("order repeats a vertex");
        seen[v] = 1;
    }
    TreeDecomposition td;
    if (g.n == 0) {
        td.num_nodes = 1;
        td.bags.push_back({});
        td.root = 0;
        return td;
    }
    td.num_nodes = g.n;
    td.bags.resize(g.n);
    std::vector<int> prefix;
    for (int i = 0; i < g.n; i++) {
        prefix.push_back(order[i]);
        std::sort(prefix.begin(), prefix.end());
        td.bags[i] = prefix;
        if (i > 0) td.edges.push_back({i - 1, i});
    }
    td.root = 0;
    return td;
}

TreeDecomposition cumulative_closure(const TreeDecomposition& td, int root) {
    auto problems = structural_violations(td);
    if (!problems.empty()) throw std::invalid_argument(problems.front());
    auto rt = root_td(td, root);
    TreeDecomposition out = td;
    out.root = rt.root;
    for (int u : rt.preorder) {
        if (u == rt.root) continue;
        out.bags[u] = set_union(out.bags[rt.parent[u]], td.bags[u]);
    }
    return out;
}

TreeDecomposition make_tight(const Graph& g, const TreeDecomposition& td, int root) {
    require_valid(g, td);
    if (auto bad = check_componental(g, td, root))
        throw std::invalid_argument("decomposition is not componental (edge " +
                                    std::to_string(bad->parent) + "-" +
                                    std::to_string(bad->child) + ": " + bad->reason + ")");
    auto rt = root_td(td, root);
    TreeDecomposition out = td;
    out.root = rt.root;
    for (int c : rt.preorder) {
        if (c == rt.root) continue;
        auto nodes = subtree_nodes(rt, c);
        auto adh = set_intersect(out.bags[rt.parent[c]], out.bags[c]);
        std::vector<int> part;
        for (int u : nodes) part = set_union(part, out.bags[u]);
        part = set_minus(part, adh);
        std::vector<int> drop;
        for (int v : adh) {
            bool touches = false;
            for (int w : g.adj[v]) {
                if (set_contains(part, w)) {
                    touches = true;
                    break;
                }
            }
            if (!touches) drop.push_back(v);
        }
        if (drop.empty()) continue;
        for (int u : nodes) out.bags[u] = set_minus(out.bags[u], drop);
    }
    return out;
}

void assert_violation_valid(const Graph& g, const TreeDecomposition& td,
                            const LeannessViolation& v) {
    auto fail = [](const std::string& what) {
        throw std::runtime_error("bad leanness violation: " + what);
    };
    if (v.s < 0 || v.t < v.s || v.t >= td.num_nodes) fail("node pair out of order or range");
    if (v.ell < 1) fail("ell must be positive");
    if ((int)v.Zs.size() != v.ell || (int)v.Zt.size() != v.ell) fail("Z sets have wrong size");
    if (sorted_unique(v.Zs) != v.Zs || sorted_unique(v.Zt) != v.Zt) fail("Z sets not sorted sets");
    if (!is_subset(v.Zs, td.bags[v.s])) fail("Zs not inside bag of s");
    if (!is_subset(v.Zt, td.bags[v.t])) fail("Zt not inside bag of t");
    if (v.s == v.t && v.Zs == v.Zt) fail("Zs equals Zt");
    if (v.s != v.t && min_adhesion_on_path(td, v.s, v.t) < v.ell)
        fail("an adhesion on the s-t path is already smaller than ell");
    if ((int)v.X.size() >= v.ell) fail("X is not smaller than ell");
    if (!is_separator(g, v.X, v.Zs, v.Zt)) fail("X does not separate Zs from Zt");
    auto res = max_disjoint_paths(g, v.Zs, v.Zt);
    if (res.k != (int)v.X.size()) fail("X is not a minimum separator");
    // sides must partition V - X with no crossing edge and cover the Z sets
    auto together = set_union(set_union(v.sideA, v.sideB), v.X);
    if ((int)together.size() != g.n ||
        (int)(v.sideA.size() + v.sideB.size() + v.X.size()) != g.n)
        fail("sides and X do not partition the vertices");
    if (!is_subset(set_minus(v.Zs, v.X), v.sideA)) fail("Zs not on side A");
    if (!is_subset(set_minus(v.Zt, v.X), v.sideB)) fail("Zt not on side B");
    for (int u : v.sideA)
        for (int w : g.adj[u])
            if (set_contains(v.sideB, w)) fail("edge crosses between the sides");
}

}  // namespace tdt
