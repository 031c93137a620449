#include "tdt/leanify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tdt/menger.hpp"

namespace tdt {

namespace {

[[noreturn]] void improvement_failed(const std::string& what, const LeannessViolation& v) {
    std::ostringstream out;
    out << "improvement failed: " << what << " (violation s=" << v.s << " t=" << v.t
        << " ell=" << v.ell << " |X|=" << v.X.size() << ")";
    throw std::runtime_error(out.str());
}

}  // namespace

TreeDecomposition improve_step(const Graph& g, const TreeDecomposition& td,
                               const LeannessViolation& v) {
    assert_violation_valid(g, td, v);

    // side and path-id lookup per vertex; X belongs to both sides
    enum : char { SIDE_A = 0, SIDE_B = 1, IN_X = 2 };
    std::vector<char> side(g.n, SIDE_A);
    for (int w : v.sideB) side[w] = SIDE_B;
    for (int w : v.X) side[w] = IN_X;

    auto res = max_disjoint_paths(g, v.Zs, v.Zt);
    if (res.k != (int)v.X.size() || res.sep.X != v.X)
        improvement_failed("path family does not match the separator witness", v);
    std::vector<int> path_id(g.n, -1), cross(res.k, -1);
    for (int i = 0; i < res.k; i++) {
        for (int w : res.fam.paths[i]) {
            path_id[w] = i;
            if (side[w] == IN_X) cross[i] = w;
        }
    }
    for (int i = 0; i < res.k; i++)
        if (cross[i] < 0) improvement_failed("a path misses the separator", v);

    int N = td.num_nodes;
    TreeDecomposition out;
    out.num_nodes = 2 * N;  // nodes u and N + u are the two copies of u
    out.bags.resize(2 * N);
    for (int u = 0; u < N; u++) {
        auto& keepA = out.bags[u];
        auto& keepB = out.bags[N + u];
        for (int w : td.bags[u]) {
            if (side[w] != SIDE_B) keepA.push_back(w);
            if (side[w] != SIDE_A) keepB.push_back(w);
            if (side[w] != IN_X && path_id[w] >= 0) {
                // w lies on path i beyond the separator: pull its crossing
                // vertex into the opposite copy
                (side[w] == SIDE_B ? keepA : keepB).push_back(cross[path_id[w]]);
            }
        }
        keepA = sorted_unique(std::move(keepA));
        keepB = sorted_unique(std::move(keepB));
        if (keepA.size() > td.bags[u].size() || keepB.size() > td.bags[u].size())
            improvement_failed("a split bag grew", v);
    }
    for (auto [a, b] : td.edges) {
        out.edges.push_back({a, b});
        out.edges.push_back({N + a, N + b});
    }
    out.edges.push_back({v.t, N + v.s});
    out.root = td.root >= 0 ? td.root : -1;

    out = cleanup_decomposition(out);

    auto problems = validate_td(g, out);
    if (!problems.empty()) improvement_failed("output invalid: " + problems.front(), v);
    if (width(out) > width(td)) improvement_failed("width grew", v);
    if (!fatness_less(fatness(out, g.n), fatness(td, g.n)))
        improvement_failed("fatness did not drop", v);
    return out;
}

LeanifyResult leanify_loop(const Graph& g, const TreeDecomposition& td0,
                           const LeanifyOptions& opt) {
    {
        auto problems = validate_td(g, td0);
        if (!problems.empty()) throw std::invalid_argument(problems.front());
    }
    LeanifyResult res;
    res.td = td0;
    for (int iter = 0;; iter++) {
        if (opt.max_iters >= 0 && iter >= opt.max_iters) {
            if (!check_lean(g, res.td, opt.lean)) res.lean = true;
            return res;
        }
        auto violation = check_lean(g, res.td, opt.lean);
        if (!violation) {
            res.lean = true;
            return res;
        }
        TraceEntry e;
        e.iter = iter;
        e.s = violation->s;
        e.t = violation->t;
        e.ell = violation->ell;
        e.sep_order = (int)violation->X.size();
        e.width_before = width(res.td);
        e.bags_before = res.td.num_nodes;
        e.fatness_before = fatness(res.td, g.n);
        res.td = improve_step(g, res.td, *violation);
        e.width_after = width(res.td);
        e.bags_after = res.td.num_nodes;
        e.fatness_after = fatness(res.td, g.n);
        res.trace.push_back(std::move(e));
    }
}

}  // namespace tdt
