#pragma once

#include <vector>

#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"
#include "tdt/verify.hpp"

namespace tdt {

// One improvement against a leanness violation: the tree is doubled, one
// copy keeps the separator's Zs side of each bag, the other the Zt side,
// path contact points are patched in to restore connectivity, and a join
// edge ties the copy of t to the copy of s. Nested bags are contracted
// afterwards. Throws when any promised contract breaks (valid output,
// width does not grow, fatness strictly drops); the violation must come
// from check_lean so its separator order is globally minimum.
TreeDecomposition improve_step(const Graph& g, const TreeDecomposition& td,
                               const LeannessViolation& v);

struct TraceEntry {
    int iter = 0;
    int s = 0, t = 0, ell = 0, sep_order = 0;
    int width_before = 0, width_after = 0;
    int bags_before = 0, bags_after = 0;
    Fatness fatness_before, fatness_after;
};

struct LeanifyResult {
    TreeDecomposition td;
    std::vector<TraceEntry> trace;
    bool lean = false;  // false only when max_iters ran out
};

struct LeanifyOptions {
    int max_iters = -1;  // < 0: no limit (fatness descent terminates anyway)
    LeanOptions lean;
};

// Improves until check_lean passes. Width never increases, so starting from
// an optimal-width decomposition yields a lean one of width = treewidth.
LeanifyResult leanify_loop(const Graph& g, const TreeDecomposition& td0,
                           const LeanifyOptions& opt = {});

}  // namespace tdt
