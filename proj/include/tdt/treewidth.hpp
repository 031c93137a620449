#pragma once

#include <vector>

#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"

namespace tdt {

struct TreewidthResult {
    int width = -1;
    std::vector<int> order;  // elimination order realizing the width
    TreeDecomposition td;    // one bag per vertex, node i = i-th eliminated
};

// Exact treewidth by dynamic programming over vertex subsets (elimination
// orders). Limited to 20 vertices; memory and time grow as n * 2^n.
TreewidthResult treewidth_exact(const Graph& g);

inline constexpr int TREEWIDTH_EXACT_MAX_N = 20;

// Independent reference: tries every elimination order. Limited to 8 vertices.
int treewidth_oracle(const Graph& g);

inline constexpr int TREEWIDTH_ORACLE_MAX_N = 8;

}  // namespace tdt
