#pragma once

#include <utility>
#include <vector>

#include "tdt/graph.hpp"

namespace tdt {

// Tree plus one bag of graph vertices per node. Nodes are 0..num_nodes-1;
// a decomposition with k nodes has k-1 tree edges. root < 0 means unrooted.
struct TreeDecomposition {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> bags;  // sorted vertex sets
    int root = -1;
};

// Node adjacency lists of the tree.
std::vector<std::vector<int>> tree_adj(const TreeDecomposition& td);

// Empty result means the tree is connected and acyclic with consistent sizes.
std::vector<std::string> structural_violations(const TreeDecomposition& td);

// Empty result means td is a valid tree-decomposition of g: every vertex
// covered, every edge inside some bag, every vertex's bag set a subtree.
// Structural problems are reported first and stop the axiom checks.
std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);  // max bag size - 1

std::vector<int> adhesion(const TreeDecomposition& td, int edge_index);

struct EdgeSeparation {
    std::vector<int> sideA, sideB;  // bag unions of the two tree components
    std::vector<int> intersection;  // = adhesion of the edge
};

EdgeSeparation edge_separation(const Graph& g, const TreeDecomposition& td, int edge_index);

// Node path from s to t, inclusive.
std::vector<int> tree_path(const TreeDecomposition& td, int s, int t);

// Minimum adhesion size over the edges of the s-t tree path; the sentinel
// NO_EDGE_ON_PATH (INT_MAX) for s == t.
extern const int NO_EDGE_ON_PATH;
int min_adhesion_on_path(const TreeDecomposition& td, int s, int t);

// All-pairs variant; diagonal entries are NO_EDGE_ON_PATH.
std::vector<std::vector<int>> min_adhesion_table(const TreeDecomposition& td);

// Rooted view: parents, children and a preorder; root defaults to node 0
// when the decomposition carries none.
struct RootedTd {
    int root = 0;
    std::vector<int> parent;                 // -1 at root
    std::vector<std::vector<int>> children;  // sorted
    std::vector<int> preorder;
};

RootedTd root_td(const TreeDecomposition& td, int root_override = -1);

// Union of the bags strictly on the non-root side of the edge (parent, child),
// with (part_above) and without (part_strictly_above) the adhesion set.
std::vector<int> part_above(const TreeDecomposition& td, const RootedTd& rt, int child);
std::vector<int> part_strictly_above(const TreeDecomposition& td, const RootedTd& rt, int child);

// Repeatedly contracts a tree edge whose bags nest (the subset-bag node
// merges into the other) until no such edge remains; empty bags disappear
// unless a single node is all that is left. Node ids are compacted, keeping
// their relative order. Width and fatness never increase.
TreeDecomposition cleanup_decomposition(const TreeDecomposition& td);

// Count vector a_h = number of bags of size h, h = host_n..1, compared
// lexicographically from the largest size down. Host size is pinned so
// vectors stay comparable while trees grow.
struct Fatness {
    int host_n = 0;
    std::vector<long long> count;  // count[h-1] = #bags of size h
};

Fatness fatness(const TreeDecomposition& td, int host_n);
bool fatness_less(const Fatness& a, const Fatness& b);  // strict
std::string fatness_to_string(const Fatness& f);

}  // namespace tdt
