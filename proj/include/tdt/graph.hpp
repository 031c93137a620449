#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tdt {

// Finite simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted and duplicate-free so every traversal is deterministic.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;  // empty, or one distinct label per vertex

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    int num_edges() const;
    bool has_edge(int u, int v) const;
    bool has_labels() const { return !labels.empty(); }
};

// Builds a graph from an edge list. Rejects out-of-range ids and self-loops;
// duplicate edges collapse.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Internal helper for incremental construction (same checks as build_graph).
void add_edge(Graph& g, int u, int v);

// Sorts/dedupes all neighbor lists; call once after a batch of add_edge.
void finish_edges(Graph& g);

// Checks adjacency symmetry, sortedness and loop-freeness; throws on failure.
void assert_well_formed(const Graph& g);

// Connected components of G - deleted, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& deleted);

// Component of G - deleted containing start (empty if start is deleted).
std::vector<int> component_of(const Graph& g, int start, const std::vector<char>& deleted);

bool is_connected(const Graph& g);

// N(S) \ S, sorted.
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& S);

struct InducedSubgraph {
    Graph g;
    std::vector<int> old_id;           // new id -> old id
    std::vector<int> new_id;           // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Sorted-set helpers used across the toolkit. All inputs must be sorted.
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& a, int v);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_unique(std::vector<int> v);

}  // namespace tdt
