#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tdt/graph.hpp"

namespace tdt {

// Finite truncation of the layered planar witness graph: a binary-subdivision
// layer graph on levels 0..levels, a strong-product grid per region with
// 3*2^n + 2 rows and `cols` columns, and a planar crossing gadget per region
// routing one track per boundary vertex into the grid rows.
struct PlanarWitnessConfig {
    int levels = 5;  // layer index J; levels 0..J exist
    int grids = 2;   // regions 0..grids carry grids and gadgets
    int cols = 12;   // grid truncation width
};

// Three-row grid of width+1 columns with the triangular vertex sets U_m
// turned into cliques.
struct CliqueRowsConfig {
    int width = 8;  // columns 0..width
};

// Tree of 3x(len+1) strips indexed by sequences over {1..branch} of length
// at most depth; each child strip attaches to two consecutive row-3 vertices
// of its parent.
struct SeqTreeConfig {
    int depth = 2;
    int branch = 2;
    int len = 6;
};

// Named vertex sets of a generated graph, in a fixed emission order.
struct LandmarkAtlas {
    std::vector<std::pair<std::string, std::vector<int>>> sets;

    void add(std::string name, std::vector<int> ids);
    bool has(const std::string& name) const;
    const std::vector<int>& at(const std::string& name) const;  // throws if absent
};

// One line per landmark: "<name>\t<space-separated 1-based ids>".
std::string write_atlas(const LandmarkAtlas& atlas);
LandmarkAtlas parse_atlas(const std::string& text);

std::pair<Graph, LandmarkAtlas> gen_planar_witness(const PlanarWitnessConfig& cfg);
std::pair<Graph, LandmarkAtlas> gen_clique_rows(const CliqueRowsConfig& cfg);
std::pair<Graph, LandmarkAtlas> gen_seq_tree(const SeqTreeConfig& cfg);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_clique(int n);
Graph gen_grid(int rows, int cols);
Graph gen_random(int n, double p, uint64_t seed);

}  // namespace tdt
