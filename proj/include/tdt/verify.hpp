#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdt/decomp.hpp"
#include "tdt/graph.hpp"
#include "tdt/menger.hpp"

namespace tdt {

// Witness that the lean condition fails: Z_s and Z_t are equal-size subsets
// of the bags at s and t, fewer than ell disjoint Z_s-Z_t paths exist (X is
// a smaller separator), and every adhesion on the s-t tree path has size
// >= ell, so neither disjunct of the condition holds.
struct LeannessViolation {
    int s = 0, t = 0, ell = 0;
    std::vector<int> Zs, Zt;
    std::vector<int> X;
    std::vector<int> sideA, sideB;  // component sides of X, Zs side first
};

// Witness that a bag pair has fewer connecting paths than the linkedness
// bound requires.
struct LinkViolation {
    int s = 0, t = 0;
    int required = 0;  // min adhesion size on the s-t tree path
    int flow = 0;      // achieved disjoint path count
    std::vector<int> X;
};

// Witness that the part strictly above the tree edge (parent, child) breaks
// a per-edge property.
struct EdgeViolation {
    int parent = 0, child = 0;
    std::string reason;
};

struct LeanOptions {
    int max_bag_cap = 16;        // reject inputs with bigger bags
    bool comparable_only = false;  // restrict pairs to comparable nodes
    bool parallel = true;        // use the parallel level scan when compiled in
    int root = -1;               // root override for comparable_only
};

// Exhaustive leanness check. Scans violation candidates in ascending
// separator order; the returned violation has globally minimum |X| and is
// the first under the (s, t, ell, Zs, Zt) tie-break, independent of thread
// count. Throws when a bag exceeds max_bag_cap.
std::optional<LeannessViolation> check_lean(const Graph& g, const TreeDecomposition& td,
                                            const LeanOptions& opt = {});

// Recomputes every claim a violation makes and throws if any fails.
void assert_violation_valid(const Graph& g, const TreeDecomposition& td,
                            const LeannessViolation& v);

// All unordered node pairs; first failing pair in (s,t) order.
std::optional<LinkViolation> check_strongly_linked(const Graph& g, const TreeDecomposition& td,
                                                   bool parallel = true);

// Comparable pairs of the rooted tree only.
std::optional<LinkViolation> check_linked(const Graph& g, const TreeDecomposition& td,
                                          int root = -1);

// Every part strictly above an edge must be nonempty and connected.
std::optional<EdgeViolation> check_componental(const Graph& g, const TreeDecomposition& td,
                                               int root = -1);

// Every edge needs a component strictly above it whose neighborhood is
// exactly the adhesion set.
std::optional<EdgeViolation> check_tight(const Graph& g, const TreeDecomposition& td,
                                         int root = -1);

// Path decomposition with bag i = first i+1 vertices of the order.
TreeDecomposition ray_decomposition(const Graph& g, const std::vector<int>& order);

// Same tree, bags replaced by their union along the root path. The result
// is strongly linked and satisfies bag'(s) & bag'(t) = bag'(meet(s,t)).
TreeDecomposition cumulative_closure(const TreeDecomposition& td, int root = -1);

// Shrinks adhesion sets to the neighborhood of the part strictly above each
// edge, processing edges root-to-leaf. Input must be valid and componental.
TreeDecomposition make_tight(const Graph& g, const TreeDecomposition& td, int root = -1);

}  // namespace tdt
