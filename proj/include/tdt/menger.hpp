#pragma once

#include <vector>

#include "tdt/graph.hpp"

namespace tdt {

struct PathFamily {
    std::vector<std::vector<int>> paths;  // each starts in A, ends in B, interior avoids A+B
    std::vector<int> A, B;
};

struct SeparatorWitness {
    std::vector<int> X;      // minimum A-B vertex separator
    std::vector<int> sideA;  // union of components of G-X meeting A\X
    std::vector<int> sideB;  // the rest of V \ X
};

struct MengerResult {
    int k = 0;  // = |fam.paths| = |sep.X|
    PathFamily fam;
    SeparatorWitness sep;
};

// Unit-vertex-capacity max-flow engine over a fixed graph, reusable across
// many (A,B) queries. Augmenting paths are found by BFS over adjacency built
// in sorted order, so results are deterministic; the reported separator is
// the residual cut closest to the source, which is unique.
class MengerSolver {
public:
    explicit MengerSolver(const Graph& g);

    // Full answer with both certificates (asserts they agree).
    MengerResult solve(const std::vector<int>& A, const std::vector<int>& B);

    // Flow value only; stops augmenting once `limit` is reached (pass
    // limit < 0 for the exact value). Much cheaper than solve().
    int flow_value(const std::vector<int>& A, const std::vector<int>& B, int limit = -1);

    const Graph& graph() const { return *g_; }

private:
    int run_flow(const std::vector<int>& A, const std::vector<int>& B, int limit);
    void reset_query();

    const Graph* g_;
    int n_ = 0, S_ = 0, T_ = 0;
    std::vector<int> to_, cap_, base_cap_;
    std::vector<std::vector<int>> out_;
    std::vector<int> base_deg_;
    std::vector<int> prev_arc_, bfs_queue_;
    std::vector<char> mark_;
};

MengerResult max_disjoint_paths(const Graph& g, const std::vector<int>& A,
                                const std::vector<int>& B);

// True iff every A-B path meets X. When false and witness != nullptr, a
// violating A-B path avoiding X is stored there.
bool is_separator(const Graph& g, const std::vector<int>& X, const std::vector<int>& A,
                  const std::vector<int>& B, std::vector<int>* witness = nullptr);

// Pre: X separates A from B (throws otherwise, message carries a violating
// path). True iff |X| equals the maximum number of disjoint A-B paths.
bool distinguishes_efficiently(const Graph& g, const std::vector<int>& X,
                               const std::vector<int>& A, const std::vector<int>& B);

}  // namespace tdt
