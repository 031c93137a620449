#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "tdt/verify.hpp"

#ifdef TDT_HAVE_OPENMP
#include <atomic>
#include <omp.h>
#endif

// Leanness scan. Candidate violations are ordered by separator size: a
// violation at level ell whose separator has k < ell - 1 vertices yields one
// at level k + 1 on the same node pair by shrinking the Z sets, so scanning
// ell = 1, 2, ... and stopping at the first hit returns a violation with
// globally minimum |X|, and its flow is exactly ell - 1. Within a level the
// scan order (s, t, Zs, Zt) matches the documented tie-break.

namespace tdt {

namespace {

struct ScanPair {
    int s, t;
    int max_ell;
};

// positions idx (size k, ascending) step through C(n, k) in lexicographic
// order; bags are sorted, so subset order equals vertex-set order
bool next_combination(std::vector<int>& idx, int n) {
    int k = (int)idx.size();
    for (int i = k - 1; i >= 0; i--) {
        if (idx[i] < n - k + i) {
            idx[i]++;
            for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void gather(const std::vector<int>& bag, const std::vector<int>& idx, std::vector<int>& out) {
    out.clear();
    for (int i : idx) out.push_back(bag[i]);
}

struct PairHit {
    std::vector<int> Zs, Zt;
};

// lexicographically first (Zs, Zt) with fewer than ell disjoint paths;
// on the diagonal only Zs < Zt is scanned
std::optional<PairHit> scan_pair(MengerSolver& solver, const std::vector<int>& bs,
                                 const std::vector<int>& bt, int ell, bool diagonal) {
    int ns = (int)bs.size(), nt = (int)bt.size();
    std::vector<int> is(ell), it(ell), Zs, Zt;
    for (int i = 0; i < ell; i++) is[i] = i;
    do {
        gather(bs, is, Zs);
        if (diagonal) {
            it = is;
            if (!next_combination(it, nt)) continue;
        } else {
            for (int i = 0; i < ell; i++) it[i] = i;
        }
        do {
            gather(bt, it, Zt);
            if (Zs == Zt) continue;  // ell disjoint one-vertex paths, never a hit
            if (solver.flow_value(Zs, Zt, ell) < ell) return PairHit{Zs, Zt};
        } while (next_combination(it, nt));
    } while (next_combination(is, ns));
    return std::nullopt;
}

// index of the first pair with a hit at this level, plus the hit, serial order
std::optional<std::pair<int, PairHit>> scan_level_serial(MengerSolver& solver,
                                                         const TreeDecomposition& td,
                                                         const std::vector<ScanPair>& pairs,
                                                         int ell) {
    for (int i = 0; i < (int)pairs.size(); i++) {
        if (pairs[i].max_ell < ell) continue;
        auto hit = scan_pair(solver, td.bags[pairs[i].s], td.bags[pairs[i].t], ell,
                             pairs[i].s == pairs[i].t);
        if (hit) return std::make_pair(i, std::move(*hit));
    }
    return std::nullopt;
}

#ifdef TDT_HAVE_OPENMP
// same result as scan_level_serial: pairs after the best hit so far may be
// skipped, pairs before it are always finished
std::optional<std::pair<int, PairHit>> scan_level_parallel(const Graph& g,
                                                           const TreeDecomposition& td,
                                                           const std::vector<ScanPair>& pairs,
                                                           int ell) {
    int P = (int)pairs.size();
    std::vector<std::optional<PairHit>> hits(P);
    std::atomic<int> best{P};
#pragma omp parallel
    {
        MengerSolver solver(g);
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i < P; i++) {
            if (pairs[i].max_ell < ell) continue;
            if (i > best.load(std::memory_order_relaxed)) continue;
            auto hit = scan_pair(solver, td.bags[pairs[i].s], td.bags[pairs[i].t], ell,
                                 pairs[i].s == pairs[i].t);
            if (hit) {
                hits[i] = std::move(hit);
                int cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    }
    int i = best.load();
    if (i >= P) return std::nullopt;
    if (!hits[i]) throw std::runtime_error("lean scan lost its winning pair");
    return std::make_pair(i, std::move(*hits[i]));
}
#endif

}  // namespace

std::optional<LeannessViolation> check_lean(const Graph& g, const TreeDecomposition& td,
                                            const LeanOptions& opt) {
    {
        auto problems = validate_td(g, td);
        if (!problems.empty()) throw std::invalid_argument(problems.front());
    }
    for (int u = 0; u < td.num_nodes; u++) {
        if ((int)td.bags[u].size() > opt.max_bag_cap)
            throw std::invalid_argument(
                "bag " + std::to_string(u) + " has " + std::to_string(td.bags[u].size()) +
                " vertices, over the scan scale limit of " + std::to_string(opt.max_bag_cap));
    }

    auto adh = min_adhesion_table(td);
    std::vector<char> comparable;
    if (opt.comparable_only) {
        auto rt = root_td(td, opt.root);
        // mark[u * N + v]: u is an ancestor of v
        comparable.assign((size_t)td.num_nodes * td.num_nodes, 0);
        for (int u : rt.preorder) {
            int p = rt.parent[u];
            if (p >= 0)
                for (int a = 0; a < td.num_nodes; a++)
                    comparable[(size_t)a * td.num_nodes + u] =
                        comparable[(size_t)a * td.num_nodes + p];
            comparable[(size_t)u * td.num_nodes + u] = 1;
        }
    }

    std::vector<ScanPair> pairs;
    int top = 0;
    for (int s = 0; s < td.num_nodes; s++) {
        for (int t = s; t < td.num_nodes; t++) {
            if (opt.comparable_only && !comparable[(size_t)s * td.num_nodes + t] &&
                !comparable[(size_t)t * td.num_nodes + s])
                continue;
            int cap;
            if (s == t) {
                cap = (int)td.bags[s].size();
            } else {
                cap = std::min((int)td.bags[s].size(), (int)td.bags[t].size());
                cap = std::min(cap, adh[s][t]);
            }
            if (cap < 1) continue;
            pairs.push_back({s, t, cap});
            top = std::max(top, cap);
        }
    }

    MengerSolver serial_solver(g);
    for (int ell = 1; ell <= top; ell++) {
        std::optional<std::pair<int, PairHit>> hit;
#ifdef TDT_HAVE_OPENMP
        if (opt.parallel)
            hit = scan_level_parallel(g, td, pairs, ell);
        else
            hit = scan_level_serial(serial_solver, td, pairs, ell);
#else
        hit = scan_level_serial(serial_solver, td, pairs, ell);
#endif
        if (!hit) continue;

        const auto& pr = pairs[hit->first];
        LeannessViolation v;
        v.s = pr.s;
        v.t = pr.t;
        v.ell = ell;
        v.Zs = std::move(hit->second.Zs);
        v.Zt = std::move(hit->second.Zt);
        auto res = max_disjoint_paths(g, v.Zs, v.Zt);
        if (res.k != ell - 1)
            throw std::runtime_error("lean scan flow disagrees with full solve");
        v.X = res.sep.X;
        v.sideA = res.sep.sideA;
        v.sideB = res.sep.sideB;
        assert_violation_valid(g, td, v);
        return v;
    }
    return std::nullopt;
}

}  // namespace tdt
