#include "tdt/menger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdt {

namespace {

constexpr int INF_CAP = 1 << 29;

void check_query_set(const Graph& g, const std::vector<int>& s, const char* name) {
    if (s.empty()) throw std::invalid_argument(std::string(name) + " must be nonempty");
    for (int v : s)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument(std::string(name) + " contains out-of-range vertex " +
                                        std::to_string(v));
}

}  // namespace

MengerSolver::MengerSolver(const Graph& g) : g_(&g) {
    n_ = g.n;
    S_ = 2 * n_;
    T_ = 2 * n_ + 1;
    out_.assign(2 * n_ + 2, {});
    auto add_arc = [&](int u, int v, int c) {
        out_[u].push_back((int)to_.size());
        to_.push_back(v);
        cap_.push_back(c);
        out_[v].push_back((int)to_.size());
        to_.push_back(u);
        cap_.push_back(0);
    };
    for (int v = 0; v < n_; v++) add_arc(2 * v, 2 * v + 1, 1);  // v_in -> v_out
    for (int u = 0; u < n_; u++)
        for (int v : g.adj[u]) add_arc(2 * u + 1, 2 * v, INF_CAP);  // u_out -> v_in
    base_cap_ = cap_;
    base_deg_.resize(out_.size());
    for (size_t i = 0; i < out_.size(); i++) base_deg_[i] = (int)out_[i].size();
    prev_arc_.resize(out_.size());
    bfs_queue_.reserve(out_.size());
    mark_.resize(out_.size());
}

void MengerSolver::reset_query() {
    to_.resize(base_cap_.size());
    cap_ = base_cap_;
    for (size_t i = 0; i < out_.size(); i++) out_[i].resize(base_deg_[i]);
}

int MengerSolver::run_flow(const std::vector<int>& A, const std::vector<int>& B, int limit) {
    check_query_set(*g_, A, "A");
    check_query_set(*g_, B, "B");
    reset_query();
    auto add_arc = [&](int u, int v, int c) {
        out_[u].push_back((int)to_.size());
        to_.push_back(v);
        cap_.push_back(c);
        out_[v].push_back((int)to_.size());
        to_.push_back(u);
        cap_.push_back(0);
    };
    for (int a : A) add_arc(S_, 2 * a, INF_CAP);
    for (int b : B) add_arc(2 * b + 1, T_, INF_CAP);

    int flow = 0;
    while (limit < 0 || flow < limit) {
        // BFS for a shortest augmenting path
        std::fill(mark_.begin(), mark_.end(), 0);
        bfs_queue_.clear();
        bfs_queue_.push_back(S_);
        mark_[S_] = 1;
        bool reached = false;
        for (size_t qi = 0; qi < bfs_queue_.size() && !reached; qi++) {
            int u = bfs_queue_[qi];
            for (int e : out_[u]) {
                int v = to_[e];
                if (cap_[e] <= 0 || mark_[v]) continue;
                mark_[v] = 1;
                prev_arc_[v] = e;
                if (v == T_) {
                    reached = true;
                    break;
                }
                bfs_queue_.push_back(v);
            }
        }
        if (!reached) break;
        for (int v = T_; v != S_;) {
            int e = prev_arc_[v];
            cap_[e]--;
            cap_[e ^ 1]++;
            v = to_[e ^ 1];
        }
        flow++;
    }
    return flow;
}

int MengerSolver::flow_value(const std::vector<int>& A, const std::vector<int>& B, int limit) {
    return run_flow(A, B, limit);
}

MengerResult MengerSolver::solve(const std::vector<int>& A, const std::vector<int>& B) {
    MengerResult r;
    r.fam.A = sorted_unique(A);
    r.fam.B = sorted_unique(B);
    r.k = run_flow(r.fam.A, r.fam.B, -1);

    // Separator: vertices whose in-node is residual-reachable from the source
    // while their out-node is not. This is the source-side minimum cut.
    std::fill(mark_.begin(), mark_.end(), 0);
    bfs_queue_.clear();
    bfs_queue_.push_back(S_);
    mark_[S_] = 1;
    for (size_t qi = 0; qi < bfs_queue_.size(); qi++) {
        int u = bfs_queue_[qi];
        for (int e : out_[u]) {
            int v = to_[e];
            if (cap_[e] <= 0 || mark_[v]) continue;
            mark_[v] = 1;
            bfs_queue_.push_back(v);
        }
    }
    auto& X = r.sep.X;
    for (int v = 0; v < n_; v++)
        if (mark_[2 * v] && !mark_[2 * v + 1]) X.push_back(v);
    if ((int)X.size() != r.k) throw std::runtime_error("flow/cut mismatch");

    // Path decomposition: walk positive net flow from each saturated source arc.
    std::vector<int> net(cap_.size());
    for (size_t e = 0; e < cap_.size(); e += 2) {
        int base = e < base_cap_.size() ? base_cap_[e] : INF_CAP;
        net[e] = base - cap_[e];  // positive = forward flow
    }
    for (int a : r.fam.A) {
        // find the query arc S -> a_in and check it carries flow
        int carried = 0;
        for (int e : out_[S_])
            if (to_[e] == 2 * a && (e & 1) == 0) carried = net[e];
        if (carried <= 0) continue;
        std::vector<int> path;
        int u = 2 * a;
        while (u != T_) {
            if ((u & 1) == 0) path.push_back(u / 2);  // at v_in: record vertex
            bool stepped = false;
            for (int e : out_[u]) {
                if ((e & 1) != 0 || net[e] <= 0) continue;
                net[e]--;
                u = to_[e];
                stepped = true;
                break;
            }
            if (!stepped) throw std::runtime_error("flow decomposition stuck");
        }
        // trim to a proper A-B path: cut at the first B vertex, then start at
        // the last A vertex before it
        size_t j = 0;
        while (!set_contains(r.fam.B, path[j])) j++;
        size_t i = j;
        while (!set_contains(r.fam.A, path[i])) i--;
        r.fam.paths.emplace_back(path.begin() + i, path.begin() + j + 1);
    }
    if ((int)r.fam.paths.size() != r.k) throw std::runtime_error("path count mismatch");

    // side assignment by components of G - X
    std::vector<char> used(n_, 0), inX(n_, 0);
    for (int v : X) inX[v] = 1;
    std::vector<int> sideA;
    for (int a : r.fam.A)
        if (!inX[a] && !used[a]) {
            auto comp = component_of(*g_, a, std::vector<char>(inX.begin(), inX.end()));
            for (int v : comp) {
                used[v] = 1;
                sideA.push_back(v);
            }
        }
    std::sort(sideA.begin(), sideA.end());
    r.sep.sideA = sideA;
    for (int v = 0; v < n_; v++)
        if (!inX[v] && !used[v]) r.sep.sideB.push_back(v);

    // certificate cross-checks
    for (int b : r.fam.B)
        if (!inX[b] && !set_contains(r.sep.sideB, b))
            throw std::runtime_error("separator witness leaks a B vertex");
    for (const auto& p : r.fam.paths) {
        int hits = 0;
        for (int v : p) hits += inX[v];
        if (hits != 1) throw std::runtime_error("path does not cross the separator exactly once");
    }
    return r;
}

MengerResult max_disjoint_paths(const Graph& g, const std::vector<int>& A,
                                const std::vector<int>& B) {
    MengerSolver solver(g);
    return solver.solve(A, B);
}

bool is_separator(const Graph& g, const std::vector<int>& X, const std::vector<int>& A,
                  const std::vector<int>& B, std::vector<int>* witness) {
    auto As = sorted_unique(A);
    auto Bs = sorted_unique(B);
    auto Xs = sorted_unique(X);
    check_query_set(g, As, "A");
    check_query_set(g, Bs, "B");
    // a shared vertex outside X is itself an uncut A-B path
    for (int v : set_intersect(As, Bs))
        if (!set_contains(Xs, v)) {
            if (witness) *witness = {v};
            return false;
        }
    std::vector<char> blocked(g.n, 0);
    for (int v : Xs) blocked[v] = 1;
    std::vector<int> par(g.n, -1);
    std::vector<int> queue;
    for (int a : As)
        if (!blocked[a]) {
            blocked[a] = 1;
            par[a] = a;
            queue.push_back(a);
        }
    for (size_t qi = 0; qi < queue.size(); qi++) {
        int u = queue[qi];
        if (set_contains(Bs, u)) {
            if (witness) {
                std::vector<int> path;
                for (int v = u;; v = par[v]) {
                    path.push_back(v);
                    if (par[v] == v) break;
                }
                std::reverse(path.begin(), path.end());
                size_t j = 0;
                while (!set_contains(Bs, path[j])) j++;
                size_t i = j;
                while (!set_contains(As, path[i])) i--;
                witness->assign(path.begin() + i, path.begin() + j + 1);
            }
            return false;
        }
        for (int v : g.adj[u])
            if (!blocked[v]) {
                blocked[v] = 1;
                par[v] = u;
                queue.push_back(v);
            }
    }
    return true;
}

bool distinguishes_efficiently(const Graph& g, const std::vector<int>& X,
                               const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> witness;
    if (!is_separator(g, X, A, B, &witness)) {
        std::ostringstream msg;
        msg << "X is not an A-B separator; uncut path:";
        for (int v : witness) msg << " " << v;
        throw std::invalid_argument(msg.str());
    }
    MengerSolver solver(g);
    return solver.flow_value(A, B) == (int)sorted_unique(X).size();
}

}  // namespace tdt
