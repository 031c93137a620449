#include "tdt/decomp.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tdt {

const int NO_EDGE_ON_PATH = INT_MAX;

std::vector<std::vector<int>> tree_adj(const TreeDecomposition& td) {
    std::vector<std::vector<int>> adj(td.num_nodes);
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<std::string> structural_violations(const TreeDecomposition& td) {
    std::vector<std::string> out;
    if (td.num_nodes <= 0) {
        out.push_back("structure: decomposition has no nodes");
        return out;
    }
    if ((int)td.bags.size() != td.num_nodes) {
        out.push_back("structure: bag count differs from node count");
        return out;
    }
    for (auto [a, b] : td.edges)
        if (a < 0 || a >= td.num_nodes || b < 0 || b >= td.num_nodes || a == b) {
            out.push_back("structure: bad tree edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
            return out;
        }
    if ((int)td.edges.size() != td.num_nodes - 1) {
        out.push_back("structure: tree must have exactly " + std::to_string(td.num_nodes - 1) +
                      " edges, has " + std::to_string(td.edges.size()));
        return out;
    }
    auto adj = tree_adj(td);
    std::vector<char> seen(td.num_nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        reached++;
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    if (reached != td.num_nodes) out.push_back("structure: tree is disconnected");
    return out;  // edge count + connected implies acyclic
}

std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td) {
    auto out = structural_violations(td);
    if (!out.empty()) return out;
    std::vector<int> home(g.n, -1);
    for (int t = 0; t < td.num_nodes; t++)
        for (int v : td.bags[t]) {
            if (v < 0 || v >= g.n) {
                out.push_back("bag " + std::to_string(t) + " references unknown vertex " +
                              std::to_string(v));
                return out;
            }
            home[v] = t;
        }
    for (int v = 0; v < g.n; v++)
        if (home[v] < 0) out.push_back("vertex " + std::to_string(v) + " is in no bag");
    for (int u = 0; u < g.n; u++)
        for (int v : g.adj[u]) {
            if (u > v) continue;
            bool covered = false;
            for (int t = 0; t < td.num_nodes && !covered; t++)
                covered = set_contains(td.bags[t], u) && set_contains(td.bags[t], v);
            if (!covered)
                out.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} is in no bag");
        }
    // subtree connectivity: for each vertex, the nodes holding it must form
    // one connected piece of the tree
    auto adj = tree_adj(td);
    for (int v = 0; v < g.n; v++) {
        if (home[v] < 0) continue;
        std::vector<char> seen(td.num_nodes, 0);
        std::vector<int> stack{home[v]};
        seen[home[v]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            reached++;
            for (int w : adj[u])
                if (!seen[w] && set_contains(td.bags[w], v)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        int holding = 0;
        for (int t = 0; t < td.num_nodes; t++) holding += set_contains(td.bags[t], v);
        if (reached != holding) {
            std::ostringstream msg;
            msg << "vertex " << v << " appears at disconnected nodes:";
            for (int t = 0; t < td.num_nodes; t++)
                if (set_contains(td.bags[t], v) && !seen[t]) msg << " " << t;
            out.push_back(msg.str());
        }
    }
    return out;
}

int width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& b : td.bags) w = std::max(w, (int)b.size() - 1);
    return w;
}

std::vector<int> adhesion(const TreeDecomposition& td, int edge_index) {
    if (edge_index < 0 || edge_index >= (int)td.edges.size())
        throw std::invalid_argument("unknown tree edge " + std::to_string(edge_index));
    auto [a, b] = td.edges[edge_index];
    return set_intersect(td.bags[a], td.bags[b]);
}

EdgeSeparation edge_separation(const Graph& g, const TreeDecomposition& td, int edge_index) {
    auto bad = validate_td(g, td);
    if (!bad.empty()) throw std::invalid_argument("invalid decomposition: " + bad.front());
    if (edge_index < 0 || edge_index >= (int)td.edges.size())
        throw std::invalid_argument("unknown tree edge " + std::to_string(edge_index));
    auto adj = tree_adj(td);
    auto [a, b] = td.edges[edge_index];
    // collect nodes on a's side of the removed edge
    std::vector<char> onA(td.num_nodes, 0);
    std::vector<int> stack{a};
    onA[a] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if ((u == a && v == b) || (u == b && v == a)) continue;
            if (!onA[v]) {
                onA[v] = 1;
                stack.push_back(v);
            }
        }
    }
    EdgeSeparation sep;
    for (int t = 0; t < td.num_nodes; t++) {
        auto& side = onA[t] ? sep.sideA : sep.sideB;
        side = set_union(side, td.bags[t]);
    }
    sep.intersection = set_intersect(sep.sideA, sep.sideB);
    return sep;
}

std::vector<int> tree_path(const TreeDecomposition& td, int s, int t) {
    if (s < 0 || s >= td.num_nodes || t < 0 || t >= td.num_nodes)
        throw std::invalid_argument("tree node out of range");
    auto adj = tree_adj(td);
    std::vector<int> par(td.num_nodes, -1);
    std::vector<int> queue{s};
    par[s] = s;
    for (size_t qi = 0; qi < queue.size(); qi++) {
        int u = queue[qi];
        if (u == t) break;
        for (int v : adj[u])
            if (par[v] < 0) {
                par[v] = u;
                queue.push_back(v);
            }
    }
    std::vector<int> path;
    for (int v = t;; v = par[v]) {
        path.push_back(v);
        if (v == s) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int min_adhesion_on_path(const TreeDecomposition& td, int s, int t) {
    if (s == t) return NO_EDGE_ON_PATH;
    auto path = tree_path(td, s, t);
    int best = NO_EDGE_ON_PATH;
    for (size_t i = 0; i + 1 < path.size(); i++) {
        int size = (int)set_intersect(td.bags[path[i]], td.bags[path[i + 1]]).size();
        best = std::min(best, size);
    }
    return best;
}

std::vector<std::vector<int>> min_adhesion_table(const TreeDecomposition& td) {
    int N = td.num_nodes;
    auto adj = tree_adj(td);
    // per-neighbor adhesion sizes, aligned with adj
    std::vector<std::vector<int>> asize(N);
    for (int u = 0; u < N; u++) {
        asize[u].reserve(adj[u].size());
        for (int v : adj[u])
            asize[u].push_back((int)set_intersect(td.bags[u], td.bags[v]).size());
    }
    std::vector<std::vector<int>> table(N, std::vector<int>(N, NO_EDGE_ON_PATH));
    std::vector<int> queue;
    for (int s = 0; s < N; s++) {
        auto& row = table[s];
        std::vector<char> seen(N, 0);
        seen[s] = 1;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); head++) {
            int u = queue[head];
            int here = u == s ? NO_EDGE_ON_PATH : row[u];
            for (size_t i = 0; i < adj[u].size(); i++) {
                int v = adj[u][i];
                if (seen[v]) continue;
                seen[v] = 1;
                row[v] = std::min(here, asize[u][i]);
                queue.push_back(v);
            }
        }
    }
    return table;
}

RootedTd root_td(const TreeDecomposition& td, int root_override) {
    int root = root_override >= 0 ? root_override : (td.root >= 0 ? td.root : 0);
    if (root >= td.num_nodes) throw std::invalid_argument("root node out of range");
    RootedTd rt;
    rt.root = root;
    rt.parent.assign(td.num_nodes, -1);
    rt.children.assign(td.num_nodes, {});
    auto adj = tree_adj(td);
    rt.preorder.push_back(root);
    std::vector<char> seen(td.num_nodes, 0);
    seen[root] = 1;
    for (size_t qi = 0; qi < rt.preorder.size(); qi++) {
        int u = rt.preorder[qi];
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                rt.parent[v] = u;
                rt.children[u].push_back(v);
                rt.preorder.push_back(v);
            }
    }
    return rt;
}

std::vector<int> part_above(const TreeDecomposition& td, const RootedTd& rt, int child) {
    if (child < 0 || child >= td.num_nodes || rt.parent[child] < 0)
        throw std::invalid_argument("part_above needs a non-root node");
    std::vector<int> part;
    std::vector<int> stack{child};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        part = set_union(part, td.bags[u]);
        for (int v : rt.children[u]) stack.push_back(v);
    }
    return part;
}

std::vector<int> part_strictly_above(const TreeDecomposition& td, const RootedTd& rt, int child) {
    auto part = part_above(td, rt, child);
    auto adh = set_intersect(td.bags[child], td.bags[rt.parent[child]]);
    return set_minus(part, adh);
}

TreeDecomposition cleanup_decomposition(const TreeDecomposition& td) {
    {
        auto problems = structural_violations(td);
        if (!problems.empty()) throw std::invalid_argument(problems.front());
    }
    int N = td.num_nodes;
    std::vector<char> alive(N, 1);
    std::vector<std::vector<int>> bags = td.bags;
    auto adj = tree_adj(td);
    for (auto& a : adj) a = sorted_unique(std::move(a));
    int root = td.root;

    // first nesting edge in (min id, max id) order, contract, rescan
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < N && !changed; a++) {
            if (!alive[a]) continue;
            for (int b : adj[a]) {
                if (b < a || !alive[b]) continue;
                int dead, kept;
                if (bags[a] == bags[b]) {
                    dead = b;
                    kept = a;
                } else if (is_subset(bags[a], bags[b])) {
                    dead = a;
                    kept = b;
                } else if (is_subset(bags[b], bags[a])) {
                    dead = b;
                    kept = a;
                } else {
                    continue;
                }
                alive[dead] = 0;
                for (int w : adj[dead]) {
                    if (w == kept) continue;
                    adj[w] = set_union(adj[w], {kept});
                    adj[w] = set_minus(adj[w], {dead});
                    adj[kept] = set_union(adj[kept], {w});
                }
                adj[kept] = set_minus(adj[kept], {dead});
                if (root == dead) root = kept;
                changed = true;
                break;
            }
        }
    }

    std::vector<int> new_id(N, -1);
    TreeDecomposition out;
    for (int u = 0; u < N; u++) {
        if (!alive[u]) continue;
        new_id[u] = out.num_nodes++;
        out.bags.push_back(bags[u]);
    }
    for (int u = 0; u < N; u++) {
        if (!alive[u]) continue;
        for (int w : adj[u])
            if (u < w) out.edges.push_back({new_id[u], new_id[w]});
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (root >= 0) out.root = new_id[root];
    return out;
}

Fatness fatness(const TreeDecomposition& td, int host_n) {
    Fatness f;
    f.host_n = host_n;
    f.count.assign(host_n, 0);
    for (const auto& b : td.bags) {
        if ((int)b.size() > host_n) throw std::invalid_argument("bag larger than host graph");
        if (!b.empty()) f.count[b.size() - 1]++;
    }
    return f;
}

bool fatness_less(const Fatness& a, const Fatness& b) {
    if (a.host_n != b.host_n)
        throw std::invalid_argument("fatness vectors over different host sizes");
    for (int h = a.host_n; h >= 1; h--) {
        if (a.count[h - 1] != b.count[h - 1]) return a.count[h - 1] < b.count[h - 1];
    }
    return false;
}

std::string fatness_to_string(const Fatness& f) {
    std::ostringstream out;
    out << "(";
    for (int h = f.host_n; h >= 1; h--) {
        if (h != f.host_n) out << ",";
        out << f.count[h - 1];
    }
    out << ")";
    return out.str();
}

}  // namespace tdt
