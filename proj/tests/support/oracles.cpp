#include "support/oracles.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "tdt/menger.hpp"
#include "tdt/zoo.hpp"

namespace tdt_test {

using tdt::Graph;
using tdt::TreeDecomposition;

namespace {

// ---- path packing ----

struct PathMask {
    uint32_t verts = 0;
    int len = 0;
};

void list_paths(const Graph& g, uint32_t in_A, uint32_t in_B, int last, uint32_t used,
                std::vector<PathMask>& out) {
    for (int w : g.adj[last]) {
        uint32_t bit = 1u << w;
        if (used & bit) continue;
        if (in_B & bit) out.push_back({used | bit, __builtin_popcount(used) + 1});
        if (!(in_A & bit) && !(in_B & bit))
            list_paths(g, in_A, in_B, w, used | bit, out);
    }
}

int pack(const std::vector<PathMask>& paths, size_t i, uint32_t used, int have, int cap) {
    if (have == cap) return have;
    int best = have;
    for (; i < paths.size(); ++i) {
        if (paths[i].verts & used) continue;
        int got = pack(paths, i + 1, used | paths[i].verts, have + 1, cap);
        if (got > best) best = got;
        if (best == cap) return best;
    }
    return best;
}

// ---- leanness ----

// First k-subset of 0..m-1 as index vector; lex successor in place.
bool next_combination(std::vector<int>& idx, int m) {
    int k = (int)idx.size();
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < m - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& bag, int k) {
    std::vector<std::vector<int>> out;
    if (k > (int)bag.size()) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<int> z(k);
        for (int i = 0; i < k; ++i) z[i] = bag[idx[i]];
        out.push_back(std::move(z));
    } while (next_combination(idx, (int)bag.size()));
    return out;
}

std::vector<std::vector<int>> bfs_tree(const TreeDecomposition& td) {
    std::vector<std::vector<int>> adj(td.num_nodes);
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<int> node_path(const std::vector<std::vector<int>>& adj, int s, int t) {
    std::vector<int> prev(adj.size(), -2);
    std::vector<int> queue{s};
    prev[s] = -1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        if (v == t) break;
        for (int w : adj[v])
            if (prev[w] == -2) {
                prev[w] = v;
                queue.push_back(w);
            }
    }
    std::vector<int> path;
    for (int v = t; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

bool tuple_less(const tdt::LeannessViolation& a, const tdt::LeannessViolation& b) {
    auto key = [](const tdt::LeannessViolation& v) {
        return std::make_tuple((int)v.X.size(), v.s, v.t, v.ell, v.Zs, v.Zt);
    };
    return key(a) < key(b);
}

// ---- exhaustive small-graph corpus ----

constexpr int ALL_COUNTS[8] = {0, 1, 2, 4, 11, 34, 156, 1044};
constexpr int CONNECTED_COUNTS[8] = {0, 1, 1, 2, 6, 21, 112, 853};

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

// Edge-index remap tables, one per permutation of 0..n-1.
std::vector<std::vector<int>> perm_tables(int n) {
    auto pairs = pair_list(n);
    int E = (int)pairs.size();
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int e = 0; e < E; ++e)
        idx[pairs[e].first][pairs[e].second] = idx[pairs[e].second][pairs[e].first] = e;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> t(E);
        for (int e = 0; e < E; ++e) t[e] = idx[p[pairs[e].first]][p[pairs[e].second]];
        tables.push_back(std::move(t));
    } while (std::next_permutation(p.begin(), p.end()));
    return tables;
}

uint32_t remap(uint32_t mask, const std::vector<int>& table) {
    uint32_t out = 0;
    while (mask) {
        int e = __builtin_ctz(mask);
        mask &= mask - 1;
        out |= 1u << table[e];
    }
    return out;
}

uint32_t canon(uint32_t mask, const std::vector<std::vector<int>>& tables) {
    uint32_t best = mask;
    for (const auto& t : tables) best = std::min(best, remap(mask, t));
    return best;
}

bool mask_connected(int n, uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    if (n == 1) return true;
    std::vector<uint32_t> nbr(n, 0);
    for (int e = 0; e < (int)pairs.size(); ++e)
        if (mask & (1u << e)) {
            nbr[pairs[e].first] |= 1u << pairs[e].second;
            nbr[pairs[e].second] |= 1u << pairs[e].first;
        }
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            next |= nbr[v] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << n) - 1;
}

Graph mask_to_graph(int n, uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < (int)pairs.size(); ++e)
        if (mask & (1u << e)) edges.push_back(pairs[e]);
    return tdt::build_graph(n, edges);
}

// All canonical masks on n vertices, n <= 6, by full scan.
std::vector<uint32_t> canonical_masks_small(int n) {
    auto pairs = pair_list(n);
    auto tables = perm_tables(n);
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask)
        if (canon(mask, tables) == mask) out.push_back(mask);
    return out;
}

// All canonical masks on 7 vertices: every 6-vertex canonical graph is
// extended by a new vertex with every neighbor subset, then canonized.
std::vector<uint32_t> canonical_masks_7(const std::vector<uint32_t>& parents6) {
    auto pairs6 = pair_list(6);
    auto pairs7 = pair_list(7);
    auto tables7 = perm_tables(7);
    std::vector<std::vector<int>> idx7(7, std::vector<int>(7, -1));
    for (int e = 0; e < (int)pairs7.size(); ++e)
        idx7[pairs7[e].first][pairs7[e].second] = e;
    std::vector<int> lift(pairs6.size());
    for (int e = 0; e < (int)pairs6.size(); ++e)
        lift[e] = idx7[pairs6[e].first][pairs6[e].second];
    std::unordered_set<uint32_t> seen;
    for (uint32_t parent : parents6)
        for (uint32_t s = 0; s < 64; ++s) {
            uint32_t child = remap(parent, lift);
            for (int i = 0; i < 6; ++i)
                if (s & (1u << i)) child |= 1u << idx7[i][6];
            seen.insert(canon(child, tables7));
        }
    std::vector<uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---- random decompositions ----

std::mt19937_64 seeded(uint64_t seed) { return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + 1); }

int pick(std::mt19937_64& rng, int n) { return (int)(rng() % (uint64_t)n); }

// Inflations that keep a decomposition valid: copy one vertex of a bag into
// a neighboring bag that lacks it.
void inflate(const Graph& g, TreeDecomposition& td, std::mt19937_64& rng, int rounds) {
    for (int r = 0; r < rounds; ++r) {
        auto [a, b] = td.edges[pick(rng, (int)td.edges.size())];
        if (rng() & 1) std::swap(a, b);
        auto candidates = tdt::set_minus(td.bags[a], td.bags[b]);
        if (candidates.empty() || (int)td.bags[b].size() >= g.n) continue;
        td.bags[b] = tdt::set_union(td.bags[b], {candidates[pick(rng, (int)candidates.size())]});
    }
}

}  // namespace

int brute_max_disjoint_paths(const Graph& g, const std::vector<int>& A,
                             const std::vector<int>& B) {
    if (g.n > 30) throw std::logic_error("brute path oracle is for tiny graphs");
    uint32_t in_A = 0, in_B = 0;
    for (int v : A) in_A |= 1u << v;
    for (int v : B) in_B |= 1u << v;

    std::vector<PathMask> paths;
    for (int a : A) {
        if (in_B & (1u << a)) paths.push_back({1u << a, 1});
        list_paths(g, in_A, in_B, a, 1u << a, paths);
    }
    std::sort(paths.begin(), paths.end(),
              [](const PathMask& x, const PathMask& y) { return x.len < y.len; });
    int cap = (int)std::min(A.size(), B.size());
    return pack(paths, 0, 0, 0, cap);
}

std::optional<tdt::LeannessViolation> brute_check_lean(const Graph& g,
                                                       const TreeDecomposition& td) {
    tdt::MengerSolver solver(g);
    auto adj = bfs_tree(td);
    std::optional<tdt::LeannessViolation> best;

    for (int s = 0; s < td.num_nodes; ++s)
        for (int t = s; t < td.num_nodes; ++t) {
            int min_adh = INT_MAX;
            if (s != t) {
                auto path = node_path(adj, s, t);
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    min_adh = std::min(
                        min_adh,
                        (int)tdt::set_intersect(td.bags[path[i]], td.bags[path[i + 1]]).size());
            }
            int lmax = (int)std::min(td.bags[s].size(), td.bags[t].size());
            for (int ell = 1; ell <= lmax; ++ell) {
                if (min_adh < ell) break;  // adhesion disjunct holds here and above
                for (const auto& zs : subsets_of(td.bags[s], ell))
                    for (const auto& zt : subsets_of(td.bags[t], ell)) {
                        auto res = solver.solve(zs, zt);
                        if (res.k >= ell) continue;
                        tdt::LeannessViolation v;
                        v.s = s;
                        v.t = t;
                        v.ell = ell;
                        v.Zs = zs;
                        v.Zt = zt;
                        v.X = res.sep.X;
                        v.sideA = res.sep.sideA;
                        v.sideB = res.sep.sideB;
                        if (!best || tuple_less(v, *best)) best = v;
                    }
            }
        }
    return best;
}

std::vector<Graph> connected_graphs_upto(int nmax) {
    if (nmax < 1 || nmax > 7) throw std::logic_error("corpus covers 1..7 vertices");
    std::vector<Graph> out;
    std::vector<uint32_t> parents6;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<uint32_t> masks =
            n <= 6 ? canonical_masks_small(n) : canonical_masks_7(parents6);
        if ((int)masks.size() != ALL_COUNTS[n])
            throw std::logic_error("graph census mismatch at n=" + std::to_string(n));
        if (n == 6) parents6 = masks;
        auto pairs = pair_list(n);
        int connected = 0;
        for (uint32_t mask : masks)
            if (mask_connected(n, mask, pairs)) {
                ++connected;
                out.push_back(mask_to_graph(n, mask, pairs));
            }
        if (connected != CONNECTED_COUNTS[n])
            throw std::logic_error("connected census mismatch at n=" + std::to_string(n));
    }
    return out;
}

Graph random_connected_graph(int n, double p, uint64_t seed) {
    Graph g = tdt::gen_random(n, p, seed);
    auto comps = tdt::components(g, {});
    if (comps.size() <= 1) return g;
    for (size_t i = 1; i < comps.size(); ++i) tdt::add_edge(g, comps[0][0], comps[i][0]);
    tdt::finish_edges(g);
    return g;
}

TreeDecomposition random_rooted_td(const Graph& g, uint64_t seed) {
    auto rng = seeded(seed);
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // Elimination: bag of v = v plus its later neighbors in the fill graph;
    // v's node hangs off the node of its earliest later neighbor.
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> fill(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (pos[v] > pos[u]) fill[u].push_back(v);

    TreeDecomposition td;
    td.num_nodes = g.n;
    td.bags.assign(g.n, {});
    td.root = 0;
    for (int i = 0; i < g.n; ++i) {
        int v = order[i];
        auto later = tdt::sorted_unique(fill[v]);
        td.bags[i] = tdt::set_union({v}, later);
        if (!later.empty()) {
            int next = later[0];
            for (int w : later)
                if (pos[w] < pos[next]) next = w;
            td.edges.push_back({pos[next], i});
            for (int w : later)
                if (w != next) fill[next].push_back(w);
        } else if (i + 1 < g.n) {
            td.edges.push_back({i + 1, i});  // disconnected piece: chain onward
        }
    }
    inflate(g, td, rng, g.n);
    return td;
}

TreeDecomposition random_componental_td(const Graph& g, uint64_t seed) {
    if (!tdt::is_connected(g)) throw std::logic_error("componental generator needs a connected graph");
    auto rng = seeded(seed);

    std::vector<std::vector<int>> shuffled = g.adj;
    for (auto& list : shuffled) std::shuffle(list.begin(), list.end(), rng);

    // Proper DFS (one neighbor at a time), so every non-tree edge joins an
    // ancestor-descendant pair. Bag of v = {v} plus every ancestor adjacent
    // to v's subtree.
    int root = pick(rng, g.n);
    std::vector<int> parent(g.n, -1), depth(g.n, -1), dfs_order;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    depth[root] = 0;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next == 0) dfs_order.push_back(v);
        if (next == shuffled[v].size()) {
            stack.pop_back();
            continue;
        }
        int w = shuffled[v][next++];
        if (depth[w] < 0) {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push_back({w, 0});
        }
    }

    std::vector<std::vector<int>> reach(g.n);  // ancestors adjacent to the subtree
    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
        int v = *it;
        for (int w : g.adj[v])
            if (depth[w] < depth[v]) reach[v].push_back(w);
        reach[v] = tdt::sorted_unique(std::move(reach[v]));
        if (parent[v] >= 0)
            for (int w : tdt::set_minus(reach[v], {parent[v]}))
                reach[parent[v]].push_back(w);  // strict ancestors of the parent
    }

    std::vector<int> node_of(g.n);
    TreeDecomposition td;
    td.num_nodes = g.n;
    td.bags.assign(g.n, {});
    td.root = 0;
    for (int i = 0; i < g.n; ++i) node_of[dfs_order[i]] = i;
    for (int v = 0; v < g.n; ++v) {
        td.bags[node_of[v]] = tdt::set_union({v}, reach[v]);
        if (parent[v] >= 0) td.edges.push_back({node_of[parent[v]], node_of[v]});
    }

    // Inflations toward the root keep each part strictly above an edge (a
    // DFS subtree) intact, so the result stays componental.
    for (int r = 0; r < g.n; ++r) {
        int v = dfs_order[pick(rng, g.n)];
        if (parent[v] < 0) continue;
        auto candidates = tdt::set_minus(td.bags[node_of[parent[v]]], td.bags[node_of[v]]);
        if (candidates.empty()) continue;
        int w = candidates[pick(rng, (int)candidates.size())];
        td.bags[node_of[v]] = tdt::set_union(td.bags[node_of[v]], {w});
    }
    return td;
}

}  // namespace tdt_test
