#include "tdt/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdt {

namespace {

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.n, 0);
    for (int u = 0; u < g.n; u++)
        for (int v : g.adj[u]) adj[u] |= 1u << v;
    return adj;
}

// Vertices outside X + {v} reachable from v when only X vertices may be
// interior, i.e. v's neighbors in the fill graph of any elimination order
// that starts with X. BFS over bitmasks.
uint32_t fill_neighbors(const std::vector<uint32_t>& adj, uint32_t maskX, int v) {
    uint32_t seen = (1u << v) | adj[v];
    uint32_t result = adj[v] & ~maskX & ~(1u << v);
    uint32_t frontier = adj[v] & maskX;
    while (frontier) {
        uint32_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[u];
        }
        next &= ~seen;
        seen |= next;
        result |= next & ~maskX;
        frontier = next & maskX;
    }
    return result & ~(1u << v);
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g) {
    int n = g.n;
    if (n > TREEWIDTH_EXACT_MAX_N)
        throw std::invalid_argument("exact treewidth is limited to " +
                                    std::to_string(TREEWIDTH_EXACT_MAX_N) + " vertices, got " +
                                    std::to_string(n));
    TreewidthResult res;
    if (n == 0) {
        res.width = -1;
        res.td.num_nodes = 1;
        res.td.bags.push_back({});
        res.td.root = 0;
        return res;
    }

    auto adj = adjacency_masks(g);
    size_t states = size_t{1} << n;
    // best[S] = smallest possible max fill-degree when the vertices of S are
    // eliminated first; choice[S] = last of them, smallest id on ties
    std::vector<uint8_t> best(states, 0), choice(states, 0);
    for (uint32_t S = 1; S < states; S++) {
        uint8_t b = 255, c = 0;
        uint32_t rest = S;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t X = S & ~(1u << v);
            uint8_t val = (uint8_t)std::popcount(fill_neighbors(adj, X, v));
            if (best[X] > val) val = best[X];
            if (val < b) {
                b = val;
                c = (uint8_t)v;
            }
        }
        best[S] = b;
        choice[S] = c;
    }

    uint32_t full = (uint32_t)(states - 1);
    res.width = best[full];
    res.order.assign(n, 0);
    for (uint32_t S = full; S;) {
        int v = choice[S];
        res.order[std::popcount(S) - 1] = v;
        S &= ~(1u << v);
    }

    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[res.order[i]] = i;
    res.td.num_nodes = n;
    res.td.bags.resize(n);
    uint32_t X = 0;
    for (int i = 0; i < n; i++) {
        int v = res.order[i];
        uint32_t q = fill_neighbors(adj, X, v);
        auto& bag = res.td.bags[i];
        bag.push_back(v);
        int parent_pos = q ? n : i + 1;  // next eliminated when no fill neighbor
        for (uint32_t m = q; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            bag.push_back(w);
            parent_pos = std::min(parent_pos, pos[w]);
        }
        std::sort(bag.begin(), bag.end());
        if (i < n - 1) res.td.edges.push_back({i, parent_pos});
        X |= 1u << v;
    }
    res.td.root = n - 1;

    int w = width(res.td);
    if (w != res.width) throw std::runtime_error("treewidth reconstruction mismatch");
    return res;
}

int treewidth_oracle(const Graph& g) {
    int n = g.n;
    if (n > TREEWIDTH_ORACLE_MAX_N)
        throw std::invalid_argument("treewidth oracle is limited to " +
                                    std::to_string(TREEWIDTH_ORACLE_MAX_N) + " vertices, got " +
                                    std::to_string(n));
    if (n == 0) return -1;
    auto base = adjacency_masks(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n - 1;
    std::vector<uint32_t> adj(n);
    do {
        adj = base;
        uint32_t remaining = (uint32_t)((size_t{1} << n) - 1);
        int worst = 0;
        for (int i = 0; i < n && worst < best; i++) {
            int v = perm[i];
            uint32_t nb = adj[v] & remaining & ~(1u << v);
            worst = std::max(worst, std::popcount(nb));
            for (uint32_t m = nb; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                adj[w] |= nb & ~(1u << w);
            }
            remaining &= ~(1u << v);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace tdt
