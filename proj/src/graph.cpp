#include "tdt/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdt {

int Graph::num_edges() const {
    long long d = 0;
    for (const auto& nb : adj) d += (long long)nb.size();
    return (int)(d / 2);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void add_edge(Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(g.n));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
}

void finish_edges(Graph& g) {
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (const auto& [u, v] : edges) add_edge(g, u, v);
    finish_edges(g);
    return g;
}

void assert_well_formed(const Graph& g) {
    if ((int)g.adj.size() != g.n) throw std::runtime_error("adjacency size mismatch");
    for (int u = 0; u < g.n; u++) {
        const auto& nb = g.adj[u];
        for (size_t i = 0; i < nb.size(); i++) {
            int v = nb[i];
            if (v < 0 || v >= g.n) throw std::runtime_error("neighbor out of range");
            if (v == u) throw std::runtime_error("self-loop at " + std::to_string(u));
            if (i > 0 && nb[i - 1] >= v) throw std::runtime_error("neighbor list not sorted/unique");
            if (!g.has_edge(v, u)) throw std::runtime_error("asymmetric adjacency");
        }
    }
    if (g.has_labels()) {
        if ((int)g.labels.size() != g.n) throw std::runtime_error("label count mismatch");
        auto sorted = g.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::runtime_error("duplicate vertex label");
    }
}

std::vector<int> component_of(const Graph& g, int start, const std::vector<char>& deleted) {
    std::vector<int> comp;
    if (start < 0 || start >= g.n || deleted[start]) return comp;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int v : g.adj[u])
            if (!seen[v] && !deleted[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& deleted) {
    std::vector<char> del(g.n, 0);
    for (int v : deleted) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("deleted vertex out of range");
        del[v] = 1;
    }
    std::vector<std::vector<int>> out;
    std::vector<char> seen = del;
    for (int s = 0; s < g.n; s++) {
        if (seen[s]) continue;
        auto comp = component_of(g, s, del);
        for (int v : comp) seen[v] = 1;
        out.push_back(std::move(comp));
    }
    return out;  // scan order by smallest member, components sorted internally
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> del(g.n, 0);
    return (int)component_of(g, 0, del).size() == g.n;
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in(g.n, 0);
    for (int v : S) in[v] = 1;
    std::vector<int> out;
    for (int v : S)
        for (int w : g.adj[v])
            if (!in[w]) {
                in[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    InducedSubgraph r;
    r.new_id.assign(g.n, -1);
    r.old_id = keep;
    std::sort(r.old_id.begin(), r.old_id.end());
    r.old_id.erase(std::unique(r.old_id.begin(), r.old_id.end()), r.old_id.end());
    for (int i = 0; i < (int)r.old_id.size(); i++) {
        int v = r.old_id[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("keep vertex out of range");
        r.new_id[v] = i;
    }
    r.g = Graph((int)r.old_id.size());
    for (int i = 0; i < r.g.n; i++) {
        for (int w : g.adj[r.old_id[i]])
            if (r.new_id[w] >= 0) r.g.adj[i].push_back(r.new_id[w]);
        // source list sorted by old id; new ids are order-preserving, so still sorted
    }
    if (g.has_labels()) {
        r.g.labels.resize(r.g.n);
        for (int i = 0; i < r.g.n; i++) r.g.labels[i] = g.labels[r.old_id[i]];
    }
    return r;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const std::vector<int>& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace tdt
