#include "tdt/zoo.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tdt {

void LandmarkAtlas::add(std::string name, std::vector<int> ids) {
    if (has(name)) throw std::invalid_argument("duplicate landmark name: " + name);
    sets.emplace_back(std::move(name), std::move(ids));
}

bool LandmarkAtlas::has(const std::string& name) const {
    for (const auto& [k, v] : sets)
        if (k == name) return true;
    return false;
}

const std::vector<int>& LandmarkAtlas::at(const std::string& name) const {
    for (const auto& [k, v] : sets)
        if (k == name) return v;
    throw std::out_of_range("no landmark named " + name);
}

std::string write_atlas(const LandmarkAtlas& atlas) {
    std::ostringstream out;
    for (const auto& [name, ids] : atlas.sets) {
        out << name << '\t';
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i) out << ' ';
            out << ids[i] + 1;
        }
        out << '\n';
    }
    return out.str();
}

LandmarkAtlas parse_atlas(const std::string& text) {
    LandmarkAtlas atlas;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("atlas line " + std::to_string(lineno) + ": missing tab");
        std::string name = line.substr(0, tab);
        std::istringstream rest(line.substr(tab + 1));
        std::vector<int> ids;
        long long id;
        while (rest >> id) {
            if (id < 1)
                throw std::invalid_argument("atlas line " + std::to_string(lineno) +
                                            ": ids are 1-based");
            ids.push_back(static_cast<int>(id - 1));
        }
        if (!rest.eof())
            throw std::invalid_argument("atlas line " + std::to_string(lineno) + ": bad id");
        atlas.add(std::move(name), std::move(ids));
    }
    return atlas;
}

namespace {

int pow2(int k) { return 1 << k; }

std::string slash(const std::string& a, int b) { return a + "/" + std::to_string(b); }

}  // namespace

std::pair<Graph, LandmarkAtlas> gen_planar_witness(const PlanarWitnessConfig& cfg) {
    const int J = cfg.levels, N = cfg.grids, M = cfg.cols;
    if (N < 1) throw std::invalid_argument("planar-witness needs at least one grid region");
    if (M < 2) throw std::invalid_argument("planar-witness needs at least two grid columns");
    if (J < N + 2)
        throw std::invalid_argument("planar-witness needs levels >= grids + 2");
    if (J > 14) throw std::invalid_argument("planar-witness level count over the size limit");

    // Layer vertices: level j holds indices 0..2^(j+1), standing for x = i/2^j.
    std::vector<int> layer_off(J + 1);
    int next_id = 0;
    for (int j = 0; j <= J; ++j) {
        layer_off[j] = next_id;
        next_id += pow2(j + 1) + 1;
    }
    auto gp = [&](int j, int i) { return layer_off[j] + i; };

    // Region n sits between levels n and n+1 and owns grid n. Its boundary
    // consists of the x in [1,2] vertices of both levels, matched to grid
    // rows 1..R ordered along the region boundary: x descending on level n,
    // then x ascending on level n+1. Rows 1 and R are the x = 2 corners,
    // which are identified with grid cells (1,1) and (R,1).
    struct Track {
        int u;       // layer vertex
        int row;     // grid row it feeds
        int iv_min;  // first region vertical it crosses
    };
    std::vector<std::vector<Track>> tracks(N + 1);
    // Crossing vertices subdivide region verticals; keyed (vertical, row).
    std::vector<std::map<std::pair<int, int>, int>> xid(N + 1);
    for (int n = 0; n <= N; ++n) {
        const int R = 3 * pow2(n) + 2;
        for (int row = 2; row < R; ++row) {
            Track t;
            t.row = row;
            if (row <= pow2(n) + 1) {
                int iu = pow2(n + 1) - (row - 1);
                t.u = gp(n, iu);
                t.iv_min = iu + 1;
            } else {
                int iu = row - 2 - pow2(n) + pow2(n + 1);
                t.u = gp(n + 1, iu);
                t.iv_min = iu / 2 + 1;
            }
            for (int iv = t.iv_min; iv < pow2(n + 1); ++iv)
                xid[n][{iv, row}] = -1;
            tracks[n].push_back(t);
        }
    }
    std::vector<int> grid_off(N + 1);
    for (int n = 0; n <= N; ++n) {
        for (auto& [key, id] : xid[n]) id = next_id++;
        grid_off[n] = next_id;
        next_id += (3 * pow2(n) + 2) * M - 2;
    }
    auto grid_id = [&](int n, int r, int c) {
        const int R = 3 * pow2(n) + 2;
        if (r == 1 && c == 1) return gp(n, pow2(n + 1));
        if (r == R && c == 1) return gp(n + 1, pow2(n + 2));
        int base = (r - 1) * M + (c - 1);
        return grid_off[n] + base - (base > (R - 1) * M ? 2 : 1);
    };

    Graph g(next_id);
    g.labels.resize(next_id);
    for (int j = 0; j <= J; ++j)
        for (int i = 0; i <= pow2(j + 1); ++i) g.labels[gp(j, i)] = slash(slash("gp", j), i);
    for (int n = 0; n <= N; ++n) {
        for (const auto& [key, id] : xid[n])
            g.labels[id] = slash(slash(slash("x", n), key.first), key.second);
        const int R = 3 * pow2(n) + 2;
        for (int r = 1; r <= R; ++r)
            for (int c = 1; c <= M; ++c)
                if (!((r == 1 || r == R) && c == 1))
                    g.labels[grid_id(n, r, c)] = slash(slash(slash("g", n), r), c);
    }

    // Layer horizontals.
    for (int j = 0; j <= J; ++j)
        for (int i = 0; i < pow2(j + 1); ++i) add_edge(g, gp(j, i), gp(j, i + 1));
    // Layer verticals. The x = 2 vertical is cut in every region that has a
    // grid; verticals strictly inside such a region are subdivided by their
    // crossing vertices, in row order.
    for (int j = 0; j < J; ++j) {
        for (int i = 0; i <= pow2(j + 1); ++i) {
            if (j <= N && i == pow2(j + 1)) continue;
            if (j <= N && i > pow2(j) && i < pow2(j + 1)) {
                int prev = gp(j, i);
                for (auto it = xid[j].lower_bound({i, 0});
                     it != xid[j].end() && it->first.first == i; ++it) {
                    add_edge(g, prev, it->second);
                    prev = it->second;
                }
                add_edge(g, prev, gp(j + 1, 2 * i));
            } else {
                add_edge(g, gp(j, i), gp(j + 1, 2 * i));
            }
        }
        for (int i = 1; i <= pow2(j); ++i) add_edge(g, gp(j, i), gp(j + 1, 2 * i - 1));
    }
    // Grids: strong product of two paths.
    for (int n = 0; n <= N; ++n) {
        const int R = 3 * pow2(n) + 2;
        for (int r = 1; r <= R; ++r) {
            for (int c = 1; c <= M; ++c) {
                if (c < M) add_edge(g, grid_id(n, r, c), grid_id(n, r, c + 1));
                if (r < R) {
                    add_edge(g, grid_id(n, r, c), grid_id(n, r + 1, c));
                    if (c < M) add_edge(g, grid_id(n, r, c), grid_id(n, r + 1, c + 1));
                    if (c > 1) add_edge(g, grid_id(n, r, c), grid_id(n, r + 1, c - 1));
                }
            }
        }
    }
    // Tracks: one per interior boundary vertex, entering grid column 1 at its
    // row and meeting each vertical it crosses at the shared crossing vertex.
    for (int n = 0; n <= N; ++n) {
        for (const Track& t : tracks[n]) {
            int prev = t.u;
            for (int iv = t.iv_min; iv < pow2(n + 1); ++iv) {
                int x = xid[n].at({iv, t.row});
                add_edge(g, prev, x);
                prev = x;
            }
            add_edge(g, prev, grid_id(n, t.row, 1));
        }
    }
    finish_edges(g);

    LandmarkAtlas atlas;
    {
        std::vector<int> eps;
        for (int i = 0; i <= pow2(J + 1); ++i) eps.push_back(gp(J, i));
        atlas.add("eps_frontier", std::move(eps));
        std::vector<int> blue;
        for (int j = 0; j <= J; ++j) blue.push_back(gp(j, 0));
        atlas.add("blue_ray_prefix", std::move(blue));
        atlas.add("v_2_0", {gp(0, 2)});
        atlas.add("green_entry", {grid_id(0, 1, 2)});
    }
    for (int n = 0; n <= N; ++n) {
        const int R = 3 * pow2(n) + 2;
        std::vector<int> u_set{gp(n, pow2(n + 1))};
        for (const Track& t : tracks[n]) u_set.push_back(t.u);
        u_set.push_back(gp(n + 1, pow2(n + 2)));
        atlas.add(slash("u_n", n), std::move(u_set));

        std::vector<int> s_set;
        for (int i = pow2(n + 1) + 1; i <= pow2(n + 2); ++i) s_set.push_back(gp(n + 1, i));
        for (int j = 0; j <= n + 1; ++j) s_set.push_back(gp(j, pow2(j)));
        atlas.add(slash("s_n", n), std::move(s_set));

        std::vector<int> front, col2;
        for (int r = 1; r <= R; ++r) {
            front.push_back(grid_id(n, r, M));
            col2.push_back(grid_id(n, r, 2));
        }
        atlas.add(slash("eps_n_frontier", n), std::move(front));
        atlas.add(slash("xn_column", n), std::move(col2));

        std::vector<int> y_set;
        for (int t = 0; t <= pow2(n) + 1; ++t)
            y_set.push_back(gp(J, static_cast<int>(static_cast<long long>(t) * pow2(J) /
                                                   (pow2(n) + 1))));
        for (int i = pow2(n + 1) + 1; i <= pow2(n + 2); ++i)
            y_set.push_back(gp(J, i * pow2(J - n - 1)));
        atlas.add(slash("yn_level", n), std::move(y_set));
    }
    return {std::move(g), std::move(atlas)};
}

std::pair<Graph, LandmarkAtlas> gen_clique_rows(const CliqueRowsConfig& cfg) {
    const int W = cfg.width;
    if (W < 3) throw std::invalid_argument("clique-rows needs width >= 3");
    if (W > 40) throw std::invalid_argument("clique-rows width over the size limit");

    Graph g(3 * (W + 1));
    auto id = [&](int i, int j) { return 3 * i + j; };
    g.labels.resize(g.n);
    for (int i = 0; i <= W; ++i)
        for (int j = 0; j <= 2; ++j) g.labels[id(i, j)] = slash(std::to_string(i), j);
    for (int i = 0; i <= W; ++i)
        for (int j = 0; j <= 2; ++j) {
            if (i < W) add_edge(g, id(i, j), id(i + 1, j));
            if (j < 2) add_edge(g, id(i, j), id(i, j + 1));
        }

    auto u_set = [&](int m) {
        std::vector<int> s;
        for (int i = 0; i <= m; ++i) s.push_back(id(i, 1));
        s.push_back(id(m - 1, 0));
        s.push_back(id(m, 0));
        return sorted_unique(std::move(s));
    };
    for (int m = 1; m <= W - 1; ++m) {
        auto s = u_set(m);
        for (size_t a = 0; a < s.size(); ++a)
            for (size_t b = a + 1; b < s.size(); ++b) add_edge(g, s[a], s[b]);
    }
    finish_edges(g);

    LandmarkAtlas atlas;
    atlas.add("u", {id(0, 0)});
    atlas.add("w", {id(W, 2)});
    for (int m = 1; m <= W - 1; ++m) atlas.add(slash("u_set", m), u_set(m));
    for (int m = 1; m <= W - 4; ++m) {
        auto shared = set_intersect(u_set(m), u_set(m + 1));
        atlas.add(slash("z1", m), set_union(shared, {id(W, 2)}));
        atlas.add(slash("z2", m), set_union(shared, {id(0, 0)}));
    }
    return {std::move(g), std::move(atlas)};
}

std::pair<Graph, LandmarkAtlas> gen_seq_tree(const SeqTreeConfig& cfg) {
    const int D = cfg.depth, B = cfg.branch, M = cfg.len;
    if (D < 1) throw std::invalid_argument("seq-tree needs depth >= 1");
    if (B < 1 || B > M) throw std::invalid_argument("seq-tree needs 1 <= branch <= len");
    if (M < 2) throw std::invalid_argument("seq-tree needs len >= 2");
    long long strips = 0, pw = 1;
    for (int d = 0; d <= D; ++d) {
        strips += pw;
        pw *= B;
    }
    if (strips * 3 * (M + 1) > 2'000'000)
        throw std::invalid_argument("seq-tree size over the limit");

    Graph g(static_cast<int>(strips) * 3 * (M + 1));
    g.labels.resize(g.n);
    LandmarkAtlas atlas;
    int next_base = 0;
    // Strip vertices are column-major: (col, row) -> base + 3*col + row - 1.
    auto cell = [&](int base, int col, int row) { return base + 3 * col + row - 1; };
    auto lay_strip = [&](const std::string& name) {
        int base = next_base;
        next_base += 3 * (M + 1);
        for (int col = 0; col <= M; ++col)
            for (int row = 1; row <= 3; ++row)
                g.labels[cell(base, col, row)] = slash(slash(name, col), row);
        for (int col = 0; col <= M; ++col)
            for (int row = 1; row <= 3; ++row) {
                if (col < M) add_edge(g, cell(base, col, row), cell(base, col + 1, row));
                if (row < 3) add_edge(g, cell(base, col, row), cell(base, col, row + 1));
            }
        atlas.add("entry/" + name, {cell(base, 0, 1), cell(base, 0, 2), cell(base, 0, 3)});
        atlas.add("frontier/" + name, {cell(base, M, 1), cell(base, M, 2), cell(base, M, 3)});
        return base;
    };
    // Depth-first in child order 1..B, so ids and atlas order follow the
    // lexicographic order of the name sequences.
    auto grow = [&](auto&& self, const std::string& name, int base, int depth) -> void {
        if (depth == D) return;
        for (int i = 1; i <= B; ++i) {
            std::string child_name =
                name == "root" ? std::to_string(i) : name + "-" + std::to_string(i);
            int child = lay_strip(child_name);
            for (int row = 1; row <= 3; ++row) {
                add_edge(g, cell(base, i - 1, 3), cell(child, 0, row));
                add_edge(g, cell(base, i, 3), cell(child, 0, row));
            }
            self(self, child_name, child, depth + 1);
        }
    };
    int root = lay_strip("root");
    grow(grow, "root", root, 0);
    finish_edges(g);

    // The all-max-branch path root, B, B-B, ... names the diagonal spine.
    std::vector<std::string> spine{"root"};
    for (int d = 1; d <= D; ++d) {
        std::string s = std::to_string(B);
        for (int k = 2; k <= d; ++k) s += "-" + std::to_string(B);
        spine.push_back(s);
    }
    atlas.add("diag_frontier", atlas.at("frontier/" + spine[D]));
    for (int d = 1; d <= D; ++d) {
        const auto& parent = spine[d - 1];
        const auto& entry = atlas.at("entry/" + parent);
        int base = entry[0];  // (0,1) is the first vertex of the strip block
        atlas.add(slash("cand_pair", d), {cell(base, B - 1, 3), cell(base, B, 3)});
    }
    return {std::move(g), std::move(atlas)};
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
    finish_edges(g);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) add_edge(g, i, (i + 1) % n);
    finish_edges(g);
    return g;
}

Graph gen_clique(int n) {
    if (n < 1) throw std::invalid_argument("clique needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_edge(g, i, j);
    finish_edges(g);
    return g;
}

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    Graph g(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) add_edge(g, id(r, c), id(r, c + 1));
            if (r + 1 < rows) add_edge(g, id(r, c), id(r + 1, c));
        }
    finish_edges(g);
    return g;
}

Graph gen_random(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random graph needs n >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    // 53-bit threshold so p = 1 keeps every edge and p = 0 keeps none.
    const uint64_t threshold = static_cast<uint64_t>(p * 9007199254740992.0);
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold) add_edge(g, u, v);
    finish_edges(g);
    return g;
}

}  // namespace tdt
