#include "tdt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "tdt/decomp.hpp"
#include "tdt/menger.hpp"
#include "tdt/verify.hpp"

namespace tdt {

bool ExperimentReport::all_pass() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

std::string format_report(const ExperimentReport& report) {
    std::ostringstream out;
    out << "experiment " << report.name << '\n';
    for (const auto& [key, value] : report.config) out << "cfg " << key << ' ' << value << '\n';
    for (const auto& c : report.claims)
        out << c.id << '\t' << c.expected << '\t' << c.computed << '\t'
            << (c.pass ? "pass" : "fail") << '\n';
    out << "time " << report.ms << '\n';
    return out.str();
}

namespace {

void add_claim(ExperimentReport& r, std::string id, std::string statement, long long expected,
               long long computed) {
    Claim c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = expected;
    c.computed = computed;
    c.pass = expected == computed;
    r.claims.push_back(std::move(c));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int region_rows(int n) { return 3 * (1 << n) + 2; }
int region_sep(int n) { return (1 << (n + 1)) + n + 2; }

void check_region(const PlanarWitnessConfig& cfg, int n) {
    if (n < 1 || n > cfg.grids) throw std::invalid_argument("region index out of range");
    if (cfg.levels < n + 3)
        throw std::invalid_argument("region experiments need levels >= n + 3");
    if (cfg.cols < 8) throw std::invalid_argument("region experiments need cols >= 8");
}

}  // namespace

ExperimentReport exp_c31_cuts(const PlanarWitnessConfig& cfg, int n) {
    check_region(cfg, n);
    Timer timer;
    ExperimentReport r;
    r.name = "c31-cuts";
    r.config = {{"levels", cfg.levels}, {"grids", cfg.grids}, {"cols", cfg.cols}, {"n", n}};

    auto [g, atlas] = gen_planar_witness(cfg);
    const std::string ns = std::to_string(n);
    const auto& A = atlas.at("eps_frontier");
    const auto& B = atlas.at("eps_n_frontier/" + ns);
    const auto& S = atlas.at("s_n/" + ns);
    const long long sep = region_sep(n);

    MengerSolver solver(g);
    add_claim(r, "a", "disjoint path count between the deep frontier and the region frontier",
              sep, solver.flow_value(A, B));
    bool b_ok = is_separator(g, S, A, B) && distinguishes_efficiently(g, S, A, B);
    add_claim(r, "b", "the named hook set separates the frontiers with no slack", 1,
              b_ok ? 1 : 0);
    {
        auto del = sorted_unique(atlas.at("blue_ray_prefix"));
        del = set_union(del, atlas.at("v_2_0"));
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (!set_contains(del, v)) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        auto map_set = [&](const std::vector<int>& s) {
            std::vector<int> out;
            for (int v : s)
                if (sub.new_id[v] >= 0) out.push_back(sub.new_id[v]);
            return sorted_unique(std::move(out));
        };
        MengerSolver sub_solver(sub.g);
        add_claim(r, "c", "deleting the leftmost ray and its level-0 x=2 neighbor keeps the count",
                  sep, sub_solver.flow_value(map_set(A), map_set(B)));
    }
    {
        int v20 = atlas.at("v_2_0")[0];
        auto comps = components(g, S);
        const std::vector<int>* home = nullptr;
        for (const auto& comp : comps)
            if (set_contains(comp, v20)) {
                home = &comp;
                break;
            }
        bool ok = home != nullptr;
        if (ok)
            for (int v : A)
                if (set_contains(*home, v)) {
                    ok = false;
                    break;
                }
        if (ok)
            for (int v : B)
                if (!set_contains(*home, v)) {
                    ok = false;
                    break;
                }
        add_claim(r, "d",
                  "after deleting the hook set, the level-0 x=2 vertex sits with the region "
                  "frontier and away from the deep frontier",
                  1, ok ? 1 : 0);
    }
    {
        PlanarWitnessConfig big = cfg;
        big.levels += 2;
        big.cols += 2;
        auto [g2, atlas2] = gen_planar_witness(big);
        MengerSolver s2(g2);
        add_claim(r, "e", "the count is unchanged two levels and two columns deeper", sep,
                  s2.flow_value(atlas2.at("eps_frontier"), atlas2.at("eps_n_frontier/" + ns)));
    }
    r.ms = timer.ms();
    return r;
}

ExperimentReport exp_c31_slink(const PlanarWitnessConfig& cfg, int n) {
    check_region(cfg, n);
    Timer timer;
    ExperimentReport r;
    r.name = "c31-slink";
    r.config = {{"levels", cfg.levels}, {"grids", cfg.grids}, {"cols", cfg.cols}, {"n", n}};

    auto [g, atlas] = gen_planar_witness(cfg);
    const std::string ns = std::to_string(n);
    const auto& X = atlas.at("xn_column/" + ns);
    const auto& Y = atlas.at("yn_level/" + ns);
    const long long rows = region_rows(n);
    const long long sep = region_sep(n);

    MengerSolver solver(g);
    long long a = solver.flow_value(X, Y);
    add_claim(r, "a", "disjoint path count between the grid column and the deep level set", sep,
              a);
    add_claim(r, "b", "the grid column has one vertex per region row", rows,
              static_cast<long long>(X.size()));
    add_claim(r, "c", "the column reaches itself at full width", rows, solver.flow_value(X, X));
    add_claim(r, "d", "the outward count falls short of the column size", 1, a < rows ? 1 : 0);
    {
        PlanarWitnessConfig big = cfg;
        big.levels += 2;
        big.cols += 2;
        auto [g2, atlas2] = gen_planar_witness(big);
        MengerSolver s2(g2);
        add_claim(r, "e", "the count is unchanged two levels and two columns deeper", sep,
                  s2.flow_value(atlas2.at("xn_column/" + ns), atlas2.at("yn_level/" + ns)));
    }
    r.ms = timer.ms();
    return r;
}

namespace {

// Path decomposition of the clique-rows graph with one extra leaf bag planted
// on the m-th chain node. The leaf holds both z sets plus the corner (0,2)
// and its second neighbor (1,2); the corner has degree 2, so the bag carries
// a leanness violation of order 2. The graph is 2-connected, so no
// decomposition violates at order < 2, and the planted bag is node 0, which
// the level scan visits first: the minimum violation is pinned to this bag.
TreeDecomposition clique_rows_planted_td(const CliqueRowsConfig& cfg, int m,
                                         const LandmarkAtlas& atlas) {
    const int W = cfg.width;
    auto id = [](int i, int j) { return 3 * i + j; };
    TreeDecomposition td;
    td.num_nodes = W + 1;
    td.bags.assign(W + 1, {});
    td.bags[0] = set_union(set_union(atlas.at("z1/" + std::to_string(m)),
                                     atlas.at("z2/" + std::to_string(m))),
                           {id(0, 2), id(1, 2)});
    for (int k = 0; k <= W - 2; ++k) {
        std::vector<int> bag;
        for (int i = 0; i <= k + 1; ++i) bag.push_back(id(i, 1));
        bag.push_back(id(k, 0));
        bag.push_back(id(k + 1, 0));
        bag.push_back(id(k, 2));
        bag.push_back(id(k + 1, 2));
        if (k >= 1 && k <= m - 1) {
            bag.push_back(id(0, 0));
            bag.push_back(id(0, 2));
            bag.push_back(id(1, 2));
        }
        if (k >= m - 1) bag.push_back(id(W, 2));
        td.bags[k + 1] = sorted_unique(std::move(bag));
    }
    std::vector<int> tail;
    for (int j = 0; j <= 2; ++j) {
        tail.push_back(id(W - 1, j));
        tail.push_back(id(W, j));
    }
    td.bags[W] = sorted_unique(std::move(tail));
    td.edges.push_back({0, m});
    for (int k = 1; k < W; ++k) td.edges.push_back({k, k + 1});
    return td;
}

}  // namespace

ExperimentReport exp_ex3_bag(const CliqueRowsConfig& cfg, int m) {
    if (m < 2 || m > cfg.width - 4)
        throw std::invalid_argument("ex3-bag needs 2 <= m <= width - 4");
    Timer timer;
    ExperimentReport r;
    r.name = "ex3-bag";
    r.config = {{"width", cfg.width}, {"m", m}};

    auto [g, atlas] = gen_clique_rows(cfg);
    const std::string ms = std::to_string(m);
    const auto& Z1 = atlas.at("z1/" + ms);
    const auto& Z2 = atlas.at("z2/" + ms);
    auto shared = set_intersect(atlas.at("u_set/" + ms), atlas.at("u_set/" + std::to_string(m + 1)));

    MengerSolver solver(g);
    add_claim(r, "a", "disjoint path count between the two z sets", m + 2,
              solver.flow_value(Z1, Z2));
    bool b_ok = is_separator(g, shared, Z1, Z2) && distinguishes_efficiently(g, shared, Z1, Z2);
    add_claim(r, "b", "the shared clique slice separates the z sets with no slack", 1,
              b_ok ? 1 : 0);
    {
        auto td = clique_rows_planted_td(cfg, m, atlas);
        auto v = check_lean(g, td);
        auto id = [](int i, int j) { return 3 * i + j; };
        // Minimum violation: the corner (0,2) together with both of its
        // neighbors sits in the planted bag, and {(0,1),(1,2)} cuts it off.
        std::vector<int> zs{id(0, 0), id(0, 1), id(1, 1)};
        std::vector<int> zt{id(0, 1), id(0, 2), id(1, 2)};
        std::vector<int> cut{id(0, 1), id(1, 2)};
        bool ok = v.has_value() && v->s == 0 && v->t == 0 && v->ell == 3 &&
                  v->Zs == zs && v->Zt == zt && v->X == cut;
        add_claim(r, "c", "the minimum leanness violation is a same-bag pair in the planted bag",
                  1, ok ? 1 : 0);
    }
    {
        CliqueRowsConfig big = cfg;
        big.width += 2;
        auto [g2, atlas2] = gen_clique_rows(big);
        MengerSolver s2(g2);
        const auto& Z1b = atlas2.at("z1/" + ms);
        const auto& Z2b = atlas2.at("z2/" + ms);
        add_claim(r, "d", "the path count is unchanged two columns wider", m + 2,
                  s2.flow_value(Z1b, Z2b));
        auto shared2 = set_intersect(atlas2.at("u_set/" + ms),
                                     atlas2.at("u_set/" + std::to_string(m + 1)));
        bool e_ok = is_separator(g2, shared2, Z1b, Z2b) &&
                    distinguishes_efficiently(g2, shared2, Z1b, Z2b);
        add_claim(r, "e", "the shared slice still separates with no slack two columns wider", 1,
                  e_ok ? 1 : 0);
    }
    r.ms = timer.ms();
    return r;
}

ExperimentReport exp_ex5_deg2(const SeqTreeConfig& cfg) {
    if (cfg.depth < 2) throw std::invalid_argument("ex5-deg2 needs depth >= 2");
    if (cfg.branch < 2) throw std::invalid_argument("ex5-deg2 needs branch >= 2");
    if (cfg.len < 2 * cfg.branch + 2)
        throw std::invalid_argument("ex5-deg2 needs len >= 2*branch + 2");
    Timer timer;
    ExperimentReport r;
    r.name = "ex5-deg2";
    r.config = {{"depth", cfg.depth}, {"branch", cfg.branch}, {"len", cfg.len}};

    auto [g, atlas] = gen_seq_tree(cfg);
    const auto& A = atlas.at("entry/root");
    const auto& B = atlas.at("diag_frontier");
    MengerSolver solver(g);

    long long common = -2;
    bool all_same = true;
    for (const auto& [name, ids] : atlas.sets) {
        if (name.rfind("entry/", 0) != 0) continue;
        long long f = solver.flow_value(ids, atlas.at("frontier/" + name.substr(6)));
        if (common == -2)
            common = f;
        else if (f != common)
            all_same = false;
    }
    add_claim(r, "a", "every strip joins its entry column to its frontier at the same width", 3,
              all_same ? common : -1);
    add_claim(r, "b", "disjoint path count between the root entry and the deepest frontier", 2,
              solver.flow_value(A, B));
    {
        std::vector<std::vector<int>> found;
        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y)
                if (is_separator(g, {x, y}, A, B)) found.push_back({x, y});
        std::vector<std::vector<int>> want;
        for (int d = 1; d <= cfg.depth; ++d) {
            auto p = atlas.at("cand_pair/" + std::to_string(d));
            std::sort(p.begin(), p.end());
            want.push_back(std::move(p));
        }
        std::sort(want.begin(), want.end());
        add_claim(r, "c", "the order-2 separators are exactly the spine attachment pairs",
                  cfg.depth, found == want ? static_cast<long long>(found.size()) : -1);
    }
    {
        bool ok = true;
        for (int d = 1; d <= cfg.depth; ++d) {
            auto p = atlas.at("cand_pair/" + std::to_string(d));
            std::sort(p.begin(), p.end());
            int top = std::min(p[0], p[1]);  // row-3 cell of the earlier column
            std::vector<int> triple{top - 2, top - 1, top};
            ok = ok && !set_intersect(p, triple).empty() && is_separator(g, triple, A, B);
        }
        add_claim(r, "d", "each pair meets its strip's separating column triple", 1, ok ? 1 : 0);
    }
    {
        SeqTreeConfig big = cfg;
        big.len += 2;
        auto [g2, atlas2] = gen_seq_tree(big);
        MengerSolver s2(g2);
        add_claim(r, "e", "the root-to-deepest count is unchanged two columns longer", 2,
                  s2.flow_value(atlas2.at("entry/root"), atlas2.at("diag_frontier")));
    }
    r.ms = timer.ms();
    return r;
}

ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, long long>& params) {
    auto get = [&](const char* key, long long def) {
        auto it = params.find(key);
        return it == params.end() ? def : it->second;
    };
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& kv : params) {
            bool known = false;
            for (const char* a : allowed)
                if (kv.first == a) known = true;
            if (!known)
                throw std::invalid_argument("unknown config key for " + name + ": " + kv.first);
        }
    };
    if (name == "c31-cuts" || name == "c31-slink") {
        check_keys({"n", "levels", "grids", "cols"});
        int n = static_cast<int>(get("n", 1));
        PlanarWitnessConfig cfg;
        cfg.grids = static_cast<int>(get("grids", n + 1));
        cfg.levels = static_cast<int>(get("levels", n + 4));
        cfg.cols = static_cast<int>(get("cols", 12));
        return name == "c31-cuts" ? exp_c31_cuts(cfg, n) : exp_c31_slink(cfg, n);
    }
    if (name == "ex3-bag") {
        check_keys({"m", "width"});
        CliqueRowsConfig cfg;
        cfg.width = static_cast<int>(get("width", 8));
        return exp_ex3_bag(cfg, static_cast<int>(get("m", 3)));
    }
    if (name == "ex5-deg2") {
        check_keys({"depth", "branch", "len"});
        SeqTreeConfig cfg;
        cfg.depth = static_cast<int>(get("depth", 2));
        cfg.branch = static_cast<int>(get("branch", 2));
        cfg.len = static_cast<int>(get("len", 6));
        return exp_ex5_deg2(cfg);
    }
    throw std::invalid_argument("unknown experiment: " + name);
}

std::string export_dot(const Graph& g, const LandmarkAtlas& atlas) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#a65628", "#f781bf", "#999999", "#66c2a5", "#ffd92f"};
    constexpr int kPalette = 10;
    std::vector<int> color(g.n, -1);
    for (size_t k = 0; k < atlas.sets.size(); ++k)
        for (int v : atlas.sets[k].second)
            if (v >= 0 && v < g.n && color[v] < 0) color[v] = static_cast<int>(k % kPalette);
    std::ostringstream out;
    out << "graph G {\n  node [style=filled, fillcolor=white, fontsize=10];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  v" << v + 1 << " [label=\""
            << (g.has_labels() ? g.labels[v] : std::to_string(v + 1)) << '"';
        if (color[v] >= 0) out << ", fillcolor=\"" << palette[color[v]] << '"';
        out << "];\n";
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << "  v" << u + 1 << " -- v" << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tdt
