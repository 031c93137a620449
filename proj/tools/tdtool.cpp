// Command line front end: menger queries, decomposition verification,
// treewidth, the leanify loop, graph generators, and the named experiments.
// All files use 1-based vertex and bag ids; everything in-process is 0-based.

#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdt/decomp.hpp"
#include "tdt/experiments.hpp"
#include "tdt/gr_io.hpp"
#include "tdt/graph.hpp"
#include "tdt/leanify.hpp"
#include "tdt/menger.hpp"
#include "tdt/td_io.hpp"
#include "tdt/treewidth.hpp"
#include "tdt/verify.hpp"
#include "tdt/zoo.hpp"

namespace {

using namespace tdt;

std::string join1(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i] + 1);
    }
    return out;
}

std::string set1(const std::vector<int>& ids) { return "{" + join1(ids) + "}"; }

std::vector<int> to_internal(const std::vector<int>& ids1, int n, const char* what) {
    std::vector<int> out;
    out.reserve(ids1.size());
    for (int v : ids1) {
        if (v < 1 || v > n)
            throw std::runtime_error(std::string(what) + " id " + std::to_string(v) +
                                     " out of range 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return sorted_unique(std::move(out));
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_file(path, text);
}

int cmd_menger(const std::string& gr_path, const std::vector<int>& from1,
               const std::vector<int>& to1) {
    Graph g = parse_gr(read_file(gr_path));
    auto A = to_internal(from1, g.n, "--from");
    auto B = to_internal(to1, g.n, "--to");
    auto res = max_disjoint_paths(g, A, B);
    std::printf("k %d\n", res.k);
    for (const auto& p : res.fam.paths) std::printf("path %s\n", join1(p).c_str());
    std::printf("separator %s\n", join1(res.sep.X).c_str());
    return 0;
}

struct PropLine {
    std::string prop;
    bool pass = false;
    std::string witness;
};

PropLine run_prop(const std::string& prop, const Graph& g, const TreeDecomposition& td,
                  int root, int bag_cap, bool comparable_only) {
    PropLine out{prop, true, "-"};
    if (prop == "valid") {
        auto errs = validate_td(g, td);
        if (!errs.empty()) {
            out.pass = false;
            out.witness = errs.front();
            if (errs.size() > 1)
                out.witness += " (+" + std::to_string(errs.size() - 1) + " more)";
        }
    } else if (prop == "lean") {
        LeanOptions opt;
        opt.max_bag_cap = bag_cap;
        opt.comparable_only = comparable_only;
        opt.root = root;
        if (auto v = check_lean(g, td, opt)) {
            out.pass = false;
            out.witness = "bags " + std::to_string(v->s + 1) + "," + std::to_string(v->t + 1) +
                          " ell " + std::to_string(v->ell) + " Zs " + set1(v->Zs) + " Zt " +
                          set1(v->Zt) + " cut " + set1(v->X);
        }
    } else if (prop == "linked" || prop == "strongly-linked") {
        auto v = prop == "linked" ? check_linked(g, td, root)
                                  : check_strongly_linked(g, td);
        if (v) {
            out.pass = false;
            out.witness = "bags " + std::to_string(v->s + 1) + "," + std::to_string(v->t + 1) +
                          " need " + std::to_string(v->required) + " flow " +
                          std::to_string(v->flow) + " cut " + set1(v->X);
        }
    } else if (prop == "componental" || prop == "tight") {
        auto v = prop == "componental" ? check_componental(g, td, root)
                                       : check_tight(g, td, root);
        if (v) {
            out.pass = false;
            out.witness = "edge " + std::to_string(v->parent + 1) + "-" +
                          std::to_string(v->child + 1) + ": " + v->reason;
        }
    } else {
        throw std::runtime_error("unknown property: " + prop);
    }
    return out;
}

int cmd_verify(const std::string& gr_path, const std::string& td_path,
               const std::string& props_csv, int root1, int bag_cap, bool comparable_only,
               const std::string& report_path) {
    Graph g = parse_gr(read_file(gr_path));
    TreeDecomposition td = parse_td(read_file(td_path));
    int root = root1 > 0 ? root1 - 1 : -1;
    if (root >= td.num_nodes)
        throw std::runtime_error("--root " + std::to_string(root1) + " out of range");

    std::vector<std::string> props;
    std::string cur;
    for (char c : props_csv + ",") {
        if (c == ',') {
            if (!cur.empty()) props.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }

    std::string report;
    bool all = true;
    for (const auto& p : props) {
        auto line = run_prop(p, g, td, root, bag_cap, comparable_only);
        all = all && line.pass;
        report += line.prop + "\t" + (line.pass ? "pass" : "fail") + "\t" + line.witness + "\n";
    }
    emit(report_path, report);
    return all ? 0 : 1;
}

int cmd_tw(const std::string& gr_path, bool oracle, const std::string& out_td) {
    Graph g = parse_gr(read_file(gr_path));
    if (oracle) {
        std::printf("%d\n", treewidth_oracle(g));
        return 0;
    }
    auto res = treewidth_exact(g);
    std::printf("%d\n", res.width);
    if (!out_td.empty()) write_file(out_td, write_td(res.td));
    return 0;
}

int cmd_leanify(const std::string& gr_path, const std::string& td_path,
                const std::string& out_path, int max_iters, const std::string& trace_path,
                int bag_cap) {
    Graph g = parse_gr(read_file(gr_path));
    TreeDecomposition td0;
    if (!td_path.empty()) {
        td0 = parse_td(read_file(td_path));
    } else if (g.n <= TREEWIDTH_EXACT_MAX_N) {
        td0 = treewidth_exact(g).td;
    } else {
        throw std::runtime_error("graph has " + std::to_string(g.n) +
                                 " vertices; exact start is limited to " +
                                 std::to_string(TREEWIDTH_EXACT_MAX_N) +
                                 ", pass a .td file");
    }
    LeanifyOptions opt;
    opt.max_iters = max_iters;
    opt.lean.max_bag_cap = bag_cap;
    auto res = leanify_loop(g, td0, opt);
    write_file(out_path, write_td(res.td));
    if (!trace_path.empty()) {
        std::string trace;
        for (const auto& e : res.trace) {
            trace += std::to_string(e.iter) + "\t" + std::to_string(e.s + 1) + "," +
                     std::to_string(e.t + 1) + "," + std::to_string(e.ell) + "," +
                     std::to_string(e.sep_order) + "\t" + std::to_string(e.width_after) +
                     "\t" + fatness_to_string(e.fatness_after) + "\n";
        }
        write_file(trace_path, trace);
    }
    if (!res.lean) {
        std::fprintf(stderr, "iteration limit reached before the decomposition went lean\n");
        return 1;
    }
    std::printf("lean after %zu improvement%s, width %d\n", res.trace.size(),
                res.trace.size() == 1 ? "" : "s", width(res.td));
    return 0;
}

int cmd_gen(const std::string& family, const std::map<std::string, long long>& opts,
            double p, uint64_t seed, const std::string& out_gr,
            const std::string& out_labels, const std::string& out_atlas) {
    auto get = [&](const char* key, long long dflt) {
        auto it = opts.find(key);
        return it == opts.end() ? dflt : it->second;
    };
    Graph g;
    LandmarkAtlas atlas;
    bool has_atlas = true;
    if (family == "planar-witness") {
        PlanarWitnessConfig cfg;
        cfg.levels = (int)get("levels", cfg.levels);
        cfg.grids = (int)get("grids", cfg.grids);
        cfg.cols = (int)get("cols", cfg.cols);
        std::tie(g, atlas) = gen_planar_witness(cfg);
    } else if (family == "clique-rows") {
        CliqueRowsConfig cfg;
        cfg.width = (int)get("width", cfg.width);
        std::tie(g, atlas) = gen_clique_rows(cfg);
    } else if (family == "seq-tree") {
        SeqTreeConfig cfg;
        cfg.depth = (int)get("depth", cfg.depth);
        cfg.branch = (int)get("branch", cfg.branch);
        cfg.len = (int)get("len", cfg.len);
        std::tie(g, atlas) = gen_seq_tree(cfg);
    } else {
        has_atlas = false;
        long long n = get("n", -1);
        if (family == "path" || family == "cycle" || family == "clique") {
            if (n < 0) throw std::runtime_error(family + " needs --n");
            g = family == "path" ? gen_path((int)n)
                : family == "cycle" ? gen_cycle((int)n)
                                    : gen_clique((int)n);
        } else if (family == "grid") {
            g = gen_grid((int)get("rows", 3), (int)get("cols", 3));
        } else if (family == "random") {
            if (n < 0) throw std::runtime_error("random needs --n");
            g = gen_random((int)n, p, seed);
        } else {
            throw std::runtime_error("unknown family: " + family);
        }
    }
    write_file(out_gr, write_gr(g));
    if (!out_labels.empty()) {
        if (!g.has_labels()) throw std::runtime_error(family + " has no vertex labels");
        write_file(out_labels, write_labels(g));
    }
    if (!out_atlas.empty()) {
        if (!has_atlas) throw std::runtime_error(family + " has no landmark atlas");
        write_file(out_atlas, write_atlas(atlas));
    }
    std::printf("%s: %d vertices, %d edges -> %s\n", family.c_str(), g.n, g.num_edges(),
                out_gr.c_str());
    return 0;
}

int cmd_exp(const std::string& name, const std::map<std::string, long long>& params,
            const std::string& report_path) {
    auto report = run_experiment(name, params);
    emit(report_path, format_report(report));
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-decomposition toolkit"};
    app.require_subcommand(1);

    std::string gr_path, td_path, out_path, report_path, labels_path, atlas_path, trace_path;
    std::vector<int> from1, to1;
    std::string props = "valid,lean,linked,strongly-linked,tight,componental";
    int root1 = 0, bag_cap = 16, max_iters = -1;
    bool comparable_only = false, exact = false, oracle = false;
    double p = 0.5;
    uint64_t seed = 1;
    std::map<std::string, long long> opts;

    auto* menger = app.add_subcommand("menger", "maximum disjoint path family and minimum separator");
    menger->add_option("graph", gr_path, ".gr file")->required();
    menger->add_option("--from", from1, "source vertex ids")->required()->delimiter(',');
    menger->add_option("--to", to1, "target vertex ids")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "check decomposition properties");
    verify->add_option("graph", gr_path, ".gr file")->required();
    verify->add_option("td", td_path, ".td file")->required();
    verify->add_option("--props", props, "comma list of properties to check");
    verify->add_option("--root", root1, "root bag id for rooted properties");
    verify->add_option("--bag-cap", bag_cap, "largest bag the lean scan accepts");
    verify->add_flag("--comparable-only", comparable_only,
                     "lean check restricted to comparable bag pairs");
    verify->add_option("--report", report_path, "write the report here instead of stdout");

    auto* tw = app.add_subcommand("tw", "treewidth");
    tw->add_option("graph", gr_path, ".gr file")->required();
    tw->add_flag("--exact", exact, "subset dynamic program (default)");
    tw->add_flag("--oracle", oracle, "brute-force elimination orders, tiny graphs only");
    tw->add_option("-o", out_path, "also write an optimal-width .td (exact mode)");

    auto* leanify = app.add_subcommand("leanify", "improve until lean, width never grows");
    leanify->add_option("graph", gr_path, ".gr file")->required();
    leanify->add_option("td", td_path, "starting .td (default: exact optimal-width)");
    leanify->add_option("-o", out_path, "output .td")->required();
    leanify->add_option("--max-iters", max_iters, "stop after this many improvements");
    leanify->add_option("--trace", trace_path, "write one line per improvement here");
    leanify->add_option("--bag-cap", bag_cap, "largest bag the lean scan accepts");

    const std::vector<std::string> gen_keys{"levels", "grids", "cols", "width", "depth",
                                            "branch", "len", "n", "rows"};
    const std::vector<std::string> exp_keys{"levels", "grids", "cols", "n", "width", "m",
                                            "depth", "branch", "len"};

    auto* gen = app.add_subcommand("gen", "write a generated graph");
    gen->add_option("family", gr_path,
                    "planar-witness | clique-rows | seq-tree | path | cycle | clique | "
                    "grid | random")
        ->required();
    for (const auto& key : gen_keys) gen->add_option("--" + key, opts[key]);
    gen->add_option("--p", p, "edge probability (random)");
    gen->add_option("--seed", seed, "rng seed (random)");
    gen->add_option("-o", out_path, "output .gr")->required();
    gen->add_option("--labels", labels_path, "write the vertex label sidecar");
    gen->add_option("--atlas", atlas_path, "write the landmark atlas");

    auto* exp = app.add_subcommand("exp", "run a named experiment");
    exp->add_option("name", gr_path, "c31-cuts | c31-slink | ex3-bag | ex5-deg2")->required();
    for (const auto& key : exp_keys) exp->add_option("--" + key, opts[key]);
    exp->add_option("--report", report_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (menger->parsed()) return cmd_menger(gr_path, from1, to1);
        if (verify->parsed())
            return cmd_verify(gr_path, td_path, props, root1, bag_cap, comparable_only,
                              report_path);
        if (tw->parsed()) {
            if (exact && oracle) throw std::runtime_error("pick one of --exact / --oracle");
            return cmd_tw(gr_path, oracle, out_path);
        }
        if (leanify->parsed())
            return cmd_leanify(gr_path, td_path, out_path, max_iters, trace_path, bag_cap);
        if (gen->parsed()) {
            std::map<std::string, long long> set_opts;
            for (const auto& key : gen_keys)
                if (gen->count("--" + key)) set_opts[key] = opts[key];
            return cmd_gen(gr_path, set_opts, p, seed, out_path, labels_path, atlas_path);
        }
        if (exp->parsed()) {
            std::map<std::string, long long> set_opts;
            for (const auto& key : exp_keys)
                if (exp->count("--" + key)) set_opts[key] = opts[key];
            return cmd_exp(gr_path, set_opts, report_path);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
