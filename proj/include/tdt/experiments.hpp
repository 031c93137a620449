#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tdt/graph.hpp"
#include "tdt/zoo.hpp"

namespace tdt {

// One checked integer fact. `statement` says in words what the row verifies;
// booleans are reported as 1/0.
struct Claim {
    std::string id;
    std::string statement;
    long long expected = 0;
    long long computed = 0;
    bool pass = false;
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, long long>> config;
    std::vector<Claim> claims;
    long long ms = 0;

    bool all_pass() const;
};

// "experiment <name>", one "cfg <key> <value>" per config entry, one
// "<id>\t<expected>\t<computed>\t<pass|fail>" per claim, then "time <ms>".
// Everything except the time line is reproducible run to run.
std::string format_report(const ExperimentReport& report);

// Separator structure around grid region n of the planar witness graph.
ExperimentReport exp_c31_cuts(const PlanarWitnessConfig& cfg, int n);

// Gap between a grid column's size and its outward connectivity.
ExperimentReport exp_c31_slink(const PlanarWitnessConfig& cfg, int n);

// Leanness failure inside a single bag of a handcrafted decomposition of the
// clique-rows graph.
ExperimentReport exp_ex3_bag(const CliqueRowsConfig& cfg, int m);

// Census of order-2 separators between the root entry and the deepest
// frontier of the strip tree.
ExperimentReport exp_ex5_deg2(const SeqTreeConfig& cfg);

// Dispatch by name ("c31-cuts", "c31-slink", "ex3-bag", "ex5-deg2") with
// per-experiment defaults; unknown names or keys are rejected.
ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, long long>& params);

// Graphviz dump; vertices get one fill color per landmark set, first set
// containing a vertex wins.
std::string export_dot(const Graph& g, const LandmarkAtlas& atlas);

}  // namespace tdt
