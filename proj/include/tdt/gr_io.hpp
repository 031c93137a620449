#pragma once

#include <string>

#include "tdt/graph.hpp"

namespace tdt {

// PACE-style .gr text: comment lines "c ...", one header "p tw <n> <m>",
// then m edge lines "<u> <v>" with 1-based ids. Labels travel in a separate
// sidecar file ("<1-based id>\t<label>" per line), never inside the .gr.
Graph parse_gr(const std::string& text);
std::string write_gr(const Graph& g);

std::string write_labels(const Graph& g);
void parse_labels(const std::string& text, Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tdt
