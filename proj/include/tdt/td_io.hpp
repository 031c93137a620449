#pragma once

#include <string>

#include "tdt/decomp.hpp"

namespace tdt {

// PACE-style .td text: comment lines "c ...", one header
// "s td <#bags> <max-bag-size> <n>", bag lines "b <id> <v...>" (1-based),
// then #bags-1 tree edge lines "<b1> <b2>". The root is not part of the
// format; rooted tools take it as a flag.
TreeDecomposition parse_td(const std::string& text);
std::string write_td(const TreeDecomposition& td);

}  // namespace tdt
