#pragma once

#include <string>

#include "ebi/bipartite.hpp"

namespace ebi {

// Graphviz text for a labeling: two same-rank node rows (a0..ap-1 above
// b0..bq-1), 1-edges bold, zero-class vertices filled, unlabeled vertices
// dashed. Output is deterministic for identical inputs.
std::string export_dot(const Labeling& labeling);

}  // namespace ebi
