#pragma once

#include <string>
#include <string_view>

#include "ebi/bipartite.hpp"

namespace ebi {

// Canonical text form: "p q\n" then p rows of exactly q characters from
// {0,1}, each row newline-terminated, nothing else.
std::string serialize_labeling(const Labeling& labeling);

// Strict inverse of serialize_labeling. A missing newline on the final row
// is tolerated; every other deviation raises parse_error with the 1-based
// offending line.
Labeling parse_labeling(std::string_view text);

// JSON object with keys e0, e1, v0, v1, unlabeled, index, edge_friendly,
// in exactly that order.
std::string evaluation_to_json(const Evaluation& eval);

}  // namespace ebi
