#pragma once

#include <vector>

#include "edgeideal/common.hpp"

namespace edgeideal {

// Inclusion-minimal members, deduplicated, sorted with lex_less.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);
// Inclusion-maximal members, deduplicated, sorted with lex_less.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);
// Minimal sets meeting every member of `sets` (Berge multiplication).
// An empty family gives {∅}; a family containing ∅ gives no transversal.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets);

void sort_lex(std::vector<VertexSet>& sets);

}  // namespace edgeideal
