#pragma once

#include "edgeideal/complex.hpp"

namespace edgeideal {

struct RingProperties {
  bool cm = false;
  bool scm = false;
  bool shellable = false;
  bool vertex_decomposable = false;
  bool connected_codim1 = false;
  bool unmixed = false;
};

RingProperties ring_properties(const Clutter& c, CoefficientField f);

// Reisner's criterion over f.
bool is_cohen_macaulay(const SimplicialComplex& d, CoefficientField f);
// Duval: every pure skeleton is Cohen-Macaulay.
bool is_sequentially_cm(const SimplicialComplex& d, CoefficientField f);
// 1 + max{ i : K[Δ^i] is Cohen-Macaulay }.
int depth_by_skeletons(const SimplicialComplex& d, CoefficientField f);
bool is_shellable(const SimplicialComplex& d);
// A shelling order (facet indices) when one exists.
std::vector<std::size_t> shelling_order(const SimplicialComplex& d);
bool is_vertex_decomposable(const SimplicialComplex& d);
bool is_connected_in_codim1(const SimplicialComplex& d);

}  // namespace edgeideal
