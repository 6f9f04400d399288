#pragma once

#include <cstddef>
#include <string>

namespace edgeideal {

// Resource guards. Defaults can be overridden with the EDGEIDEAL_LIMITS
// environment variable, e.g. EDGEIDEAL_LIMITS="power_generators=500000,betti_n=18".
struct Limits {
  std::size_t power_generators = 200000;
  std::size_t box_cells = std::size_t{1} << 24;
  std::size_t components = 200000;
  int linear_quotient_generators = 12;
  int cover_n = 24;
  int structure_n = 14;
  int perfect_n = 12;
  int packing_n = 14;
  std::size_t homology_faces = std::size_t{1} << 20;
  int betti_n = 16;
  int shellable_facets = 40;
  int ass_star_n = 14;
  int polyhedra_n = 12;
  int tu_min_dim = 12;

  // Parses "key=value,key=value"; unknown keys raise InvalidArgument.
  void apply(const std::string& spec);
};

// Process-wide limits, initialised from the environment on first use.
Limits& limits();

}  // namespace edgeideal
