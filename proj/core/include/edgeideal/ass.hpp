#pragma once

#include <map>
#include <optional>
#include <vector>

#include "edgeideal/clutter.hpp"
#include "edgeideal/monomial.hpp"

namespace edgeideal {

PrimeSet ass_powers(const MonomialIdeal& I, unsigned t);

// c = b (x_a x_b)^{t-k-1}, b the product of the cycle vertices and x_a x_b the
// first cycle edge; G must be an odd cycle with optional leaves on it.
Monomial cycle_witness(const Clutter& g, unsigned t);

struct AssStarState {
  VertexSet red = 0;
  VertexSet blue = 0;
  VertexSet cover_rest = 0;
  unsigned t = 0;
};

// Embedded primes of I^t produced by odd-cycle seeding and outward growth.
// I may contain square-free quadrics, squares x^s (loops) and variables.
PrimeSet ass_star(const MonomialIdeal& I, unsigned t);
// The grown states (one per prime) behind ass_star, sorted.
std::vector<AssStarState> ass_star_states(const MonomialIdeal& I, unsigned t);

enum class Ntf { Yes, No, UnknownUpToT };
const char* ntf_name(Ntf v);

struct NtfResult {
  Ntf verdict = Ntf::UnknownUpToT;
  std::optional<unsigned> witness_t;
  unsigned window = 0;
  const char* reason = "";  // "bipartite", "totally unimodular", "symbolic power", "scan"
};
NtfResult ntf_check(const MonomialIdeal& I, unsigned t_max);

struct AssReport {
  std::map<unsigned, PrimeSet> per_t;
  unsigned window = 0;
  std::optional<unsigned> stable_index;  // within the window
  bool stability_proven = false;         // a known bound is inside the window
  bool chain_ok = true;
  NtfResult ntf;
};

AssReport stability_scan(const MonomialIdeal& I, unsigned t_max);
// n - k - s for connected non-bipartite graphs, otherwise 4.
unsigned default_tmax(const MonomialIdeal& I);
// The bound n - k - s when I is the edge ideal of a connected non-bipartite graph.
std::optional<unsigned> graph_stability_bound(const MonomialIdeal& I);

}  // namespace edgeideal
