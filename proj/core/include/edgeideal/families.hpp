#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "edgeideal/clutter.hpp"

namespace edgeideal {

// One representative per isomorphism class, on exactly n vertices (isolated
// vertices allowed).  Results are cached and deterministic.
const std::vector<Clutter>& graphs(int n);        // n <= 9
const std::vector<Clutter>& clutters(int n);      // n <= 6, includes the discrete clutter
// Canonical representative of the isomorphism class.
Clutter canonical_graph(const Clutter& g);
Clutter canonical_clutter(const Clutter& c);    // n <= 8

// Seeded random clutters on n vertices: edge count and edge sizes vary, edges
// are minimalized, duplicates up to isomorphism removed.
std::vector<Clutter> random_clutters(int n, std::size_t count, std::uint64_t seed);
std::vector<Clutter> random_graphs(int n, std::size_t count, std::uint64_t seed);
// Random d-uniform clutters on n vertices.
std::vector<Clutter> random_uniform_clutters(int n, int d, std::size_t count, std::uint64_t seed);

// All d-uniform clutters on n vertices up to isomorphism, when d is in
// {1, 2, n-2, n-1, n}; the n-2 case is the complement image of graphs(n).
// Empty otherwise.
std::vector<Clutter> uniform_clutters(int n, int d);
bool uniform_exhaustive(int n, int d);

// Graphs on at most n vertices (all sizes 1..n) satisfying pred.
std::vector<Clutter> graphs_up_to(int n, const std::function<bool(const Clutter&)>& pred);
std::vector<Clutter> clutters_up_to(int n, const std::function<bool(const Clutter&)>& pred);

}  // namespace edgeideal
