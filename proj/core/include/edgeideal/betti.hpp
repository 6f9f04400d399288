#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/monomial.hpp"

namespace edgeideal {

// Graded Betti numbers of R/I, indexed by (homological degree i, internal degree j).
struct BettiTable {
  CoefficientField field;
  int nvars = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries;  // nonzero values only

  std::uint64_t at(int i, int j) const;
  int regularity() const;
  int projective_dimension() const;
  std::uint64_t total(int i) const;
  // Triangular layout: rows j - i, columns i.
  std::string to_text() const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

// Hochster's formula over all restrictions of the Stanley-Reisner complex.
BettiTable betti_table(const MonomialIdeal& I, CoefficientField f);

struct HomologicalInvariants {
  int reg = 0;
  int pd = 0;
  int depth = 0;
  int dim = 0;
};
HomologicalInvariants homological_invariants(const MonomialIdeal& I, CoefficientField f);
HomologicalInvariants homological_invariants(const BettiTable& t, const MonomialIdeal& I);

struct HilbertData {
  std::vector<long long> h;  // h-polynomial coefficients, constant term first
  int dim = 0;               // Krull dimension, exponent of (1 - t) in the denominator
  long long multiplicity = 0;
  int a_invariant = 0;
  std::size_t arith_deg = 0;
};
HilbertData hilbert_data(const Clutter& c);
HilbertData hilbert_data(const SimplicialComplex& d);

}  // namespace edgeideal
