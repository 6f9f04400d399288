#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edgeideal/clutter.hpp"
#include "edgeideal/common.hpp"

namespace edgeideal {

// Facet list over the ground set {0..n-1}.  The void complex has no faces at
// all; the empty complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_complex(int n);
  static SimplicialComplex simplex(int n, VertexSet s);
  // Keeps the inclusion-maximal members of `faces`.
  static SimplicialComplex from_faces(int n, std::vector<VertexSet> faces);

  int num_vertices() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  // -1 for {∅}; the void complex reports -2.
  int dimension() const;
  bool is_pure() const;
  bool contains(VertexSet face) const;
  VertexSet vertices() const;
  // All faces, grouped by size: levels()[k] holds the faces with k vertices in
  // increasing mask order.
  std::vector<std::vector<VertexSet>> levels() const;
  std::size_t num_faces() const;
  // f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

SimplicialComplex independence_complex(const Clutter& c);
SimplicialComplex skeleton(const SimplicialComplex& d, int i);
SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i);
SimplicialComplex link(const SimplicialComplex& d, VertexSet face);
SimplicialComplex deletion(const SimplicialComplex& d, int v);

struct CoefficientField {
  unsigned characteristic = 0;  // 0 for the rationals, otherwise a prime

  static CoefficientField rationals() { return {0}; }
  static CoefficientField prime(unsigned p);
  std::string name() const;
  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

// Ranks of reduced homology H̃_k for k = -1..dim (empty for the void complex).
std::vector<std::size_t> reduced_homology(const SimplicialComplex& d, CoefficientField f);
// Same from an explicit face list grouped by size (levels[0] = {∅}).
std::vector<std::size_t> reduced_homology_of_levels(const std::vector<std::vector<VertexSet>>& levels,
                                                    CoefficientField f);

// Rank of a sparse integer matrix given as rows of (column, value) pairs with
// increasing columns; exact over the given field.
std::size_t sparse_rank(std::vector<std::vector<std::pair<int, long long>>> rows, CoefficientField f);

}  // namespace edgeideal
