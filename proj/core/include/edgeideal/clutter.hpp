#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/common.hpp"
#include "edgeideal/monomial.hpp"

namespace edgeideal {

// A ground set {0..n-1} with a Sperner family of nonempty edges.
class Clutter {
 public:
  Clutter() = default;
  // Discrete clutter on n vertices.
  explicit Clutter(int n);

  // Validating constructor: rejects empty and comparable edges.
  static Clutter build(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {});
  // Keeps only the inclusion-minimal edges.
  static Clutter minimalize_edges(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  VertexSet vertex_set() const { return full_set(n_); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  bool is_graph() const;  // every edge has two vertices (vacuous for no edges)
  std::optional<int> uniform_degree() const;
  int max_edge_size() const;
  // Vertices adjacent to v (graphs).
  VertexSet neighbors(int v) const;
  VertexSet isolated_vertices() const;

  friend bool operator==(const Clutter& a, const Clutter& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::string> labels_;
};

Clutter graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);  // 0-based
Clutter cycle_graph(int n);
Clutter complete_graph(int n);
Clutter path_graph(int n);
Clutter complement_graph(const Clutter& g);
// Disjoint union; the second clutter's vertices are shifted by a.num_vertices().
Clutter disjoint_union(const Clutter& a, const Clutter& b);

MonomialIdeal edge_ideal(const Clutter& c);
Clutter clutter_of(const MonomialIdeal& I);  // square-free ideals only

Clutter blocker(const Clutter& c);

struct InvariantRecord {
  int alpha0 = 0;
  int beta0 = 0;
  int beta1 = 0;
  int im = 0;
  std::optional<int> beta_prime;  // graphs only
  int alpha0_prime = 0;
  int beta0_prime = 0;
};

InvariantRecord cover_invariants(const Clutter& c);
int covering_number(const Clutter& c);
int matching_number(const Clutter& c);
int induced_matching_number(const Clutter& c);
int min_maximal_matching(const Clutter& c);  // GraphRequired

// Deletion sets x_i = 0, contraction sets x_i = 1; the result lives on the
// remaining vertices, relabelled in increasing order.  A contraction that
// empties an edge yields the unit ideal and raises EmptyEdge.
Clutter minor(const Clutter& c, VertexSet del, VertexSet con);
// Edges of c inside S, on the vertex set S (relabelled in increasing order).
Clutter induced(const Clutter& c, VertexSet s);

struct StructureFlags {
  std::optional<bool> bipartite;  // graph-only flags are empty for non-graphs
  std::optional<bool> chordal;
  std::optional<bool> weakly_chordal;
  std::optional<bool> perfect;
  std::optional<int> uniform_d;
  bool balanced = false;
  bool totally_balanced = false;
  bool diadic = false;
  bool binary = false;
  std::optional<bool> b_graph;
};

StructureFlags structure_flags(const Clutter& c);
bool is_bipartite(const Clutter& g);
bool is_chordal(const Clutter& g);
bool is_chordal_by_cycles(const Clutter& g);  // induced-cycle enumeration route
bool is_weakly_chordal(const Clutter& g);
bool is_perfect(const Clutter& g);
bool is_balanced(const Clutter& c);
bool is_totally_balanced(const Clutter& c);
bool is_diadic(const Clutter& c);
bool is_binary(const Clutter& c);
bool is_b_graph(const Clutter& g);
bool is_forest(const Clutter& g);
bool is_connected(const Clutter& g);

// Induced cycles of length >= 3, each listed in cyclic order starting at its
// smallest vertex, with the smaller of the two neighbours second.
std::vector<std::vector<int>> induced_cycles(const Clutter& g, int min_len = 3);

struct KonigPacking {
  bool konig = false;
  bool packing = false;
  std::optional<Clutter> witness;
  VertexSet witness_deleted = 0;
  VertexSet witness_contracted = 0;
};
KonigPacking konig_and_packing(const Clutter& c);
bool is_konig(const Clutter& c);

struct OddCycleData {
  std::optional<int> smallest_odd_cycle_length;
  std::vector<std::vector<int>> induced_odd_cycles;
  std::vector<int> leaves;
  std::vector<VertexSet> neighbor_map;
};
OddCycleData odd_cycle_data(const Clutter& g);

struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // 0-based (tail, head)
};

// Generated by x_{i1}...x_{it} over directed paths of t distinct vertices.
MonomialIdeal path_ideal(const Digraph& d, int t);

// File format: header "vertices n", then one edge per line as 1-based indices
// or labels.  Lines with "->" are arcs of a digraph.
Clutter parse_clutter(const std::string& text);
std::string format_clutter(const Clutter& c);
Digraph parse_digraph(const std::string& text);
std::string edge_string(const Clutter& c, VertexSet e);

}  // namespace edgeideal
