#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "edgeideal/clutter.hpp"

namespace edgeideal {

// Rows are vertices, columns are edges.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Clutter& c);
  int rows() const { return n_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const std::vector<VertexSet>& column_supports() const { return cols_; }
  int at(int i, int j) const { return (cols_[static_cast<std::size_t>(j)] >> i) & 1; }

 private:
  int n_;
  std::vector<VertexSet> cols_;
};

using RationalPoint = std::vector<mpq_class>;
std::string to_string(const RationalPoint& p);
bool is_integral(const RationalPoint& p);

// Vertices of Q(A) = {x >= 0 : xA >= 1}, sorted.
std::vector<RationalPoint> vertices_Q(const IncidenceMatrix& a);
// Vertices of P(A) = {x >= 0 : xA <= 1}, sorted.
std::vector<RationalPoint> vertices_P(const IncidenceMatrix& a);

struct IntegralityReport {
  bool q_integral = false;
  bool p_integral = false;
  std::optional<RationalPoint> fractional_witness;    // a fractional vertex of Q(A)
  std::optional<RationalPoint> p_fractional_witness;  // a fractional vertex of P(A)
};
IntegralityReport integrality_report(const Clutter& c);

struct TuResult {
  bool unimodular = true;
  std::vector<int> rows;  // violating submatrix when not unimodular
  std::vector<int> cols;
  long long determinant = 0;
};
TuResult is_totally_unimodular(const IncidenceMatrix& a);

struct FractionalCover {
  mpq_class cover_lp_value;     // min over vertices of Q(A)
  mpq_class matching_lp_value;  // max{1·y : y >= 0, Ay <= 1} by exact simplex
  RationalPoint cover_optimum;
};
FractionalCover fractional_cover(const IncidenceMatrix& a);

// max c·y subject to M y <= b, y >= 0, with b >= 0 (exact, Bland's rule).
mpq_class simplex_max(const std::vector<std::vector<mpq_class>>& m, const std::vector<mpq_class>& b,
                      const std::vector<mpq_class>& c);

// Exact determinant of a small integer matrix (Bareiss).
long long determinant(std::vector<std::vector<long long>> m);

}  // namespace edgeideal
