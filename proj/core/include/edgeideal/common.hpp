#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideal {

// Vertex subsets of a ground set of at most 64 elements.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
inline constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

template <class F>
inline void for_each_bit(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_indices(VertexSet s);
VertexSet from_indices(const std::vector<int>& idx);

// Lexicographic order on increasing index lists: {1,2} < {1,2,3} < {1,3} < {2}.
bool lex_less(VertexSet a, VertexSet b);

enum class Errc {
  UnitGenerator,
  SquareFreeRequired,
  ResourceExceeded,
  SpernerViolation,
  EmptyEdge,
  GraphRequired,
  RangeError,
  ShapeMismatch,
  ParseError,
  UnknownSuite,
  Overflow,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  // The reason without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace edgeideal
