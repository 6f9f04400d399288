#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/common.hpp"

namespace edgeideal {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial from_support(std::size_t nvars, VertexSet s);
  static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  bool is_squarefree() const;
  VertexSet support() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t t) const;
  // Exact quotient; the divisor must divide *this.
  Monomial divide(const Monomial& d) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Graded order used for printing: lower degree first, then x1 > x2 > ...
bool graded_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // The zero ideal in nvars variables.
  explicit MonomialIdeal(std::size_t nvars) : n_(nvars) {}

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const { return squarefree_; }

  // Largest exponent of each variable over the generators.
  std::vector<Exponent> max_exponents() const;
  VertexSet support() const;
  // Generator supports; only meaningful for square-free ideals.
  std::vector<VertexSet> support_masks() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize_generators(std::size_t, std::vector<Monomial>);
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
  bool squarefree_ = true;
};

// A monomial prime (x_i : i in support).
struct MonomialPrime {
  VertexSet support = 0;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

// Duplicate-free, sorted lexicographically on index lists.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<VertexSet> supports);

  void insert(VertexSet s);
  void merge(const PrimeSet& other);
  bool contains(VertexSet s) const;
  bool includes(const PrimeSet& other) const;
  const std::vector<VertexSet>& supports() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<VertexSet> primes_;
};

std::string to_string(const PrimeSet& p);

// An irreducible ideal (x_i^{a_i} : a_i > 0); powers[i] == 0 means x_i is absent.
struct IrreducibleIdeal {
  std::vector<Exponent> powers;
  VertexSet radical() const;
  MonomialIdeal to_ideal() const;
  friend auto operator<=>(const IrreducibleIdeal&, const IrreducibleIdeal&) = default;
};

MonomialIdeal minimalize_generators(std::size_t nvars, std::vector<Monomial> gens);
MonomialIdeal squarefree_ideal(std::size_t nvars, const std::vector<VertexSet>& supports);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& I, unsigned t);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& c);
MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals);
bool contains(const MonomialIdeal& I, const Monomial& m);
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);  // J ⊆ I

std::vector<IrreducibleIdeal> irreducible_decomposition(const MonomialIdeal& I);
// Recursive splitting x^a m' -> (I + x^a) ∩ (I + m'); the fallback route.
std::vector<IrreducibleIdeal> irreducible_decomposition_by_splitting(const MonomialIdeal& I);

PrimeSet associated_primes(const MonomialIdeal& I);
PrimeSet minimal_primes(const MonomialIdeal& I);

MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned t);
MonomialIdeal alexander_dual(const MonomialIdeal& I);

struct LinearQuotients {
  bool has = false;
  // Generator indices (into I.generators()) in a valid order when has == true.
  std::vector<std::size_t> order;
  // Number of generator subsets explored before giving up.
  std::size_t states_explored = 0;
};
LinearQuotients has_linear_quotients(const MonomialIdeal& I);

// Text format: header "vars n", then one generator per line ("x3*x5^2").
// Blank lines and '#' comments are ignored on input.
MonomialIdeal parse_ideal(const std::string& text);
std::string format_ideal(const MonomialIdeal& I);
Monomial parse_monomial(const std::string& text, std::size_t nvars);

}  // namespace edgeideal
