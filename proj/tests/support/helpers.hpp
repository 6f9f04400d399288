#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "edgeideal/clutter.hpp"
#include "edgeideal/monomial.hpp"

namespace testing {

inline edgeideal::Monomial mono(std::size_t n, const std::string& s) { return edgeideal::parse_monomial(s, n); }

// "x1*x2, x2*x3" in n variables
inline edgeideal::MonomialIdeal ideal(std::size_t n, const std::string& gens) {
  std::string text = "vars " + std::to_string(n) + "\n";
  std::stringstream in(gens);
  std::string g;
  while (std::getline(in, g, ',')) text += g + "\n";
  return edgeideal::parse_ideal(text);
}

inline std::string data_file(const std::string& name) {
  std::ifstream f(std::string(EDGEIDEAL_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline edgeideal::Monomial maximal_support(std::size_t n) { return edgeideal::Monomial::from_support(n, edgeideal::full_set(static_cast<int>(n))); }

inline edgeideal::MonomialIdeal maximal_ideal(std::size_t n) {
  std::vector<edgeideal::VertexSet> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(edgeideal::bit(static_cast<int>(i)));
  return edgeideal::squarefree_ideal(n, v);
}

// Random monomial ideal with small exponents.
inline edgeideal::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t gens, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<edgeideal::Monomial> g;
  while (g.size() < gens) {
    std::vector<edgeideal::Exponent> x(n);
    for (auto& v : x) v = e(rng);
    edgeideal::Monomial m(x);
    if (!m.is_unit()) g.push_back(m);
  }
  return edgeideal::minimalize_generators(n, g);
}

inline edgeideal::MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t n, std::size_t gens) {
  std::uniform_int_distribution<edgeideal::VertexSet> s(1, edgeideal::full_set(static_cast<int>(n)));
  std::vector<edgeideal::VertexSet> sup;
  for (std::size_t i = 0; i < gens; ++i) sup.push_back(s(rng));
  return edgeideal::squarefree_ideal(n, sup);
}

}  // namespace testing
