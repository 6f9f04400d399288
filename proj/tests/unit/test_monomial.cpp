#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "edgeideal/clutter.hpp"
#include "edgeideal/monomial.hpp"

using namespace edgeideal;
using testing::ideal;
using testing::mono;

TEST_CASE("monomial arithmetic") {
  auto a = mono(3, "x1*x2^2");
  auto b = mono(3, "x2*x3");
  CHECK((a * b) == mono(3, "x1*x2^3*x3"));
  CHECK(lcm(a, b) == mono(3, "x1*x2^2*x3"));
  CHECK(gcd(a, b) == mono(3, "x2"));
  CHECK(a.degree() == 3);
  CHECK(to_string(a) == "x1*x2^2");
  CHECK(to_string(Monomial(3)) == "1");
  CHECK(b.divides(mono(3, "x1*x2*x3")));
  CHECK_FALSE(a.divides(b));
  CHECK(a.pow(3) == mono(3, "x1^3*x2^6"));
  CHECK((a * b).divide(b) == a);
}

TEST_CASE("exponent overflow is an error") {
  auto big = Monomial::variable(1, 0, 0xffffffffu);
  CHECK_THROWS_AS(big * Monomial::variable(1, 0), Error);
}

TEST_CASE("minimalize_generators") {
  auto I = minimalize_generators(3, {mono(3, "x1*x2"), mono(3, "x1*x2*x3")});
  CHECK(I.size() == 1);
  CHECK(I.generators()[0] == mono(3, "x1*x2"));
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  CHECK(C3.size() == 3);
  CHECK(C3.is_squarefree());
  CHECK_THROWS_AS(minimalize_generators(3, {Monomial(3)}), Error);
  CHECK(minimalize_generators(3, {}).is_zero());
  auto J = ideal(2, "x1^2*x2,x1*x2^2");
  CHECK_FALSE(J.is_squarefree());
}

TEST_CASE("the 25-generator graph ideal is already minimal") {
  auto c = parse_clutter(testing::data_file("gversusg.clutter"));
  CHECK(c.num_edges() == 25);
  CHECK(edge_ideal(c).size() == 25);
}

TEST_CASE("unit generator rejected by the parser") {
  CHECK_THROWS_AS(parse_ideal("vars 2\n1\n"), Error);
  try {
    parse_ideal("vars 2\n1\n");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnitGenerator);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_ideal("vars 3\nx1*x2\nx1^a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(parse_ideal("vars 2\nx3\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1\n"), ParseError);
}

TEST_CASE("ideal text round trip") {
  auto I = parse_ideal(testing::data_file("notchain.ideal"));
  CHECK_FALSE(I.is_squarefree());
  CHECK(I.size() == 5);
  auto text = format_ideal(I);
  CHECK(format_ideal(parse_ideal(text)) == text);
  CHECK(parse_ideal(text) == I);
}

TEST_CASE("powers") {
  auto P = ideal(2, "x1*x2");
  CHECK(power(P, 3) == ideal(2, "x1^3*x2^3"));
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  auto sq = power(C3, 2);
  CHECK(contains(sq, mono(3, "x1*x2^2*x3")));
  CHECK(sq.size() == 6);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 25; ++k) {
    auto I = testing::random_ideal(rng, 4, 4, 2);
    for (unsigned t = 1; t <= 3; ++t) CHECK(oracle::sorted_gens(power(I, t)) == oracle::power(I, t));
    CHECK(power(I, 3) == product(power(I, 1), power(I, 2)));
  }
}

TEST_CASE("colon") {
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  CHECK(colon(power(C3, 2), mono(3, "x1*x2*x3")) == testing::maximal_ideal(3));
  CHECK(colon(C3, Monomial(3)) == C3);
  auto C5 = edge_ideal(cycle_graph(5));
  CHECK(colon(power(C5, 3), testing::maximal_support(5)) == testing::maximal_ideal(5));
  CHECK_THROWS_AS(colon(C3, mono(3, "x1*x2")), Error);

  // m in (I : c) iff m c in I, on every monomial up to degree 3
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    auto I = testing::random_ideal(rng, 3, 4, 3);
    auto c = Monomial(std::vector<Exponent>{static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 2)});
    if (contains(I, c)) continue;
    auto J = colon(I, c);
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; a + b <= 3; ++b)
        for (unsigned d = 0; a + b + d <= 3; ++d) {
          Monomial m(std::vector<Exponent>{a, b, d});
          CHECK(contains(J, m) == oracle::member(oracle::gens_of(I), oracle::exps(m * c)));
        }
  }
}

TEST_CASE("membership") {
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  CHECK_FALSE(contains(power(C3, 2), mono(3, "x1*x2*x3")));
  CHECK(contains(power(C3, 2), mono(3, "x1^2*x2^2")));
  auto q6 = edge_ideal(parse_clutter(testing::data_file("q6.clutter")));
  CHECK_FALSE(contains(power(q6, 2), testing::maximal_support(6)));
}

TEST_CASE("intersection") {
  CHECK(intersect({ideal(2, "x1"), ideal(2, "x2")}) == ideal(2, "x1*x2"));
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  CHECK(intersect({ideal(3, "x1,x2"), ideal(3, "x2,x3"), ideal(3, "x1,x3")}) == C3);
  auto q6 = edge_ideal(parse_clutter(testing::data_file("q6.clutter")));
  std::vector<MonomialIdeal> comps;
  for (VertexSet e : alexander_dual(q6).support_masks()) {
    std::vector<VertexSet> vars;
    for_each_bit(e, [&](int v) { vars.push_back(bit(v)); });
    comps.push_back(squarefree_ideal(6, vars));
  }
  // intersecting the primes of the minimal covers gives the edge ideal back
  CHECK(intersect(comps) == q6);
}

TEST_CASE("irreducible decomposition") {
  auto d1 = irreducible_decomposition(ideal(2, "x1*x2"));
  CHECK(d1.size() == 2);
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  CHECK(irreducible_decomposition(C3).size() == 3);
  auto J = ideal(2, "x1^2*x2,x1*x2^2");
  auto d = irreducible_decomposition(J);
  REQUIRE(d.size() == 3);
  std::vector<MonomialIdeal> parts;
  for (const auto& c : d) parts.push_back(c.to_ideal());
  CHECK(intersect(parts) == J);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    auto I = testing::random_ideal(rng, 4 + k % 3, 3 + k % 4, 3);
    auto box = irreducible_decomposition(I);
    auto split = irreducible_decomposition_by_splitting(I);
    std::sort(box.begin(), box.end());
    std::sort(split.begin(), split.end());
    CHECK(box == split);
    std::vector<MonomialIdeal> comps;
    for (const auto& c : box) comps.push_back(c.to_ideal());
    CHECK(intersect(comps) == I);
    // irredundant: dropping any component gives a larger ideal
    for (std::size_t i = 0; i < comps.size() && comps.size() > 1; ++i) {
      auto rest = comps;
      rest.erase(rest.begin() + static_cast<long>(i));
      CHECK_FALSE(intersect(rest) == I);
    }
  }
}

TEST_CASE("associated primes agree with colon witnesses") {
  auto notchain = parse_ideal(testing::data_file("notchain.ideal"));
  CHECK(associated_primes(notchain).contains(full_set(5)));
  auto C3 = ideal(3, "x1*x2,x2*x3,x1*x3");
  auto ass = associated_primes(power(C3, 2));
  auto expect = minimal_primes(C3);
  expect.insert(full_set(3));
  CHECK(ass == expect);
  auto C4 = edge_ideal(cycle_graph(4));
  for (unsigned t = 1; t <= 3; ++t) CHECK(associated_primes(power(C4, t)) == minimal_primes(C4));

  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    auto I = testing::random_ideal(rng, 3 + k % 3, 2 + k % 4, 3);
    auto lib = associated_primes(I);
    auto ref = oracle::associated_primes(I);
    CHECK(ref.size() == lib.size());
    for (VertexSet p : ref) CHECK(lib.contains(p));
  }
}

TEST_CASE("symbolic powers") {
  auto C4 = edge_ideal(cycle_graph(4));
  CHECK(symbolic_power(C4, 2) == power(C4, 2));
  auto C3 = edge_ideal(cycle_graph(3));
  CHECK(contains(symbolic_power(C3, 2), testing::maximal_support(3)));
  CHECK_FALSE(contains(power(C3, 2), testing::maximal_support(3)));
  CHECK(symbolic_power(C3, 1) == C3);
  CHECK_THROWS_AS(symbolic_power(ideal(2, "x1^2"), 2), Error);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    auto I = testing::random_squarefree(rng, 5, 4);
    auto covers = oracle::minimal_covers(I);
    for (unsigned t = 2; t <= 3; ++t) {
      auto S = symbolic_power(I, t);
      CHECK(contains(S, power(I, t)));
      for (const auto& g : S.generators()) {
        auto e = oracle::exps(g);
        CHECK(oracle::in_symbolic_power(covers, e, t));
        // minimal: lowering any exponent leaves the symbolic power
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i]) {
            auto f = e;
            --f[i];
            CHECK_FALSE(oracle::in_symbolic_power(covers, f, t));
          }
      }
    }
  }
}

TEST_CASE("Alexander duality") {
  auto C3 = edge_ideal(cycle_graph(3));
  CHECK(alexander_dual(C3) == C3);
  auto C4 = edge_ideal(cycle_graph(4));
  CHECK(alexander_dual(C4) == ideal(4, "x1*x3,x2*x4"));
  auto q6 = edge_ideal(parse_clutter(testing::data_file("q6.clutter")));
  CHECK(alexander_dual(alexander_dual(q6)) == q6);
  CHECK_THROWS_AS(alexander_dual(ideal(2, "x1^2")), Error);
}

TEST_CASE("linear quotients") {
  auto C3 = edge_ideal(cycle_graph(3));
  auto lq = has_linear_quotients(C3);
  CHECK(lq.has);
  CHECK(lq.order.size() == 3);
  CHECK(has_linear_quotients(ideal(3, "x1*x2*x3")).has);
  CHECK_FALSE(has_linear_quotients(edge_ideal(cycle_graph(6))).has);
  CHECK_FALSE(has_linear_quotients(edge_ideal(cycle_graph(5))).has);

  // the witness order really has linear quotients
  auto K4 = edge_ideal(complete_graph(4));
  auto r = has_linear_quotients(K4);
  REQUIRE(r.has);
  const auto& g = K4.generators();
  for (std::size_t i = 1; i < r.order.size(); ++i) {
    std::vector<Monomial> prev;
    for (std::size_t j = 0; j < i; ++j) prev.push_back(g[r.order[j]]);
    auto q = colon(minimalize_generators(4, prev), g[r.order[i]]);
    for (const auto& m : q.generators()) CHECK(m.degree() == 1);
  }
}
