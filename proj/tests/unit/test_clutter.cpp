#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "edgeideal/clutter.hpp"
#include "edgeideal/families.hpp"

using namespace edgeideal;

namespace {

Clutter q6() { return parse_clutter(testing::data_file("q6.clutter")); }

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> l) {
  std::vector<VertexSet> out;
  for (auto e : l) {
    VertexSet s = 0;
    for (int v : e) s |= bit(v - 1);
    out.push_back(s);
  }
  return sorted(out);
}

// brute-force reference values on 2^n subsets
struct Brute {
  int alpha0 = 0, beta0 = 0, beta1 = 0, im = 0, alpha0p = 0, beta0p = 0;
};

Brute brute(const Clutter& c) {
  int n = c.num_vertices();
  const auto& E = c.edges();
  Brute b;
  auto is_cover = [&](VertexSet s) {
    return std::all_of(E.begin(), E.end(), [&](VertexSet e) { return (e & s) != 0; });
  };
  auto independent = [&](VertexSet s) {
    return std::none_of(E.begin(), E.end(), [&](VertexSet e) { return is_subset(e, s); });
  };
  b.alpha0 = E.empty() ? 0 : n;
  b.beta0p = n;
  for (VertexSet s = 0; s <= full_set(n); ++s) {
    if (is_cover(s)) {
      b.alpha0 = std::min(b.alpha0, popcount(s));
      bool minimal = true;
      for_each_bit(s, [&](int v) { minimal = minimal && !is_cover(s & ~bit(v)); });
      if (minimal) b.alpha0p = std::max(b.alpha0p, popcount(s));
    }
    if (independent(s)) {
      b.beta0 = std::max(b.beta0, popcount(s));
      bool maximal = true;
      for (int v = 0; v < n; ++v)
        if (!(s & bit(v)) && independent(s | bit(v))) maximal = false;
      if (maximal) b.beta0p = std::min(b.beta0p, popcount(s));
    }
  }
  if (E.empty()) b.alpha0p = 0;
  for (std::uint32_t pick = 1; pick < (1u << E.size()); ++pick) {
    VertexSet used = 0;
    bool disjoint = true;
    int k = 0;
    for (std::size_t i = 0; i < E.size(); ++i)
      if (pick >> i & 1) {
        disjoint = disjoint && !(used & E[i]);
        used |= E[i];
        ++k;
      }
    if (!disjoint) continue;
    b.beta1 = std::max(b.beta1, k);
    int inside = 0;
    for (VertexSet e : E) inside += is_subset(e, used);
    if (inside == k) b.im = std::max(b.im, k);
  }
  return b;
}

// kept vertices are renumbered in order
VertexSet squeeze(VertexSet e, VertexSet keep) {
  VertexSet out = 0;
  int k = 0;
  for_each_bit(keep, [&](int v) {
    if (e & bit(v)) out |= bit(k);
    ++k;
  });
  return out;
}

std::vector<VertexSet> brute_contract(const Clutter& c, VertexSet del, VertexSet con) {
  std::vector<VertexSet> out;
  VertexSet keep = c.vertex_set() & ~(del | con);
  for (VertexSet e : c.edges()) {
    if (e & del) continue;
    out.push_back(squeeze(e & ~con, keep));
  }
  std::vector<VertexSet> min;
  for (VertexSet e : out) {
    bool keep = true;
    for (VertexSet f : out)
      if (f != e && is_subset(f, e)) keep = false;
    if (keep && std::find(min.begin(), min.end(), e) == min.end()) min.push_back(e);
  }
  return sorted(min);
}

}  // namespace

TEST_CASE("build validates the Sperner condition") {
  CHECK(q6().uniform_degree() == 3);
  CHECK_THROWS_AS(Clutter::build(3, sets({{1, 2}, {1, 2, 3}})), Error);
  try {
    Clutter::build(3, sets({{1, 2}, {1, 2, 3}}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpernerViolation);
  }
  try {
    Clutter::build(3, {VertexSet{0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyEdge);
  }
  CHECK(cycle_graph(5).is_graph());
  CHECK(Clutter::minimalize_edges(3, sets({{1, 2}, {1, 2, 3}})).num_edges() == 1);
}

TEST_CASE("blocker") {
  CHECK(sorted(blocker(cycle_graph(3)).edges()) == sets({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(sorted(blocker(cycle_graph(4)).edges()) == sets({{1, 3}, {2, 4}}));
  CHECK(sorted(blocker(q6()).edges()) ==
        sets({{1, 6}, {2, 4}, {3, 5}, {1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {4, 5, 6}}));
  for (const auto& c : clutters(5)) {
    if (c.num_edges() == 0) continue;
    auto b = blocker(c);
    CHECK(sorted(blocker(b).edges()) == sorted(c.edges()));
    CHECK(sorted(b.edges()) == sorted(oracle::minimal_covers(edge_ideal(c))));
    CHECK(edge_ideal(b) == alexander_dual(edge_ideal(c)));
  }
}

TEST_CASE("cover invariants") {
  auto r = cover_invariants(cycle_graph(3));
  CHECK(r.alpha0 == 2);
  CHECK(r.beta0 == 1);
  CHECK(r.beta1 == 1);
  CHECK(r.im == 1);
  CHECK(r.beta_prime == 1);
  CHECK(r.alpha0_prime == 2);
  CHECK(r.beta0_prime == 1);
  CHECK(cover_invariants(cycle_graph(6)).alpha0_prime == 4);
  auto q = cover_invariants(q6());
  CHECK(q.alpha0 == 2);
  CHECK(q.beta1 == 1);
  CHECK_FALSE(cover_invariants(q6()).beta_prime.has_value());
  CHECK(cover_invariants(Clutter::build(3, {})).alpha0 == 0);

  for (int n = 1; n <= 5; ++n)
    for (const auto& c : clutters(n)) {
      auto rec = cover_invariants(c);
      auto b = brute(c);
      CHECK(rec.alpha0 == b.alpha0);
      CHECK(rec.beta0 == b.beta0);
      CHECK(rec.beta1 == b.beta1);
      CHECK(rec.im == b.im);
      CHECK(rec.alpha0_prime == b.alpha0p);
      CHECK(rec.beta0_prime == b.beta0p);
      CHECK(rec.alpha0 + rec.beta0 == n);
      CHECK(rec.beta1 <= rec.alpha0);
      CHECK(rec.im <= rec.beta1);
      CHECK(rec.beta0_prime <= rec.beta0);
      CHECK(rec.alpha0 <= rec.alpha0_prime);
      if (c.num_edges()) {
        auto bl = blocker(c).edges();
        int lo = 64, hi = 0;
        for (VertexSet e : bl) lo = std::min(lo, popcount(e)), hi = std::max(hi, popcount(e));
        CHECK(rec.alpha0 == lo);
        CHECK(rec.alpha0_prime == hi);
      }
    }
}

TEST_CASE("smallest maximal matching on graphs") {
  CHECK(min_maximal_matching(path_graph(4)) == 1);
  CHECK(min_maximal_matching(cycle_graph(6)) == 2);
  CHECK(min_maximal_matching(complete_graph(5)) == 2);
  CHECK_THROWS_AS(min_maximal_matching(q6()), Error);
}

TEST_CASE("minors") {
  auto p = minor(cycle_graph(5), bit(0), 0);
  auto bp = brute_contract(cycle_graph(5), bit(0), 0);
  CHECK(sorted(p.edges()) == bp);
  CHECK(p.num_edges() == 3);
  CHECK(sorted(induced(cycle_graph(5), full_set(5) & ~bit(0)).edges()) == sorted(path_graph(4).edges()));
  CHECK(sorted(minor(q6(), 0, bit(0)).edges()) == brute_contract(q6(), 0, bit(0)));
  // x1 -> 1 gives x2x5, x3x4, x2x3x6, x4x5x6; neither triple contains a pair,
  // so all four survive (renumbered on five vertices)
  CHECK(sorted(minor(q6(), 0, bit(0)).edges()) == sets({{1, 4}, {2, 3}, {1, 2, 5}, {3, 4, 5}}));
  CHECK(minor(q6(), 0, bit(0)).num_vertices() == 5);
  CHECK(sorted(minor(q6(), 0, 0).edges()) == sorted(q6().edges()));
  CHECK_THROWS_AS(minor(q6(), bit(0), bit(0)), Error);

  std::mt19937_64 rng(7);
  for (const auto& c : clutters(5)) {
    VertexSet del = rng() & full_set(5);
    VertexSet con = rng() & full_set(5) & ~del;
    bool empties = false;
    for (VertexSet e : c.edges()) empties = empties || (!(e & del) && is_subset(e, con));
    if (empties) {
      CHECK_THROWS_AS(minor(c, del, con), Error);
      continue;
    }
    CHECK(sorted(minor(c, del, con).edges()) == brute_contract(c, del, con));
  }
}

TEST_CASE("induced subclutters") {
  auto m = induced(cycle_graph(6), sets({{1, 2, 4, 5}})[0]);
  CHECK(sorted(m.edges()) == sets({{1, 2}, {3, 4}}));
  CHECK(m.num_vertices() == 4);
  CHECK(sorted(induced(q6(), full_set(6)).edges()) == sorted(q6().edges()));
  CHECK(induced(cycle_graph(6), sets({{1, 3, 5}})[0]).num_edges() == 0);
}

TEST_CASE("structure flags") {
  auto c4 = structure_flags(cycle_graph(4));
  CHECK(c4.bipartite == true);
  CHECK(c4.b_graph == true);
  auto c5 = structure_flags(cycle_graph(5));
  CHECK(c5.bipartite == false);
  CHECK(c5.chordal == false);
  CHECK(c5.perfect == false);
  CHECK(c5.weakly_chordal == false);
  auto f = structure_flags(q6());
  CHECK_FALSE(f.bipartite.has_value());
  CHECK(f.uniform_d == 3);
  // every pair (edge, minimal cover) of Q6 meets in at most two vertices
  bool diadic = true;
  auto q = q6();
  auto covers = blocker(q);
  for (VertexSet e : q.edges())
    for (VertexSet c : covers.edges()) diadic = diadic && popcount(e & c) <= 2;
  CHECK(f.diadic == diadic);
  CHECK(is_chordal(complete_graph(5)));
  CHECK(is_weakly_chordal(cycle_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_perfect(complement_graph(cycle_graph(6))));
  CHECK_FALSE(is_perfect(complement_graph(cycle_graph(7))));
  CHECK(is_balanced(cycle_graph(4)));
  CHECK_FALSE(is_balanced(cycle_graph(3)));
  CHECK_THROWS_AS(is_chordal(q6()), Error);

  for (int n = 3; n <= 6; ++n)
    for (const auto& g : graphs(n)) {
      bool chordal = is_chordal(g);
      CHECK(chordal == is_chordal_by_cycles(g));
      bool long_cycle = false;
      for (const auto& cyc : induced_cycles(g)) long_cycle = long_cycle || cyc.size() >= 4;
      CHECK(chordal == !long_cycle);
      if (chordal) CHECK(is_weakly_chordal(g));
      if (is_bipartite(g)) CHECK(is_perfect(g));
      if (is_totally_balanced(g)) CHECK(is_balanced(g));
      if (g.num_edges() && is_b_graph(g)) {
        auto r = cover_invariants(g);
        CHECK(r.beta0 <= r.alpha0);
      }
    }
}

TEST_CASE("Konig and packing") {
  auto c4 = konig_and_packing(cycle_graph(4));
  CHECK(c4.konig);
  CHECK(c4.packing);
  auto c3 = konig_and_packing(cycle_graph(3));
  CHECK_FALSE(c3.konig);
  CHECK_FALSE(c3.packing);
  REQUIRE(c3.witness.has_value());
  CHECK(sorted(c3.witness->edges()) == sorted(cycle_graph(3).edges()));
  auto q = konig_and_packing(q6());
  CHECK_FALSE(q.konig);
  CHECK_FALSE(q.packing);
  REQUIRE(q.witness.has_value());
  CHECK_FALSE(is_konig(*q.witness));

  for (const auto& g : graphs(6)) {
    auto kp = konig_and_packing(g);
    CHECK(kp.packing == is_bipartite(g));
    if (is_bipartite(g)) CHECK(kp.konig);
  }
}

TEST_CASE("odd cycle data") {
  auto c5 = odd_cycle_data(cycle_graph(5));
  CHECK(c5.smallest_odd_cycle_length == 5);
  CHECK(c5.leaves.empty());
  auto w = odd_cycle_data(graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  CHECK(w.smallest_odd_cycle_length == 3);
  CHECK(w.leaves == std::vector<int>{3});
  CHECK_FALSE(odd_cycle_data(cycle_graph(4)).smallest_odd_cycle_length.has_value());
  CHECK_THROWS_AS(odd_cycle_data(q6()), Error);
}

TEST_CASE("path ideals") {
  auto d = parse_digraph(testing::data_file("pentagon.digraph"));
  CHECK(path_ideal(d, 3) == testing::ideal(5, "x1*x2*x3,x2*x3*x4,x3*x4*x5,x1*x4*x5,x1*x2*x5"));
  CHECK(path_ideal(d, 2) == edge_ideal(cycle_graph(5)));
  Digraph one{2, {{0, 1}}};
  CHECK(path_ideal(one, 3).is_zero());
  CHECK_THROWS_AS(path_ideal(d, 1), Error);
}

TEST_CASE("clutter file format") {
  auto c = parse_clutter("vertices 3\na b\nb c\n");
  CHECK(c.num_edges() == 2);
  CHECK(c.label(0) == "a");
  CHECK(sorted(parse_clutter(format_clutter(q6())).edges()) == sorted(q6().edges()));
  CHECK_THROWS_AS(parse_clutter("vertices 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_clutter("vertices 3\n1 2\n1 2 3\n"), Error);
}
