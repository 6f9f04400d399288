#include <doctest.h>

#include <random>
#include <set>

#include "../support/helpers.hpp"
#include "edgeideal/families.hpp"

using namespace edgeideal;

namespace {

std::vector<VertexSet> sorted_edges(const Clutter& c) {
  auto e = c.edges();
  std::sort(e.begin(), e.end());
  return e;
}

Clutter relabel(const Clutter& c, const std::vector<int>& perm) {
  std::vector<VertexSet> e;
  for (VertexSet s : c.edges()) {
    VertexSet t = 0;
    for_each_bit(s, [&](int v) { t |= bit(perm[static_cast<std::size_t>(v)]); });
    e.push_back(t);
  }
  return Clutter::build(c.num_vertices(), e);
}

}  // namespace

TEST_CASE("graph counts up to isomorphism") {
  const std::size_t expect[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(graphs(n).size() == expect[n]);
}

TEST_CASE("clutter counts up to isomorphism") {
  const std::size_t expect[] = {1, 2, 4, 9, 29, 209, 16352};
  for (int n = 1; n <= 6; ++n) CHECK(clutters(n).size() == expect[n]);
}

TEST_CASE("families are canonical and duplicate free") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<VertexSet>> seen;
    for (const auto& c : clutters(n)) {
      CHECK(sorted_edges(canonical_clutter(c)) == sorted_edges(c));
      CHECK(seen.insert(sorted_edges(c)).second);
    }
  }
  std::mt19937_64 rng(23);
  for (const auto& g : graphs(6)) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(sorted_edges(canonical_graph(relabel(g, perm))) == sorted_edges(canonical_graph(g)));
  }
  for (const auto& c : random_clutters(7, 30, 5)) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(sorted_edges(canonical_clutter(relabel(c, perm))) == sorted_edges(canonical_clutter(c)));
  }
}

TEST_CASE("random families are seeded") {
  auto a = random_clutters(7, 50, 99);
  auto b = random_clutters(7, 50, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(sorted_edges(a[i]) == sorted_edges(b[i]));
  for (const auto& g : random_graphs(8, 40, 3)) CHECK(g.is_graph());
  for (const auto& c : random_uniform_clutters(8, 3, 40, 3)) CHECK(c.uniform_degree() == 3);
}

TEST_CASE("uniform families") {
  CHECK(uniform_clutters(6, 2).size() == graphs(6).size() - 1);
  CHECK(uniform_exhaustive(7, 5));
  CHECK_FALSE(uniform_exhaustive(7, 3));
  CHECK(uniform_clutters(7, 3).empty());
  // d = n: only the single full edge; d = 1: any nonempty set of variables
  CHECK(uniform_clutters(5, 5).size() == 1);
  CHECK(uniform_clutters(5, 1).size() == 5);
  for (const auto& c : uniform_clutters(6, 4)) CHECK(c.uniform_degree() == 4);
}

TEST_CASE("filtered unions over sizes") {
  auto trees = graphs_up_to(6, [](const Clutter& g) { return g.num_edges() > 0 && is_forest(g) && is_connected(g); });
  // trees on 2..6 vertices: 1 + 1 + 2 + 3 + 6
  CHECK(trees.size() == 13);
}
