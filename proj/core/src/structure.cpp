#include <algorithm>
#include <functional>

#include "edgeideal/clutter.hpp"
#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

namespace {

void require_graph(const Clutter& g, const char* what) {
  if (!g.is_graph()) fail(Errc::GraphRequired, std::string(what) + " is defined for graphs only");
}

std::vector<VertexSet> adjacency(const Clutter& g) {
  std::vector<VertexSet> nb(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexSet e : g.edges()) {
    int a = lowest(e), b = lowest(e & (e - 1));
    nb[static_cast<std::size_t>(a)] |= bit(b);
    nb[static_cast<std::size_t>(b)] |= bit(a);
  }
  return nb;
}

std::vector<VertexSet> complement_adjacency(const std::vector<VertexSet>& nb) {
  int n = static_cast<int>(nb.size());
  std::vector<VertexSet> out(nb.size());
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = full_set(n) & ~nb[static_cast<std::size_t>(v)] & ~bit(v);
  return out;
}

// Early-exit search for an induced cycle whose length satisfies accept.
bool any_induced_cycle(const std::vector<VertexSet>& nb, const std::function<bool(int)>& accept) {
  const int n = static_cast<int>(nb.size());
  std::vector<int> path;
  std::function<bool(int, VertexSet)> dfs = [&](int s, VertexSet on_path) -> bool {
    int last = path.back();
    VertexSet inner = on_path & ~bit(last) & ~bit(s);
    VertexSet cand = nb[static_cast<std::size_t>(last)] & ~on_path & ~full_set(s);
    while (cand) {
      int v = lowest(cand);
      cand &= cand - 1;
      if (nb[static_cast<std::size_t>(v)] & inner) continue;
      if ((nb[static_cast<std::size_t>(v)] & bit(s)) && path.size() >= 2) {
        if (accept(static_cast<int>(path.size()) + 1)) return true;
        continue;
      }
      path.push_back(v);
      if (dfs(s, on_path | bit(v))) return true;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    if (dfs(s, bit(s))) return true;
  }
  return false;
}

// Incidence graph: vertices 0..n-1, edges n..n+q-1.
std::vector<VertexSet> incidence_graph(const Clutter& c) {
  const int n = c.num_vertices();
  const int q = static_cast<int>(c.num_edges());
  if (n + q > 64) fail(Errc::ResourceExceeded, "incidence graph exceeds 64 nodes");
  std::vector<VertexSet> nb(static_cast<std::size_t>(n + q), 0);
  for (int j = 0; j < q; ++j) {
    VertexSet e = c.edges()[static_cast<std::size_t>(j)];
    nb[static_cast<std::size_t>(n + j)] = e;
    for_each_bit(e, [&](int v) { nb[static_cast<std::size_t>(v)] |= bit(n + j); });
  }
  return nb;
}

}  // namespace

bool is_connected(const Clutter& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  VertexSet seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexSet next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_set(n);
}

bool is_bipartite(const Clutter& g) {
  require_graph(g, "bipartiteness");
  auto nb = adjacency(g);
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      bool clash = false;
      for_each_bit(nb[static_cast<std::size_t>(u)], [&](int w) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

bool is_forest(const Clutter& g) {
  require_graph(g, "forest test");
  const int n = g.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (VertexSet e : g.edges()) {
    int a = find(lowest(e)), b = find(lowest(e & (e - 1)));
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_chordal(const Clutter& g) {
  require_graph(g, "chordality");
  // Repeatedly remove a simplicial vertex; chordal iff this empties the graph.
  auto nb = adjacency(g);
  VertexSet alive = g.vertex_set();
  while (alive) {
    int found = -1;
    for_each_bit(alive, [&](int v) {
      if (found >= 0) return;
      VertexSet nv = nb[static_cast<std::size_t>(v)] & alive;
      bool clique = true;
      for_each_bit(nv, [&](int u) {
        if (!is_subset(nv & ~bit(u), nb[static_cast<std::size_t>(u)])) clique = false;
      });
      if (clique) found = v;
    });
    if (found < 0) return false;
    alive &= ~bit(found);
  }
  return true;
}

bool is_chordal_by_cycles(const Clutter& g) {
  require_graph(g, "chordality");
  return !any_induced_cycle(adjacency(g), [](int len) { return len >= 4; });
}

bool is_weakly_chordal(const Clutter& g) {
  require_graph(g, "weak chordality");
  auto nb = adjacency(g);
  auto long_cycle = [](int len) { return len >= 5; };
  return !any_induced_cycle(nb, long_cycle) && !any_induced_cycle(complement_adjacency(nb), long_cycle);
}

bool is_perfect(const Clutter& g) {
  require_graph(g, "perfectness");
  if (g.num_vertices() > limits().perfect_n) fail(Errc::ResourceExceeded, "perfectness test limited to perfect_n vertices");
  auto nb = adjacency(g);
  auto odd_hole = [](int len) { return len >= 5 && len % 2 == 1; };
  return !any_induced_cycle(nb, odd_hole) && !any_induced_cycle(complement_adjacency(nb), odd_hole);
}

bool is_balanced(const Clutter& c) {
  // Odd-order submatrices with two ones per row and column contain an odd
  // cycle matrix, i.e. an induced cycle of length 2m (m odd >= 3) in the
  // vertex-edge incidence graph.
  return !any_induced_cycle(incidence_graph(c), [](int len) { return len >= 6 && (len / 2) % 2 == 1; });
}

bool is_totally_balanced(const Clutter& c) {
  return !any_induced_cycle(incidence_graph(c), [](int len) { return len >= 6; });
}

bool is_diadic(const Clutter& c) {
  if (c.edges().empty()) return true;
  auto covers = minimal_transversals(c.edges());
  for (VertexSet e : c.edges())
    for (VertexSet t : covers)
      if (popcount(e & t) > 2) return false;
  return true;
}

bool is_binary(const Clutter& c) {
  if (c.edges().empty()) return true;
  auto covers = minimal_transversals(c.edges());
  for (VertexSet e : c.edges())
    for (VertexSet t : covers)
      if (popcount(e & t) % 2 == 0) return false;
  return true;
}

bool is_b_graph(const Clutter& g) {
  require_graph(g, "the B-graph property");
  if (g.num_vertices() == 0 || g.isolated_vertices()) return false;
  auto covers = minimal_transversals(g.edges());
  int alpha0 = 64;
  for (VertexSet t : covers) alpha0 = std::min(alpha0, popcount(t));
  VertexSet covered = 0;
  for (VertexSet t : covers)
    if (popcount(t) == alpha0) covered |= g.vertex_set() & ~t;
  return covered == g.vertex_set();
}

StructureFlags structure_flags(const Clutter& c) {
  if (c.num_vertices() > limits().structure_n) fail(Errc::ResourceExceeded, "structure flags limited to structure_n vertices");
  StructureFlags f;
  f.uniform_d = c.uniform_degree();
  f.balanced = is_balanced(c);
  f.totally_balanced = is_totally_balanced(c);
  f.diadic = is_diadic(c);
  f.binary = is_binary(c);
  if (c.is_graph()) {
    f.bipartite = is_bipartite(c);
    f.chordal = is_chordal(c);
    f.weakly_chordal = is_weakly_chordal(c);
    if (c.num_vertices() <= limits().perfect_n) f.perfect = is_perfect(c);
    f.b_graph = is_b_graph(c);
  }
  return f;
}

}  // namespace edgeideal
