#include "edgeideal/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace edgeideal {

namespace {

// Stable colouring by iterated refinement on the vertex/edge incidences.
std::vector<int> refine_colours(int n, const std::vector<VertexSet>& edges) {
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = 1;
  while (true) {
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Sig> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = colour[static_cast<std::size_t>(v)];
      for (VertexSet e : edges) {
        if (!(e >> v & 1)) continue;
        std::vector<int> d{popcount(e)};
        for_each_bit(e & ~bit(v), [&](int u) { d.push_back(colour[static_cast<std::size_t>(u)]); });
        std::sort(d.begin() + 1, d.end());
        s.second.push_back(std::move(d));
      }
      std::sort(s.second.begin(), s.second.end());
    }
    std::map<Sig, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int k = 0;
    for (auto& [s, id] : ids) id = k++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = ids[sig[static_cast<std::size_t>(v)]];
    if (k == classes) break;
    classes = k;
  }
  return colour;
}

std::vector<VertexSet> relabel(const std::vector<VertexSet>& edges, const std::vector<int>& to) {
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (VertexSet e : edges) {
    VertexSet f = 0;
    for_each_bit(e, [&](int v) { f |= bit(to[static_cast<std::size_t>(v)]); });
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum relabelled (numerically sorted) edge list over all labelings that
// respect the stable colouring.
std::vector<VertexSet> canonical_edges(int n, const std::vector<VertexSet>& edges) {
  auto colour = refine_colours(n, edges);
  int k = n ? *std::max_element(colour.begin(), colour.end()) + 1 : 0;
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) cls[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> to(static_cast<std::size_t>(n));
  std::vector<VertexSet> best;
  bool have = false;
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int base) {
    if (c == cls.size()) {
      auto img = relabel(edges, to);
      if (!have || img < best) {
        best = std::move(img);
        have = true;
      }
      return;
    }
    auto members = cls[c];
    do {
      for (std::size_t i = 0; i < members.size(); ++i) to[static_cast<std::size_t>(members[i])] = base + static_cast<int>(i);
      rec(c + 1, base + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0, 0);
  return best;
}

Clutter from_canonical(int n, std::vector<VertexSet> edges) { return Clutter::build(n, std::move(edges)); }

std::vector<Clutter> sorted_family(int n, const std::set<std::vector<VertexSet>>& seen) {
  std::vector<std::vector<VertexSet>> all(seen.begin(), seen.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Clutter> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(from_canonical(n, std::move(e)));
  return out;
}

std::mutex cache_mutex;

}  // namespace

Clutter canonical_clutter(const Clutter& c) {
  if (c.num_vertices() > 8) fail(Errc::ResourceExceeded, "canonical form limited to 8 vertices");
  return from_canonical(c.num_vertices(), canonical_edges(c.num_vertices(), c.edges()));
}

Clutter canonical_graph(const Clutter& g) {
  if (!g.is_graph()) fail(Errc::GraphRequired, "canonical_graph needs a graph");
  return canonical_clutter(g);
}

const std::vector<Clutter>& graphs(int n) {
  if (n < 0 || n > 9) fail(Errc::RangeError, "graphs(n) supports 0 <= n <= 9");
  static std::map<int, std::vector<Clutter>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Clutter> result;
  if (n == 0) {
    result.push_back(Clutter(0));
  } else {
    const auto& prev = graphs(n - 1);
    std::set<std::vector<VertexSet>> seen;
    const int v = n - 1;
    for (const auto& g : prev) {
      for (VertexSet s = 0; s < bit(v); ++s) {
        auto edges = g.edges();
        for_each_bit(s, [&](int u) { edges.push_back(bit(u) | bit(v)); });
        seen.insert(canonical_edges(n, edges));
      }
    }
    result = sorted_family(n, seen);
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

const std::vector<Clutter>& clutters(int n) {
  if (n < 0 || n > 6) fail(Errc::RangeError, "clutters(n) supports 0 <= n <= 6");
  static std::map<int, std::vector<Clutter>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Labelled antichains of nonempty subsets, indexed by subset mask; only
  // those whose vertex degree profile is non-increasing get canonicalised.
  const unsigned subsets = 1u << n;
  std::vector<std::uint64_t> comparable(subsets, 0);
  for (unsigned s = 0; s < subsets; ++s)
    for (unsigned t = 0; t < subsets; ++t)
      if ((s & t) == s || (s & t) == t) comparable[s] |= std::uint64_t{1} << t;
  std::set<std::vector<VertexSet>> seen;
  std::vector<VertexSet> chosen;
  auto emit = [&]() {
    std::uint64_t prev = ~std::uint64_t{0};
    for (int v = 0; v < n; ++v) {
      std::uint64_t key = 0;
      for (VertexSet e : chosen)
        if (e >> v & 1) key += std::uint64_t{1} << (5 * (popcount(e) - 1));
      if (key > prev) return;
      prev = key;
    }
    seen.insert(canonical_edges(n, chosen));
  };
  std::function<void(unsigned, std::uint64_t)> dfs = [&](unsigned i, std::uint64_t forbidden) {
    if (i == subsets) {
      emit();
      return;
    }
    dfs(i + 1, forbidden);
    if (!(forbidden >> i & 1)) {
      chosen.push_back(i);
      dfs(i + 1, forbidden | comparable[i]);
      chosen.pop_back();
    }
  };
  dfs(1, 0);
  auto result = sorted_family(n, seen);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::vector<Clutter> random_clutters(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1 || n > 8) fail(Errc::RangeError, "random_clutters supports 1 <= n <= 8");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nedges(1, 2 * n);
  std::uniform_int_distribution<int> inner(2, std::max(2, n - 1));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::vector<VertexSet>> seen;
  std::vector<Clutter> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 50; ++attempt) {
    int k = nedges(rng);
    std::vector<VertexSet> edges;
    for (int i = 0; i < k; ++i) {
      double r = coin(rng);
      int size = r < 0.05 ? 1 : (r < 0.08 ? n : std::min(n, inner(rng)));
      std::vector<int> idx(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) idx[static_cast<std::size_t>(j)] = j;
      std::shuffle(idx.begin(), idx.end(), rng);
      VertexSet e = 0;
      for (int j = 0; j < size; ++j) e |= bit(idx[static_cast<std::size_t>(j)]);
      edges.push_back(e);
    }
    auto c = Clutter::minimalize_edges(n, edges);
    if (seen.insert(canonical_edges(n, c.edges())).second) out.push_back(c);
  }
  return out;
}

std::vector<Clutter> random_graphs(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1 || n > 8) fail(Errc::RangeError, "random_graphs supports 1 <= n <= 8");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.15, 0.85), coin(0.0, 1.0);
  std::set<std::vector<VertexSet>> seen;
  std::vector<Clutter> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 50; ++attempt) {
    double p = density(rng);
    std::vector<VertexSet> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng) < p) edges.push_back(bit(a) | bit(b));
    auto g = Clutter::build(n, edges);
    if (seen.insert(canonical_edges(n, g.edges())).second) out.push_back(g);
  }
  return out;
}

std::vector<Clutter> random_uniform_clutters(int n, int d, std::size_t count, std::uint64_t seed) {
  if (n < 1 || n > 8 || d < 1 || d > n) fail(Errc::RangeError, "random_uniform_clutters needs 1 <= d <= n <= 8");
  std::vector<VertexSet> all;
  for (VertexSet s = 1; s < bit(n); ++s)
    if (popcount(s) == d) all.push_back(s);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.05, 0.6), coin(0.0, 1.0);
  std::set<std::vector<VertexSet>> seen;
  std::vector<Clutter> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 50; ++attempt) {
    double p = density(rng);
    std::vector<VertexSet> edges;
    for (VertexSet s : all)
      if (coin(rng) < p) edges.push_back(s);
    if (edges.empty()) edges.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    auto c = Clutter::build(n, edges);
    if (seen.insert(canonical_edges(n, c.edges())).second) out.push_back(c);
  }
  return out;
}

bool uniform_exhaustive(int n, int d) {
  if (d < 1 || d > n) return false;
  return d <= 2 || d >= n - 2;
}

std::vector<Clutter> uniform_clutters(int n, int d) {
  std::vector<Clutter> out;
  if (!uniform_exhaustive(n, d)) return out;
  std::set<std::vector<VertexSet>> seen;
  auto add = [&](std::vector<VertexSet> edges) {
    if (!edges.empty()) seen.insert(canonical_edges(n, edges));
  };
  const VertexSet all = full_set(n);
  if (d == 1 || d == n - 1) {
    for (int k = 1; k <= n; ++k) {
      std::vector<VertexSet> edges;
      for (int v = 0; v < k; ++v) edges.push_back(d == 1 ? bit(v) : all & ~bit(v));
      add(edges);
    }
  }
  if (d == n) add({all});
  if (d == 2 || d == n - 2) {
    for (const auto& g : graphs(n)) {
      std::vector<VertexSet> edges;
      for (VertexSet e : g.edges()) edges.push_back(d == 2 ? e : all & ~e);
      add(edges);
    }
  }
  return sorted_family(n, seen);
}

std::vector<Clutter> graphs_up_to(int n, const std::function<bool(const Clutter&)>& pred) {
  std::vector<Clutter> out;
  for (int m = 1; m <= n; ++m)
    for (const auto& g : graphs(m))
      if (pred(g)) out.push_back(g);
  return out;
}

std::vector<Clutter> clutters_up_to(int n, const std::function<bool(const Clutter&)>& pred) {
  std::vector<Clutter> out;
  for (int m = 1; m <= n; ++m)
    for (const auto& c : clutters(m))
      if (pred(c)) out.push_back(c);
  return out;
}

}  // namespace edgeideal
