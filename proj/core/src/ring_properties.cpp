#include "edgeideal/ring_properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

bool is_cohen_macaulay(const SimplicialComplex& d, CoefficientField f) {
  if (d.is_void()) return false;
  if (!d.is_pure()) return false;
  // Reisner: every link (including lk ∅ = Δ) has homology only in top degree.
  for (const auto& level : d.levels()) {
    for (VertexSet face : level) {
      auto lk = link(d, face);
      auto h = reduced_homology(lk, f);
      // h[k] is H̃_{k-1}; the top index is dim lk.
      for (std::size_t k = 0; k + 1 < h.size(); ++k)
        if (h[k]) return false;
    }
  }
  return true;
}

bool is_sequentially_cm(const SimplicialComplex& d, CoefficientField f) {
  if (d.is_void()) return false;
  for (int i = -1; i <= d.dimension(); ++i)
    if (!is_cohen_macaulay(pure_skeleton(d, i), f)) return false;
  return true;
}

int depth_by_skeletons(const SimplicialComplex& d, CoefficientField f) {
  if (d.is_void()) fail(Errc::InvalidArgument, "the void complex has no Stanley-Reisner ring");
  int best = -1;
  for (int i = -1; i <= d.dimension(); ++i)
    if (is_cohen_macaulay(skeleton(d, i), f)) best = i;
  return best + 1;
}

std::vector<std::size_t> shelling_order(const SimplicialComplex& d) {
  const auto& F = d.facets();
  const std::size_t m = F.size();
  if (m == 0) return {};
  if (m > static_cast<std::size_t>(limits().shellable_facets))
    fail(Errc::ResourceExceeded, "shellability search limited to shellable_facets facets");
  // Some shelling lists the facets by non-increasing size (rearrangement
  // lemma), so only the largest unused facets are tried at each step.
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return popcount(F[a]) > popcount(F[b]); });

  std::unordered_set<std::uint64_t> dead;
  const std::size_t budget = limits().components * 10;
  std::vector<std::size_t> order;
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::function<bool(std::uint64_t, std::size_t)> dfs = [&](std::uint64_t used, std::size_t pos) -> bool {
    if (used == all) return true;
    if (dead.count(used)) return false;
    // idx[pos..] holds the unused facets of the current size first
    while (used >> idx[pos] & 1) ++pos;
    const int size = popcount(F[idx[pos]]);
    for (std::size_t j = pos; j < m && popcount(F[idx[j]]) == size; ++j) {
      std::size_t a = idx[j];
      if (used >> a & 1) continue;
      VertexSet fa = F[a];
      // Vertices v with fa \ F_l = {v} for some earlier l.
      VertexSet u = 0;
      for (std::size_t l = 0; l < m; ++l) {
        if (!(used >> l & 1)) continue;
        VertexSet diff = fa & ~F[l];
        if (popcount(diff) == 1) u |= diff;
      }
      bool ok = true;
      for (std::size_t l = 0; l < m && ok; ++l)
        if ((used >> l & 1) && !(fa & ~F[l] & u)) ok = false;
      if (!ok) continue;
      order.push_back(a);
      if (dfs(used | (std::uint64_t{1} << a), pos)) return true;
      order.pop_back();
    }
    dead.insert(used);
    if (dead.size() > budget) fail(Errc::ResourceExceeded, "shellability search exceeded its state budget");
    return false;
  };
  if (dfs(0, 0)) return order;
  return {};
}

bool is_shellable(const SimplicialComplex& d) {
  if (d.is_void()) return false;
  return !shelling_order(d).empty();
}

bool is_vertex_decomposable(const SimplicialComplex& d) {
  std::map<std::vector<VertexSet>, bool> memo;
  std::function<bool(const SimplicialComplex&)> vd = [&](const SimplicialComplex& c) -> bool {
    if (c.facets().size() <= 1) return !c.is_void();
    auto it = memo.find(c.facets());
    if (it != memo.end()) return it->second;
    bool res = false;
    VertexSet verts = c.vertices();
    for (VertexSet rest = verts; rest && !res; rest &= rest - 1) {
      int v = lowest(rest);
      auto del = deletion(c, v);
      // Shedding: every facet of the deletion is a facet of c.
      bool shedding = std::all_of(del.facets().begin(), del.facets().end(), [&](VertexSet g) {
        return std::binary_search(c.facets().begin(), c.facets().end(), g, lex_less);
      });
      if (!shedding) continue;
      if (vd(link(c, bit(v))) && vd(del)) res = true;
    }
    memo[c.facets()] = res;
    return res;
  };
  return vd(d);
}

bool is_connected_in_codim1(const SimplicialComplex& d) {
  if (d.is_void()) return false;
  if (!d.is_pure()) return false;
  const auto& F = d.facets();
  const int dim = popcount(F.front());
  std::vector<std::uint8_t> seen(F.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < F.size(); ++b)
      if (!seen[b] && popcount(F[a] & F[b]) == dim - 1) {
        seen[b] = 1;
        stack.push_back(b);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 0; });
}

RingProperties ring_properties(const Clutter& c, CoefficientField f) {
  auto d = independence_complex(c);
  RingProperties r;
  r.unmixed = d.is_pure();
  r.cm = is_cohen_macaulay(d, f);
  r.scm = is_sequentially_cm(d, f);
  r.vertex_decomposable = is_vertex_decomposable(d);
  // vertex decomposable => shellable => sequentially CM over every field
  r.shellable = r.vertex_decomposable || (r.scm && is_shellable(d));
  r.connected_codim1 = is_connected_in_codim1(d);
  return r;
}

}  // namespace edgeideal
