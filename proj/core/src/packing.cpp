#include <algorithm>
#include <unordered_set>

#include "edgeideal/clutter.hpp"
#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

namespace {

struct EdgeListHash {
  std::size_t operator()(const std::vector<VertexSet>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (VertexSet e : v) h = (h ^ e) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

// Edges of the minor, kept in the original labelling; empty optional when the
// contraction empties an edge (the minor is the unit ideal).
std::optional<std::vector<VertexSet>> minor_edges(const std::vector<VertexSet>& edges, VertexSet del, VertexSet con) {
  std::vector<VertexSet> out;
  for (VertexSet e : edges) {
    if (e & del) continue;
    VertexSet f = e & ~con;
    if (!f) return std::nullopt;
    out.push_back(f);
  }
  return minimal_sets(std::move(out));
}

bool konig_edges(int n, const std::vector<VertexSet>& edges) {
  return is_konig(Clutter::build(n, edges));
}

// Subsets of `universe` with exactly k elements in lexicographic order of
// their index lists.
template <class F>
bool for_each_k_subset(const std::vector<int>& universe, int k, F&& f) {
  const int m = static_cast<int>(universe.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(universe[static_cast<std::size_t>(i)]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool is_konig(const Clutter& c) {
  int b1 = matching_number(c);
  return covering_number(c) == b1;
}

KonigPacking konig_and_packing(const Clutter& c) {
  const int n = c.num_vertices();
  if (n > limits().packing_n) fail(Errc::ResourceExceeded, "packing test limited to packing_n vertices");
  KonigPacking r;
  r.konig = is_konig(c);
  std::unordered_set<std::vector<VertexSet>, EdgeListHash> passed;
  std::vector<int> all = to_indices(c.vertex_set());

  // Most-removed minors first: the first failure has only König proper minors.
  for (int k = n; k >= 0; --k) {
    bool found = for_each_k_subset(all, k, [&](VertexSet removed) {
      // Contraction sets in increasing mask order, so pure deletions come first.
      VertexSet con = 0;
      while (true) {
        VertexSet del = removed & ~con;
        auto e = minor_edges(c.edges(), del, con);
        if (e && !passed.count(*e)) {
          if (!konig_edges(n, *e)) {
            r.witness = minor(c, del, con);
            r.witness_deleted = del;
            r.witness_contracted = con;
            return true;
          }
          passed.insert(std::move(*e));
        }
        if (con == removed) break;
        con = (con - removed) & removed;
      }
      return false;
    });
    if (found) {
      r.packing = false;
      return r;
    }
  }
  r.packing = true;
  return r;
}

}  // namespace edgeideal
