#pragma once
// Brute-force references for the test suites.  Each one avoids the library
// routine it is compared against.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/clutter.hpp"
#include "edgeideal/monomial.hpp"
#include "edgeideal/polyhedra.hpp"

namespace oracle {

using namespace edgeideal;
using Exps = std::vector<unsigned>;

inline Exps exps(const Monomial& m) {
  Exps e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i];
  return e;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Membership by scanning every generator.
inline bool member(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

inline std::vector<Exps> gens_of(const MonomialIdeal& I) {
  std::vector<Exps> g;
  for (const auto& m : I.generators()) g.push_back(exps(m));
  return g;
}

// Divisibility-minimal subset, as exponent vectors sorted.
inline std::vector<Exps> minimal(std::vector<Exps> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < v.size() && keep; ++j)
      if (i != j && divides(v[j], v[i])) keep = false;
    if (keep) out.push_back(v[i]);
  }
  return out;
}

inline std::vector<Exps> sorted_gens(const MonomialIdeal& I) {
  auto g = gens_of(I);
  std::sort(g.begin(), g.end());
  return g;
}

// I^t from all multisets of t generators.
inline std::vector<Exps> power(const MonomialIdeal& I, unsigned t) {
  auto g = gens_of(I);
  std::vector<Exps> out;
  std::vector<std::size_t> pick(t, 0);
  while (true) {
    Exps m(I.nvars(), 0);
    for (std::size_t k : pick)
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += g[k][i];
    out.push_back(m);
    std::size_t p = t;
    while (p > 0 && pick[p - 1] == g.size() - 1) --p;
    if (p == 0) break;
    ++pick[p - 1];
    for (std::size_t q = p; q < t; ++q) pick[q] = pick[p - 1];
  }
  return minimal(out);
}

// Minimal vertex covers of a square-free ideal by checking every subset.
inline std::vector<VertexSet> minimal_covers(const MonomialIdeal& I) {
  auto sup = I.support_masks();
  std::vector<VertexSet> covers;
  for (VertexSet s = 0; s < (VertexSet{1} << I.nvars()); ++s) {
    bool cover = std::all_of(sup.begin(), sup.end(), [&](VertexSet e) { return (e & s) != 0; });
    if (!cover) continue;
    bool minimal_cover = true;
    for (int v = 0; v < static_cast<int>(I.nvars()) && minimal_cover; ++v)
      if (s >> v & 1) {
        VertexSet r = s & ~(VertexSet{1} << v);
        if (std::all_of(sup.begin(), sup.end(), [&](VertexSet e) { return (e & r) != 0; })) minimal_cover = false;
      }
    if (minimal_cover) covers.push_back(s);
  }
  return covers;
}

// m in I^(t) iff m meets every minimal prime with weight >= t.
inline bool in_symbolic_power(const std::vector<VertexSet>& covers, const Exps& m, unsigned t) {
  for (VertexSet p : covers) {
    unsigned w = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (p >> i & 1) w += m[i];
    if (w < t) return false;
  }
  return true;
}

// Associated primes from colon witnesses: p_S in Ass iff some c in the box has
// c not in I, c x_i in I for i in S, and c times high powers outside S not in I.
inline std::set<VertexSet> associated_primes(const MonomialIdeal& I) {
  auto g = gens_of(I);
  const std::size_t n = I.nvars();
  Exps top(n, 0);
  for (const auto& m : g)
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], m[i]);
  std::set<VertexSet> out;
  Exps c(n, 0);
  while (true) {
    if (!member(g, c)) {
      VertexSet s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Exps d = c;
        ++d[i];
        if (member(g, d)) s |= VertexSet{1} << i;
      }
      Exps far = c;
      for (std::size_t i = 0; i < n; ++i)
        if (!(s >> i & 1)) far[i] += top[i] + 1;
      if (s && !member(g, far)) out.insert(s);
    }
    std::size_t i = 0;
    while (i < n && c[i] == top[i]) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

// Rank of a small dense matrix over QQ (p == 0) or F_p.
inline std::size_t rank(std::vector<std::vector<long long>> a, unsigned p) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) q[i][j] = static_cast<long>(a[i][j]);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && q[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(q[piv], q[r]);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r && q[i][c] != 0) {
          mpq_class f = q[i][c] / q[r][c];
          for (std::size_t j = 0; j < cols; ++j) q[i][j] -= f * q[r][j];
        }
      ++r;
    }
    return r;
  }
  const long long P = p;
  auto inv = [&](long long x) {
    long long res = 1, e = P - 2;
    x %= P;
    while (e) {
      if (e & 1) res = res * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return res;
  };
  for (auto& row : a)
    for (auto& v : row) v = ((v % P) + P) % P;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long long iv = inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c]) {
        long long f = a[i][c] * iv % P;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % P + P) % P;
      }
    ++r;
  }
  return r;
}

// Graded Betti numbers of R/I from the Taylor complex tensored with k: in
// multidegree b the complex has a basis of generator subsets with lcm b, and
// only faces keeping the lcm survive in the differential.
inline std::map<std::pair<int, int>, std::uint64_t> taylor_betti(const MonomialIdeal& I, unsigned p) {
  auto g = gens_of(I);
  const std::size_t m = g.size();
  std::map<std::pair<int, int>, std::uint64_t> out;
  out[{0, 0}] = 1;
  if (m == 0) return out;
  std::map<Exps, std::vector<unsigned>> by_lcm;  // subsets (as masks) with a given lcm
  for (unsigned s = 1; s < (1u << m); ++s) {
    Exps l(I.nvars(), 0);
    for (std::size_t k = 0; k < m; ++k)
      if (s >> k & 1)
        for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(l[i], g[k][i]);
    by_lcm[l].push_back(s);
  }
  for (const auto& [l, subsets] : by_lcm) {
    int deg = std::accumulate(l.begin(), l.end(), 0);
    std::map<int, std::vector<unsigned>> level;
    for (unsigned s : subsets) level[__builtin_popcount(s)].push_back(s);
    // boundary rank from level i to level i-1
    auto boundary_rank = [&](int i) -> std::size_t {
      if (!level.count(i) || !level.count(i - 1)) return 0;
      const auto& hi = level[i];
      const auto& lo = level[i - 1];
      std::vector<std::vector<long long>> a(hi.size(), std::vector<long long>(lo.size(), 0));
      for (std::size_t r = 0; r < hi.size(); ++r) {
        int sign = 1;
        for (std::size_t k = 0; k < m; ++k) {
          if (!(hi[r] >> k & 1)) continue;
          unsigned face = hi[r] & ~(1u << k);
          auto it = std::find(lo.begin(), lo.end(), face);
          if (it != lo.end()) a[r][static_cast<std::size_t>(it - lo.begin())] = sign;
          sign = -sign;
        }
      }
      return rank(a, p);
    };
    for (const auto& [i, sets] : level) {
      long long h = static_cast<long long>(sets.size()) - static_cast<long long>(boundary_rank(i)) -
                    static_cast<long long>(boundary_rank(i + 1));
      if (h > 0) out[{i, deg}] += static_cast<std::uint64_t>(h);
    }
  }
  return out;
}

// Determinant by permutation expansion.
inline long long leibniz(const std::vector<std::vector<long long>>& a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < k && term; ++i) term *= a[i][perm[i]];
    if (!term) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Every square minor in {0, 1, -1}.
inline bool totally_unimodular(const IncidenceMatrix& a) {
  const int n = a.rows(), q = a.cols();
  for (unsigned rs = 1; rs < (1u << n); ++rs)
    for (unsigned cs = 1; cs < (1u << q); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::vector<long long>> m;
      for (int i = 0; i < n; ++i) {
        if (!(rs >> i & 1)) continue;
        std::vector<long long> row;
        for (int j = 0; j < q; ++j)
          if (cs >> j & 1) row.push_back(a.at(i, j));
        m.push_back(row);
      }
      long long d = leibniz(m);
      if (d > 1 || d < -1) return false;
    }
  return true;
}

// Vertices of {x >= 0 : s (xA) >= s} by solving every choice of n tight
// constraints among x_i = 0 and x.a_j = 1.
inline std::vector<RationalPoint> vertices(const IncidenceMatrix& a, int s) {
  const int n = a.rows(), q = a.cols();
  const int total = n + q;
  std::set<RationalPoint> out;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  auto row_of = [&](int c) {
    std::vector<mpq_class> r(static_cast<std::size_t>(n) + 1, 0);
    if (c < n) {
      r[static_cast<std::size_t>(c)] = 1;
    } else {
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = a.at(i, c - n);
      r[static_cast<std::size_t>(n)] = 1;
    }
    return r;
  };
  while (true) {
    std::vector<std::vector<mpq_class>> m;
    for (int c : pick) m.push_back(row_of(c));
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      while (piv < n && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
      for (int i = 0; i < n; ++i)
        if (i != col && m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
          mpq_class f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
          for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    if (!singular) {
      RationalPoint x(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      bool feasible = std::all_of(x.begin(), x.end(), [](const mpq_class& v) { return v >= 0; });
      for (int j = 0; j < q && feasible; ++j) {
        mpq_class dot = 0;
        for (int i = 0; i < n; ++i)
          if (a.at(i, j)) dot += x[static_cast<std::size_t>(i)];
        if (s > 0 ? dot < 1 : dot > 1) feasible = false;
      }
      if (feasible) out.insert(x);
    }
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
