#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "edgeideal/complex.hpp"

namespace edgeideal {

namespace {

using Entry = std::pair<int, long long>;
using Row = std::vector<Entry>;

// --- F_p -------------------------------------------------------------------

using PRow = std::vector<std::pair<int, std::uint32_t>>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::size_t rank_mod_p(const std::vector<Row>& rows, std::uint32_t p, int ncols) {
  std::vector<PRow> pivots;
  std::vector<int> pivot_of(static_cast<std::size_t>(ncols), -1);
  PRow cur, tmp;
  for (const auto& r : rows) {
    cur.clear();
    for (auto [c, v] : r) {
      long long m = v % static_cast<long long>(p);
      if (m < 0) m += p;
      if (m) cur.emplace_back(c, static_cast<std::uint32_t>(m));
    }
    while (!cur.empty()) {
      int lead = cur.front().first;
      int pi = pivot_of[static_cast<std::size_t>(lead)];
      if (pi < 0) {
        // Normalise the pivot to a leading one.
        std::uint32_t inv = inv_mod(cur.front().second, p);
        for (auto& e : cur) e.second = static_cast<std::uint32_t>(std::uint64_t{e.second} * inv % p);
        pivot_of[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
        pivots.push_back(cur);
        break;
      }
      const PRow& pv = pivots[static_cast<std::size_t>(pi)];
      std::uint64_t f = cur.front().second;  // pivot lead is 1
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < cur.size() || b < pv.size()) {
        if (b == pv.size() || (a < cur.size() && cur[a].first < pv[b].first)) {
          tmp.push_back(cur[a++]);
        } else if (a == cur.size() || pv[b].first < cur[a].first) {
          std::uint32_t v = static_cast<std::uint32_t>((p - f * pv[b].second % p) % p);
          if (v) tmp.emplace_back(pv[b].first, v);
          ++b;
        } else {
          std::uint32_t v = static_cast<std::uint32_t>((cur[a].second + p - f * pv[b].second % p) % p);
          if (v) tmp.emplace_back(cur[a].first, v);
          ++a;
          ++b;
        }
      }
      std::swap(cur, tmp);
    }
  }
  return pivots.size();
}

// --- Q, fraction-free --------------------------------------------------------

struct OverflowSignal {};

long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}

long long sub_checked(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}

std::size_t rank_rational_int64(const std::vector<Row>& rows, int ncols) {
  std::vector<Row> pivots;
  std::vector<int> pivot_of(static_cast<std::size_t>(ncols), -1);
  Row cur, tmp;
  for (const auto& r : rows) {
    cur.clear();
    for (auto e : r)
      if (e.second) cur.push_back(e);
    while (!cur.empty()) {
      int lead = cur.front().first;
      int pi = pivot_of[static_cast<std::size_t>(lead)];
      if (pi < 0) {
        pivot_of[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
        pivots.push_back(cur);
        break;
      }
      const Row& pv = pivots[static_cast<std::size_t>(pi)];
      long long ap = pv.front().second, ar = cur.front().second;
      long long g = std::gcd(ap, ar);
      ap /= g;
      ar /= g;
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < cur.size() || b < pv.size()) {
        long long v;
        int c;
        if (b == pv.size() || (a < cur.size() && cur[a].first < pv[b].first)) {
          c = cur[a].first;
          v = mul_checked(ap, cur[a].second);
          ++a;
        } else if (a == cur.size() || pv[b].first < cur[a].first) {
          c = pv[b].first;
          v = sub_checked(0, mul_checked(ar, pv[b].second));
          ++b;
        } else {
          c = cur[a].first;
          v = sub_checked(mul_checked(ap, cur[a].second), mul_checked(ar, pv[b].second));
          ++a;
          ++b;
        }
        if (v) tmp.emplace_back(c, v);
      }
      long long content = 0;
      for (auto& e : tmp) content = std::gcd(content, e.second);
      if (content > 1)
        for (auto& e : tmp) e.second /= content;
      std::swap(cur, tmp);
    }
  }
  return pivots.size();
}

std::size_t rank_rational_mpz(const std::vector<Row>& rows, int ncols) {
  using ZRow = std::vector<std::pair<int, mpz_class>>;
  std::vector<ZRow> pivots;
  std::vector<int> pivot_of(static_cast<std::size_t>(ncols), -1);
  for (const auto& r : rows) {
    ZRow cur;
    for (auto [c, v] : r)
      if (v) cur.emplace_back(c, mpz_class(static_cast<long>(v)));
    while (!cur.empty()) {
      int lead = cur.front().first;
      int pi = pivot_of[static_cast<std::size_t>(lead)];
      if (pi < 0) {
        pivot_of[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(cur));
        break;
      }
      const ZRow& pv = pivots[static_cast<std::size_t>(pi)];
      mpz_class g = gcd(pv.front().second, cur.front().second);
      mpz_class ap = pv.front().second / g, ar = cur.front().second / g;
      ZRow tmp;
      std::size_t a = 0, b = 0;
      while (a < cur.size() || b < pv.size()) {
        mpz_class v;
        int c;
        if (b == pv.size() || (a < cur.size() && cur[a].first < pv[b].first)) {
          c = cur[a].first;
          v = ap * cur[a].second;
          ++a;
        } else if (a == cur.size() || pv[b].first < cur[a].first) {
          c = pv[b].first;
          v = -ar * pv[b].second;
          ++b;
        } else {
          c = cur[a].first;
          v = ap * cur[a].second - ar * pv[b].second;
          ++a;
          ++b;
        }
        if (v != 0) tmp.emplace_back(c, v);
      }
      mpz_class content = 0;
      for (auto& e : tmp) content = gcd(content, e.second);
      if (content > 1)
        for (auto& e : tmp) e.second /= content;
      cur = std::move(tmp);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t sparse_rank(std::vector<std::vector<std::pair<int, long long>>> rows, CoefficientField f) {
  int ncols = 0;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    if (!r.empty()) ncols = std::max(ncols, r.back().first + 1);
  }
  if (f.characteristic) return rank_mod_p(rows, f.characteristic, ncols);
  try {
    return rank_rational_int64(rows, ncols);
  } catch (const OverflowSignal&) {
    return rank_rational_mpz(rows, ncols);
  }
}

std::vector<std::size_t> reduced_homology_of_levels(const std::vector<std::vector<VertexSet>>& levels,
                                                    CoefficientField f) {
  if (levels.empty()) return {};
  const std::size_t top = levels.size() - 1;
  // r[k] = rank of the boundary map from faces with k vertices to k-1 vertices.
  std::vector<std::size_t> r(top + 2, 0);
  std::vector<Row> rows;
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& lo = levels[k - 1];
    const auto& hi = levels[k];
    if (hi.empty() || lo.empty()) continue;
    rows.assign(hi.size(), Row{});
    for (std::size_t a = 0; a < hi.size(); ++a) {
      VertexSet face = hi[a];
      Row& row = rows[a];
      row.reserve(k);
      long long sign = 1;
      VertexSet rest = face;
      while (rest) {
        int v = lowest(rest);
        rest &= rest - 1;
        VertexSet g = face & ~bit(v);
        auto it = std::lower_bound(lo.begin(), lo.end(), g);
        row.emplace_back(static_cast<int>(it - lo.begin()), sign);
        sign = -sign;
      }
      std::sort(row.begin(), row.end());
    }
    if (k == 1) {
      r[k] = 1;  // every vertex maps to ∅
      continue;
    }
    std::size_t ncols = lo.size();
    int nc = static_cast<int>(ncols);
    if (f.characteristic) {
      r[k] = rank_mod_p(rows, f.characteristic, nc);
    } else {
      try {
        r[k] = rank_rational_int64(rows, nc);
      } catch (const OverflowSignal&) {
        r[k] = rank_rational_mpz(rows, nc);
      }
    }
  }
  std::vector<std::size_t> h(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) h[k] = levels[k].size() - r[k] - r[k + 1];
  return h;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& d, CoefficientField f) {
  return reduced_homology_of_levels(d.levels(), f);
}

}  // namespace edgeideal
