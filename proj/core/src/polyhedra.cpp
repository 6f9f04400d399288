#include "edgeideal/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "edgeideal/limits.hpp"

namespace edgeideal {

IncidenceMatrix::IncidenceMatrix(const Clutter& c) : n_(c.num_vertices()), cols_(c.edges()) {}

std::string to_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].get_str();
  }
  return s + ")";
}

bool is_integral(const RationalPoint& p) {
  return std::all_of(p.begin(), p.end(), [](const mpq_class& v) { return v.get_den() == 1; });
}

// ---------------------------------------------------------------------------
// Double description: extreme rays of {y : h·y >= 0}, starting from the
// nonnegative orthant.

namespace {

struct OverflowSignal {};

inline long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline long long add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline long long sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline long long gcd_abs(long long a, long long b) { return std::gcd(a, b); }
inline int sign(long long a) { return (a > 0) - (a < 0); }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline int sign(const mpz_class& a) { return sgn(a); }

inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpz_class to_mpz(const mpz_class& v) { return v; }

template <class Int>
Int from_ll(long long v) {
  if constexpr (std::is_same_v<Int, long long>) return v;
  else return to_mpz(v);
}

using Bits = std::vector<std::uint64_t>;

bool subset_bits(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

int count_bits(const Bits& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

template <class Int>
struct Ray {
  std::vector<Int> y;
  Bits zero;
};

template <class Int>
std::vector<std::vector<Int>> extreme_rays(int dim, const std::vector<std::vector<long long>>& extra) {
  const std::size_t total = static_cast<std::size_t>(dim) + extra.size();
  const std::size_t words = (total + 63) / 64;
  std::vector<Ray<Int>> rays;
  for (int i = 0; i < dim; ++i) {
    Ray<Int> r;
    r.y.assign(static_cast<std::size_t>(dim), Int(0));
    r.y[static_cast<std::size_t>(i)] = Int(1);
    r.zero.assign(words, 0);
    for (int j = 0; j < dim; ++j)
      if (j != i) r.zero[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
    rays.push_back(std::move(r));
  }
  for (std::size_t c = 0; c < extra.size(); ++c) {
    const auto& h = extra[c];
    const std::size_t cidx = static_cast<std::size_t>(dim) + c;
    std::vector<Int> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      Int s(0);
      for (int i = 0; i < dim; ++i)
        if (h[static_cast<std::size_t>(i)]) s = add(s, mul(from_ll<Int>(h[static_cast<std::size_t>(i)]), rays[r].y[static_cast<std::size_t>(i)]));
      val[r] = s;
    }
    std::vector<Ray<Int>> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      int sg = sign(val[r]);
      if (sg > 0) pos.push_back(r);
      else if (sg < 0) neg.push_back(r);
      if (sg >= 0) {
        Ray<Int> keep = rays[r];
        if (sg == 0) keep.zero[cidx / 64] |= std::uint64_t{1} << (cidx % 64);
        next.push_back(std::move(keep));
      }
    }
    Bits common(words);
    for (std::size_t a : pos) {
      for (std::size_t b : neg) {
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[a].zero[w] & rays[b].zero[w];
        if (count_bits(common) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != a && r != b && subset_bits(common, rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray<Int> nr;
        nr.y.resize(static_cast<std::size_t>(dim));
        Int g(0);
        for (int i = 0; i < dim; ++i) {
          std::size_t k = static_cast<std::size_t>(i);
          nr.y[k] = sub(mul(val[a], rays[b].y[k]), mul(val[b], rays[a].y[k]));
          g = gcd_abs(g, nr.y[k]);
        }
        if (g != Int(0) && g != Int(1))
          for (auto& v : nr.y) v /= g;
        nr.zero = common;
        nr.zero[cidx / 64] |= std::uint64_t{1} << (cidx % 64);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    if (rays.size() > limits().components) fail(Errc::ResourceExceeded, "too many rays in vertex enumeration");
  }
  std::vector<std::vector<Int>> out;
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

// Vertices of {x >= 0 : s·(x·a_j) >= s} for s = +1 (covering) or -1 (packing).
std::vector<RationalPoint> polyhedron_vertices(const IncidenceMatrix& a, int s) {
  const int n = a.rows();
  if (n > limits().polyhedra_n) fail(Errc::ResourceExceeded, "vertex enumeration limited to polyhedra_n vertices");
  const int dim = n + 1;  // homogenising coordinate last
  std::vector<std::vector<long long>> h;
  for (VertexSet col : a.column_supports()) {
    std::vector<long long> row(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < n; ++i)
      if (col >> i & 1) row[static_cast<std::size_t>(i)] = s;
    row[static_cast<std::size_t>(n)] = -s;
    h.push_back(std::move(row));
  }
  std::vector<RationalPoint> out;
  auto collect = [&](const auto& rays) {
    for (const auto& r : rays) {
      if (sign(r[static_cast<std::size_t>(n)]) == 0) continue;  // recession direction
      RationalPoint p(static_cast<std::size_t>(n));
      mpz_class lam = to_mpz(r[static_cast<std::size_t>(n)]);
      for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = mpq_class(to_mpz(r[static_cast<std::size_t>(i)]), lam);
        p[static_cast<std::size_t>(i)].canonicalize();
      }
      out.push_back(std::move(p));
    }
  };
  try {
    collect(extreme_rays<long long>(dim, h));
  } catch (const OverflowSignal&) {
    out.clear();
    collect(extreme_rays<mpz_class>(dim, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<RationalPoint> vertices_Q(const IncidenceMatrix& a) { return polyhedron_vertices(a, 1); }
std::vector<RationalPoint> vertices_P(const IncidenceMatrix& a) { return polyhedron_vertices(a, -1); }

IntegralityReport integrality_report(const Clutter& c) {
  IncidenceMatrix a(c);
  IntegralityReport r;
  r.q_integral = true;
  for (const auto& v : vertices_Q(a))
    if (!is_integral(v)) {
      r.q_integral = false;
      r.fractional_witness = v;
      break;
    }
  r.p_integral = true;
  for (const auto& v : vertices_P(a))
    if (!is_integral(v)) {
      r.p_integral = false;
      r.p_fractional_witness = v;
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Total unimodularity

long long determinant(std::vector<std::vector<long long>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  long long prev = 1;
  int sgn = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && m[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[p], m[r]);
      sgn = -sgn;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[p][p] - static_cast<__int128>(m[i][p]) * m[p][j];
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) fail(Errc::Overflow, "determinant overflow");
        m[i][j] = static_cast<long long>(v);
      }
    prev = m[p][p];
  }
  return sgn * m[k - 1][k - 1];
}

namespace {

// Rows of a 0/1 matrix as bit masks over the other index.
struct BitMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint64_t> r;  // r[i] bit j set iff entry (i, j) is 1
};

// Ghouila-Houri on row subsets: every set of rows has a ±1 signing whose
// signed column sums lie in {-1, 0, 1}.
bool signing_exists(const BitMatrix& m, const std::vector<int>& rows) {
  const std::size_t k = rows.size();
  if (k <= 1) return true;
  // Fix the first sign; try the 2^(k-1) others.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    bool ok = true;
    for (int j = 0; j < m.cols && ok; ++j) {
      int s = 0;
      for (std::size_t a = 0; a < k; ++a)
        if (m.r[static_cast<std::size_t>(rows[a])] >> j & 1) s += (a == 0 || !(mask >> (a - 1) & 1)) ? 1 : -1;
      if (s > 1 || s < -1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TuResult is_totally_unimodular(const IncidenceMatrix& a) {
  const int n = a.rows(), q = a.cols();
  if (std::min(n, q) > limits().tu_min_dim) fail(Errc::ResourceExceeded, "TU test limited to tu_min_dim");
  // Work on the smaller side; A is TU iff its transpose is.
  bool transposed = q < n;
  BitMatrix m;
  m.rows = transposed ? q : n;
  m.cols = transposed ? n : q;
  if (m.cols > 64) fail(Errc::ResourceExceeded, "TU test supports at most 64 columns on the long side");
  m.r.assign(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < q; ++j)
      if (a.at(i, j)) {
        if (transposed) m.r[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        else m.r[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      }

  TuResult res;
  // Row subsets by increasing size; the first failure is a minimal non-TU row set.
  std::vector<int> failing;
  for (int k = 2; k <= m.rows && failing.empty(); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (!signing_exists(m, idx)) {
        failing = idx;
        break;
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m.rows - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  if (failing.empty()) return res;

  // Every proper row subset is TU, so a bad minor uses all the failing rows.
  const int k = static_cast<int>(failing.size());
  std::vector<int> cols(static_cast<std::size_t>(k));
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<std::vector<long long>> sub(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<long long>(m.r[static_cast<std::size_t>(failing[static_cast<std::size_t>(i)])] >> cols[static_cast<std::size_t>(j)] & 1);
    long long d = determinant(sub);
    if (d > 1 || d < -1) {
      res.unimodular = false;
      res.determinant = d;
      res.rows = transposed ? cols : failing;
      res.cols = transposed ? failing : cols;
      return res;
    }
    int i = k - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == m.cols - k + i) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  fail(Errc::InvalidArgument, "internal: signing test failed but no bad minor found");
}

// ---------------------------------------------------------------------------
// Linear programming

mpq_class simplex_max(const std::vector<std::vector<mpq_class>>& m, const std::vector<mpq_class>& b,
                      const std::vector<mpq_class>& c) {
  const std::size_t rows = m.size(), vars = c.size();
  for (const auto& v : b)
    if (v < 0) fail(Errc::InvalidArgument, "simplex_max needs b >= 0");
  // Tableau with slack basis; column vars + i is the slack of row i.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = m[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = b[i];
    basis[i] = vars + i;
  }
  std::vector<mpq_class> z(cols + 1, 0);  // reduced costs: z_j = -c_j initially
  for (std::size_t j = 0; j < vars; ++j) z[j] = -c[j];
  while (true) {
    // Bland: smallest index with negative reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) fail(Errc::InvalidArgument, "unbounded linear program");
    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      mpq_class f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return z[cols];
}

FractionalCover fractional_cover(const IncidenceMatrix& a) {
  FractionalCover f;
  auto verts = vertices_Q(a);
  bool first = true;
  for (const auto& v : verts) {
    mpq_class s = 0;
    for (const auto& x : v) s += x;
    if (first || s < f.cover_lp_value) {
      f.cover_lp_value = s;
      f.cover_optimum = v;
      first = false;
    }
  }
  const int n = a.rows(), q = a.cols();
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(q), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < q; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
  f.matching_lp_value = simplex_max(m, std::vector<mpq_class>(static_cast<std::size_t>(n), 1),
                                    std::vector<mpq_class>(static_cast<std::size_t>(q), 1));
  return f;
}

}  // namespace edgeideal
