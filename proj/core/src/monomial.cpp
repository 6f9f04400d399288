#include "edgeideal/monomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

namespace {

constexpr std::uint64_t kExpMax = std::numeric_limits<Exponent>::max();

Exponent checked_add(Exponent a, Exponent b) {
  std::uint64_t s = std::uint64_t{a} + b;
  if (s > kExpMax) fail(Errc::Overflow, "exponent overflow");
  return static_cast<Exponent>(s);
}

void check_same_n(std::size_t a, std::size_t b) {
  if (a != b) fail(Errc::InvalidArgument, "variable count mismatch");
}

// Mixed-radix indexing of the exponent box prod [0..a_i].
struct Box {
  std::vector<Exponent> a;
  std::vector<std::size_t> stride;
  std::size_t cells = 1;

  // Returns false when the box exceeds `limit` cells.
  bool init(const std::vector<Exponent>& top, std::size_t limit) {
    a = top;
    stride.assign(a.size(), 0);
    cells = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      stride[i] = cells;
      std::size_t len = std::size_t{a[i]} + 1;
      if (cells > limit / len) return false;
      cells *= len;
    }
    return cells <= limit;
  }
  std::size_t index(const std::vector<Exponent>& e) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k += e[i] * stride[i];
    return k;
  }
  // Odometer increment in index order.
  void next(std::vector<Exponent>& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < a[i]) {
        ++e[i];
        return;
      }
      e[i] = 0;
    }
  }
};

// inJ over the box: a cell is in the ideal iff it is a generator or a cell one
// step below is.  `marks` holds generator cells.
std::vector<std::uint8_t> box_membership(const Box& box, std::vector<std::uint8_t> marks) {
  std::vector<Exponent> e(box.a.size(), 0);
  for (std::size_t k = 0; k < box.cells; ++k, box.next(e)) {
    if (marks[k]) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0 && marks[k - box.stride[i]]) {
        marks[k] = 1;
        break;
      }
    }
  }
  return marks;
}

std::vector<Monomial> minimal_quadratic(std::vector<Monomial> gens) {
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool divisible = false;
    for (const auto& k : kept) {
      if (k.degree() < g.degree() && k.divides(g)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<Monomial> minimal_box(const Box& box, const std::vector<Monomial>& gens) {
  std::vector<std::uint8_t> marks(box.cells, 0);
  for (const auto& g : gens) marks[box.index(g.exponents())] = 1;
  auto in = box_membership(box, marks);
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    std::size_t k = box.index(g.exponents());
    bool minimal = true;
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if (g[i] > 0 && in[k - box.stride[i]]) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(g);
  }
  return kept;
}

std::vector<Exponent> componentwise_max(std::size_t n, const std::vector<Monomial>& gens) {
  std::vector<Exponent> a(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) a[i] = std::max(a[i], g[i]);
  return a;
}

bool irreducible_contained(const IrreducibleIdeal& b, const IrreducibleIdeal& a) {
  // (x_i^{b_i}) ⊆ (x_i^{a_i}) iff each x_i^{b_i} lies in the right-hand side.
  for (std::size_t i = 0; i < b.powers.size(); ++i) {
    if (b.powers[i] == 0) continue;
    if (a.powers[i] == 0 || a.powers[i] > b.powers[i]) return false;
  }
  return true;
}

std::vector<IrreducibleIdeal> irredundant(std::vector<IrreducibleIdeal> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleIdeal> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      if (j != i && irreducible_contained(comps[j], comps[i])) redundant = true;
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::from_support(std::size_t nvars, VertexSet s) {
  if (nvars < 64 && (s >> nvars) != 0) fail(Errc::RangeError, "support outside the variable range");
  std::vector<Exponent> e(nvars, 0);
  for_each_bit(s, [&](int i) { e[i] = 1; });
  return Monomial(std::move(e));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent e) {
  if (i >= nvars) fail(Errc::RangeError, "variable index out of range");
  std::vector<Exponent> v(nvars, 0);
  v[i] = e;
  return Monomial(std::move(v));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  if (exps_.size() > 64) fail(Errc::RangeError, "support masks need at most 64 variables");
  VertexSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s |= bit(static_cast<int>(i));
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_n(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint32_t t) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t v = std::uint64_t{exps_[i]} * t;
    if (v > kExpMax) fail(Errc::Overflow, "exponent overflow");
    e[i] = static_cast<Exponent>(v);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::divide(const Monomial& d) const {
  if (!d.divides(*this)) fail(Errc::InvalidArgument, "inexact monomial division");
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - d.exps_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_n(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_n(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool graded_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

std::vector<Exponent> MonomialIdeal::max_exponents() const { return componentwise_max(n_, gens_); }

VertexSet MonomialIdeal::support() const {
  VertexSet s = 0;
  for (const auto& g : gens_) s |= g.support();
  return s;
}

std::vector<VertexSet> MonomialIdeal::support_masks() const {
  std::vector<VertexSet> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

MonomialIdeal minimalize_generators(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    check_same_n(g.nvars(), nvars);
    if (g.is_unit()) fail(Errc::UnitGenerator, "the unit monomial generates the whole ring");
  }
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal I(nvars);
  if (gens.size() > 1) {
    Box box;
    std::size_t budget = std::min(limits().box_cells, std::max<std::size_t>(4096, 32 * gens.size()));
    if (gens.size() > 64 && box.init(componentwise_max(nvars, gens), budget))
      gens = minimal_box(box, gens);
    else
      gens = minimal_quadratic(std::move(gens));
  }
  I.gens_ = std::move(gens);
  I.squarefree_ = std::all_of(I.gens_.begin(), I.gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  return I;
}

MonomialIdeal squarefree_ideal(std::size_t nvars, const std::vector<VertexSet>& supports) {
  std::vector<Monomial> g;
  g.reserve(supports.size());
  for (VertexSet s : supports) g.push_back(Monomial::from_support(nvars, s));
  return minimalize_generators(nvars, std::move(g));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_n(a.nvars(), b.nvars());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.nvars());
  std::size_t cand = a.size() * b.size();
  if (cand > 50 * limits().power_generators)
    fail(Errc::ResourceExceeded, "product has too many candidate generators");
  std::vector<Monomial> g;
  g.reserve(cand);
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  auto out = minimalize_generators(a.nvars(), std::move(g));
  if (out.size() > limits().power_generators) fail(Errc::ResourceExceeded, "generator count limit exceeded");
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_n(a.nvars(), b.nvars());
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return minimalize_generators(a.nvars(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned t) {
  if (t == 0) fail(Errc::RangeError, "power exponent must be positive");
  MonomialIdeal J = I;
  for (unsigned s = 1; s < t; ++s) J = product(J, I);
  return J;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& c) {
  check_same_n(I.nvars(), c.nvars());
  std::vector<Monomial> g;
  g.reserve(I.size());
  for (const auto& x : I.generators()) {
    Monomial q = x.divide(gcd(x, c));
    if (q.is_unit()) fail(Errc::UnitGenerator, "c lies in I, so (I : c) is the unit ideal");
    g.push_back(std::move(q));
  }
  return minimalize_generators(I.nvars(), std::move(g));
}

MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) fail(Errc::InvalidArgument, "intersection of an empty list");
  MonomialIdeal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    check_same_n(acc.nvars(), ideals[k].nvars());
    if (acc.is_zero() || ideals[k].is_zero()) return MonomialIdeal(acc.nvars());
    std::vector<Monomial> g;
    g.reserve(acc.size() * ideals[k].size());
    for (const auto& x : acc.generators())
      for (const auto& y : ideals[k].generators()) g.push_back(lcm(x, y));
    acc = minimalize_generators(acc.nvars(), std::move(g));
    if (acc.size() > limits().power_generators) fail(Errc::ResourceExceeded, "generator count limit exceeded");
  }
  return acc;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  check_same_n(I.nvars(), m.nvars());
  return std::any_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  return std::all_of(J.generators().begin(), J.generators().end(), [&](const Monomial& g) { return contains(I, g); });
}

// ---------------------------------------------------------------------------
// Primes

PrimeSet::PrimeSet(std::vector<VertexSet> supports) : primes_(std::move(supports)) {
  sort_lex(primes_);
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

void PrimeSet::insert(VertexSet s) {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), s, lex_less);
  if (it == primes_.end() || *it != s) primes_.insert(it, s);
}

void PrimeSet::merge(const PrimeSet& other) {
  for (VertexSet s : other.primes_) insert(s);
}

bool PrimeSet::contains(VertexSet s) const { return std::binary_search(primes_.begin(), primes_.end(), s, lex_less); }

bool PrimeSet::includes(const PrimeSet& other) const {
  return std::all_of(other.primes_.begin(), other.primes_.end(), [&](VertexSet s) { return contains(s); });
}

std::string to_string(const PrimeSet& p) {
  std::string s = "{";
  bool first = true;
  for (VertexSet q : p.supports()) {
    if (!first) s += ", ";
    first = false;
    s += '(';
    bool f2 = true;
    for_each_bit(q, [&](int i) {
      if (!f2) s += ',';
      f2 = false;
      s += 'x' + std::to_string(i + 1);
    });
    s += ')';
  }
  return s + "}";
}

VertexSet IrreducibleIdeal::radical() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i]) s |= bit(static_cast<int>(i));
  return s;
}

MonomialIdeal IrreducibleIdeal::to_ideal() const {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i]) g.push_back(Monomial::variable(powers.size(), i, powers[i]));
  return minimalize_generators(powers.size(), std::move(g));
}

// ---------------------------------------------------------------------------
// Decomposition

std::vector<IrreducibleIdeal> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero()) fail(Errc::InvalidArgument, "the zero ideal has no irreducible decomposition");
  Box box;
  if (!box.init(I.max_exponents(), limits().box_cells)) return irreducible_decomposition_by_splitting(I);

  std::vector<std::uint8_t> marks(box.cells, 0);
  for (const auto& g : I.generators()) marks[box.index(g.exponents())] = 1;
  auto in = box_membership(box, std::move(marks));

  // Socle of the artinian closure I + (x_i^{a_i+1}); artificial powers dropped.
  std::vector<IrreducibleIdeal> comps;
  std::vector<Exponent> e(box.a.size(), 0);
  const std::size_t n = box.a.size();
  for (std::size_t k = 0; k < box.cells; ++k, box.next(e)) {
    if (in[k]) continue;
    bool socle = true;
    for (std::size_t i = 0; i < n && socle; ++i)
      if (e[i] < box.a[i] && !in[k + box.stride[i]]) socle = false;
    if (!socle) continue;
    IrreducibleIdeal q;
    q.powers.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] < box.a[i]) q.powers[i] = e[i] + 1;
    comps.push_back(std::move(q));
    if (comps.size() > limits().components) fail(Errc::ResourceExceeded, "too many irreducible components");
  }
  return irredundant(std::move(comps));
}

std::vector<IrreducibleIdeal> irreducible_decomposition_by_splitting(const MonomialIdeal& I) {
  if (I.is_zero()) fail(Errc::InvalidArgument, "the zero ideal has no irreducible decomposition");
  const std::size_t n = I.nvars();
  std::set<std::vector<Monomial>> seen;
  std::vector<IrreducibleIdeal> leaves;

  std::function<void(const MonomialIdeal&)> split = [&](const MonomialIdeal& J) {
    if (!seen.insert(J.generators()).second) return;
    if (seen.size() > limits().components) fail(Errc::ResourceExceeded, "splitting tree too large");
    for (const auto& g : J.generators()) {
      if (popcount(g.support()) < 2) continue;
      std::size_t i = static_cast<std::size_t>(lowest(g.support()));
      Monomial u = Monomial::variable(n, i, g[i]);
      Monomial v = g.divide(u);
      auto g1 = J.generators();
      g1.push_back(u);
      auto g2 = J.generators();
      g2.push_back(v);
      split(minimalize_generators(n, std::move(g1)));
      split(minimalize_generators(n, std::move(g2)));
      return;
    }
    IrreducibleIdeal q;
    q.powers.assign(n, 0);
    for (const auto& g : J.generators()) q.powers[static_cast<std::size_t>(lowest(g.support()))] = static_cast<Exponent>(g.degree());
    leaves.push_back(std::move(q));
  };
  split(I);
  return irredundant(std::move(leaves));
}

PrimeSet associated_primes(const MonomialIdeal& I) {
  std::vector<VertexSet> r;
  for (const auto& q : irreducible_decomposition(I)) r.push_back(q.radical());
  return PrimeSet(std::move(r));
}

PrimeSet minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero()) fail(Errc::InvalidArgument, "the zero ideal has no minimal primes here");
  return PrimeSet(minimal_transversals(minimal_sets(I.support_masks())));
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned t) {
  if (!I.is_squarefree()) fail(Errc::SquareFreeRequired, "symbolic power needs a square-free ideal");
  if (t == 0) fail(Errc::RangeError, "power exponent must be positive");
  const std::size_t n = I.nvars();
  if (I.is_zero() || t == 1) return I;
  const auto primes = minimal_primes(I).supports();
  VertexSet used = 0;
  for (VertexSet p : primes) used |= p;

  std::vector<Exponent> top(n, 0);
  for_each_bit(used, [&](int i) { top[i] = t; });
  Box box;
  std::size_t budget = std::min(limits().box_cells, std::size_t{50000000} / std::max<std::size_t>(1, primes.size()));
  if (box.init(top, budget)) {
    std::vector<std::uint8_t> in(box.cells, 0);
    std::vector<Exponent> e(n, 0);
    for (std::size_t k = 0; k < box.cells; ++k, box.next(e)) {
      bool ok = true;
      for (VertexSet p : primes) {
        unsigned s = 0;
        for_each_bit(p, [&](int i) { s += e[i]; });
        if (s < t) {
          ok = false;
          break;
        }
      }
      in[k] = ok;
    }
    std::vector<Monomial> gens;
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t k = 0; k < box.cells; ++k, box.next(e)) {
      if (!in[k]) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if (e[i] > 0 && in[k - box.stride[i]]) minimal = false;
      if (minimal) gens.emplace_back(e);
    }
    return minimalize_generators(n, std::move(gens));
  }

  std::vector<MonomialIdeal> parts;
  for (VertexSet p : primes) parts.push_back(power(squarefree_ideal(n, [&] {
                                                     std::vector<VertexSet> v;
                                                     for_each_bit(p, [&](int i) { v.push_back(bit(i)); });
                                                     return v;
                                                   }()),
                                                   t));
  return intersect(parts);
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (!I.is_squarefree()) fail(Errc::SquareFreeRequired, "Alexander duality needs a square-free ideal");
  if (I.is_zero()) fail(Errc::InvalidArgument, "the zero ideal has no Alexander dual here");
  return squarefree_ideal(I.nvars(), minimal_transversals(I.support_masks()));
}

// ---------------------------------------------------------------------------
// Linear quotients

LinearQuotients has_linear_quotients(const MonomialIdeal& I) {
  if (I.is_zero()) fail(Errc::InvalidArgument, "linear quotients of the zero ideal");
  const std::size_t q = I.size();
  if (q > static_cast<std::size_t>(limits().linear_quotient_generators))
    fail(Errc::ResourceExceeded, "too many generators for the ordering search");
  const auto& g = I.generators();
  // quot[j][k]: support of g_j / gcd(g_j, g_k), and whether it has degree one.
  std::vector<std::vector<VertexSet>> quot(q, std::vector<VertexSet>(q, 0));
  std::vector<std::vector<int>> linear_var(q, std::vector<int>(q, -1));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < q; ++k) {
      if (j == k) continue;
      Monomial r = g[j].divide(gcd(g[j], g[k]));
      quot[j][k] = r.support();
      if (r.degree() == 1) linear_var[j][k] = lowest(r.support());
    }

  LinearQuotients res;
  std::vector<std::uint8_t> dead(std::size_t{1} << q, 0);
  std::vector<std::size_t> order;
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t used) -> bool {
    if (used == (std::uint32_t{1} << q) - 1) return true;
    if (dead[used]) return false;
    ++res.states_explored;
    for (std::size_t k = 0; k < q; ++k) {
      if (used & (1u << k)) continue;
      VertexSet linear = 0;
      for (std::size_t j = 0; j < q; ++j)
        if ((used >> j & 1) && linear_var[j][k] >= 0) linear |= bit(linear_var[j][k]);
      bool ok = true;
      for (std::size_t j = 0; j < q && ok; ++j)
        if ((used >> j & 1) && !(quot[j][k] & linear)) ok = false;
      if (!ok) continue;
      order.push_back(k);
      if (dfs(used | (1u << k))) return true;
      order.pop_back();
    }
    dead[used] = 1;
    return false;
  };
  res.has = dfs(0);
  if (res.has) res.order = order;
  return res;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1;
  std::size_t line_start = 0;

  int column() const { return static_cast<int>(pos - line_start) + 1; }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(line, column(), msg); }
};

std::uint64_t parse_uint(const std::string& s, std::size_t& i, int line, std::size_t line_start) {
  std::size_t start = i;
  std::uint64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<unsigned>(s[i] - '0');
    if (v > kExpMax) throw ParseError(line, static_cast<int>(start - line_start) + 1, "number too large");
    ++i;
  }
  if (i == start) throw ParseError(line, static_cast<int>(i - line_start) + 1, "expected a number");
  return v;
}

Monomial parse_monomial_line(const std::string& s, std::size_t begin, std::size_t end, std::size_t nvars, int line,
                             std::size_t line_start, bool allow_unit = false) {
  std::vector<Exponent> e(nvars, 0);
  std::size_t i = begin;
  auto skip = [&] {
    while (i < end && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  };
  auto col = [&] { return static_cast<int>(i - line_start) + 1; };
  skip();
  if (i < end && s[i] == '1') {
    std::size_t j = i + 1;
    while (j < end && (s[j] == ' ' || s[j] == '\t' || s[j] == '\r')) ++j;
    if (j == end && allow_unit) return Monomial(nvars);
    if (j == end) fail(Errc::UnitGenerator, "line " + std::to_string(line) + ": the unit monomial is not allowed");
  }
  bool need_factor = true;
  while (true) {
    skip();
    if (i >= end) {
      if (need_factor) throw ParseError(line, col(), "expected a variable");
      break;
    }
    if (!need_factor) {
      if (s[i] != '*') throw ParseError(line, col(), std::string("unexpected character '") + s[i] + "'");
      ++i;
      need_factor = true;
      continue;
    }
    if (s[i] != 'x') throw ParseError(line, col(), std::string("expected 'x', found '") + s[i] + "'");
    ++i;
    std::size_t vcol = i;
    std::uint64_t v = parse_uint(s, i, line, line_start);
    if (v < 1 || v > nvars)
      throw ParseError(line, static_cast<int>(vcol - line_start) + 1, "variable index out of range");
    std::uint64_t p = 1;
    skip();
    if (i < end && s[i] == '^') {
      ++i;
      skip();
      p = parse_uint(s, i, line, line_start);
      if (p == 0) throw ParseError(line, col() - 1, "exponent must be positive");
    }
    std::uint64_t total = std::uint64_t{e[v - 1]} + p;
    if (total > kExpMax) throw ParseError(line, col(), "exponent overflow");
    e[v - 1] = static_cast<Exponent>(total);
    need_factor = false;
  }
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  std::size_t nvars = 0;
  bool have_header = false;
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  int line = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line;
    std::size_t end = text.find('#', pos);
    if (end == std::string::npos || end > eol) end = eol;
    std::size_t b = pos;
    while (b < end && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    std::size_t e = end;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b < e) {
      if (!have_header) {
        if (text.compare(b, 4, "vars") != 0) throw ParseError(line, static_cast<int>(b - pos) + 1, "expected header 'vars n'");
        std::size_t i = b + 4;
        if (i >= e || !std::isspace(static_cast<unsigned char>(text[i])))
          throw ParseError(line, static_cast<int>(i - pos) + 1, "expected a space after 'vars'");
        while (i < e && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        nvars = parse_uint(text, i, line, pos);
        if (i != e) throw ParseError(line, static_cast<int>(i - pos) + 1, "trailing characters after variable count");
        if (nvars == 0 || nvars > 64) throw ParseError(line, static_cast<int>(b - pos) + 1, "variable count must be in 1..64");
        have_header = true;
      } else {
        gens.push_back(parse_monomial_line(text, b, e, nvars, line, pos));
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (!have_header) throw ParseError(line > 0 ? line : 1, 1, "missing header 'vars n'");
  return minimalize_generators(nvars, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& I) {
  std::string s = "vars " + std::to_string(I.nvars()) + "\n";
  for (const auto& g : I.generators()) s += to_string(g) + "\n";
  return s;
}

Monomial parse_monomial(const std::string& text, std::size_t nvars) {
  return parse_monomial_line(text, 0, text.size(), nvars, 1, 0, true);
}

}  // namespace edgeideal
