#include "edgeideal/ass.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "edgeideal/limits.hpp"
#include "edgeideal/polyhedra.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

PrimeSet ass_powers(const MonomialIdeal& I, unsigned t) { return associated_primes(power(I, t)); }

Monomial cycle_witness(const Clutter& g, unsigned t) {
  if (!g.is_graph()) fail(Errc::ShapeMismatch, "cycle witnesses need a graph");
  const int n = g.num_vertices();
  VertexSet leaves = 0;
  for (int v = 0; v < n; ++v)
    if (popcount(g.neighbors(v)) == 1) leaves |= bit(v);
  VertexSet core = full_set(n) & ~leaves;
  for_each_bit(leaves, [&](int v) {
    if (!(g.neighbors(v) & core)) fail(Errc::ShapeMismatch, "a vertex off the cycle is not a leaf");
  });
  int len = popcount(core);
  if (len < 3 || len % 2 == 0) fail(Errc::ShapeMismatch, "no odd cycle with only leaves outside it");
  for_each_bit(core, [&](int v) {
    if (popcount(g.neighbors(v) & core) != 2) fail(Errc::ShapeMismatch, "the non-leaf vertices do not form a cycle");
  });
  Clutter c = induced(g, core);
  if (!is_connected(c)) fail(Errc::ShapeMismatch, "the non-leaf vertices do not form a single cycle");
  unsigned k = static_cast<unsigned>(len - 1) / 2;
  if (t < k + 1) fail(Errc::ShapeMismatch, "the witness exists only for t >= k + 1");
  int a = lowest(core);
  int b = lowest(g.neighbors(a) & core);
  Monomial base = Monomial::from_support(static_cast<std::size_t>(n), core);
  Monomial edge = Monomial::from_support(static_cast<std::size_t>(n), bit(a) | bit(b));
  return base * edge.pow(t - k - 1);
}

// ---------------------------------------------------------------------------
// Outward growth from odd cycles

namespace {

struct GraphParts {
  std::size_t n = 0;
  VertexSet linear = 0;  // degree-one generators
  VertexSet loops = 0;   // x^s with s >= 2
  std::vector<VertexSet> nb;
  std::vector<VertexSet> edges;
};

GraphParts split_generators(const MonomialIdeal& I) {
  GraphParts p;
  p.n = I.nvars();
  if (p.n > static_cast<std::size_t>(limits().ass_star_n)) fail(Errc::ResourceExceeded, "ass_star limited to ass_star_n variables");
  p.nb.assign(p.n, 0);
  for (const auto& g : I.generators()) {
    VertexSet s = g.support();
    if (popcount(s) == 1) {
      if (g.degree() == 1) p.linear |= s;
      else p.loops |= s;
    } else if (popcount(s) == 2 && g.degree() == 2) {
      p.edges.push_back(s);
      int a = lowest(s), b = lowest(s & (s - 1));
      p.nb[static_cast<std::size_t>(a)] |= bit(b);
      p.nb[static_cast<std::size_t>(b)] |= bit(a);
    } else {
      fail(Errc::GraphRequired, "ass_star takes quadrics x_i x_j, powers x_i^s and variables");
    }
  }
  return p;
}

VertexSet closed_neighborhood(const GraphParts& p, VertexSet s) {
  VertexSet out = s;
  for_each_bit(s, [&](int v) { out |= p.nb[static_cast<std::size_t>(v)]; });
  return out;
}

struct Seed {
  VertexSet vertices;
  unsigned k;
};

std::map<VertexSet, unsigned> grow(const GraphParts& p, unsigned t) {
  std::vector<Seed> seeds;
  for_each_bit(p.loops, [&](int v) { seeds.push_back({bit(v), 0}); });
  if (!p.edges.empty()) {
    std::vector<std::pair<int, int>> e;
    for (VertexSet s : p.edges) e.emplace_back(lowest(s), lowest(s & (s - 1)));
    Clutter g = graph_from_edges(static_cast<int>(p.n), e);
    for (const auto& cyc : induced_cycles(g)) {
      if (cyc.size() % 2 == 0) continue;
      VertexSet s = 0;
      for (int v : cyc) s |= bit(v);
      seeds.push_back({s, static_cast<unsigned>(cyc.size() - 1) / 2});
    }
  }

  // Collections of pairwise disjoint, non-adjacent seeds enter at 1 + sum k_i.
  std::map<VertexSet, unsigned> best;
  std::function<void(std::size_t, VertexSet, VertexSet, unsigned)> combine = [&](std::size_t from, VertexSet red,
                                                                                 VertexSet blocked, unsigned tt) {
    if (red) {
      auto it = best.find(red);
      if (it == best.end() || it->second > tt) best[red] = tt;
    }
    for (std::size_t i = from; i < seeds.size(); ++i) {
      const Seed& s = seeds[i];
      if (s.vertices & blocked) continue;
      unsigned nt = (red ? tt : 1) + s.k;
      if (nt > t) continue;
      combine(i + 1, red | s.vertices, blocked | closed_neighborhood(p, s.vertices), nt);
    }
  };
  combine(0, 0, 0, 0);

  // Breadth-first growth: turn a blue vertex red, one power at a time.
  std::vector<std::vector<VertexSet>> bucket(t + 2);
  for (auto& [red, tt] : best) bucket[tt].push_back(red);
  for (unsigned level = 1; level < t; ++level) {
    for (std::size_t i = 0; i < bucket[level].size(); ++i) {
      VertexSet red = bucket[level][i];
      if (best[red] != level) continue;
      VertexSet blue = closed_neighborhood(p, red) & ~red;
      for_each_bit(blue, [&](int x) {
        VertexSet r2 = red | bit(x);
        auto it = best.find(r2);
        if (it == best.end() || it->second > level + 1) {
          best[r2] = level + 1;
          bucket[level + 1].push_back(r2);
        }
      });
    }
  }
  return best;
}

std::vector<AssStarState> states_for(const MonomialIdeal& I, unsigned t) {
  GraphParts p = split_generators(I);
  std::vector<AssStarState> out;
  if (t == 0) return out;
  auto grown = grow(p, t);
  PrimeSet minimal = I.is_zero() ? PrimeSet{} : minimal_primes(I);
  std::map<VertexSet, AssStarState> by_prime;
  for (auto& [red, tt] : grown) {
    VertexSet colored = closed_neighborhood(p, red);
    std::vector<VertexSet> rest;
    for (VertexSet e : p.edges)
      if (!(e & colored)) rest.push_back(e);
    for_each_bit(p.loops & ~colored, [&](int v) { rest.push_back(bit(v)); });
    for (VertexSet cover : minimal_transversals(rest)) {
      VertexSet prime = colored | cover | p.linear;
      if (minimal.contains(prime)) continue;
      AssStarState st{red, colored & ~red, cover, tt};
      auto it = by_prime.find(prime);
      if (it == by_prime.end() || it->second.t > tt ||
          (it->second.t == tt && it->second.red > red))
        by_prime[prime] = st;
    }
  }
  for (auto& [prime, st] : by_prime) out.push_back(st);
  std::sort(out.begin(), out.end(), [](const AssStarState& a, const AssStarState& b) {
    VertexSet pa = a.red | a.blue | a.cover_rest, pb = b.red | b.blue | b.cover_rest;
    return lex_less(pa, pb);
  });
  return out;
}

}  // namespace

PrimeSet ass_star(const MonomialIdeal& I, unsigned t) {
  GraphParts p = split_generators(I);
  PrimeSet out;
  for (const auto& s : states_for(I, t)) out.insert(s.red | s.blue | s.cover_rest | p.linear);
  return out;
}

std::vector<AssStarState> ass_star_states(const MonomialIdeal& I, unsigned t) { return states_for(I, t); }

// ---------------------------------------------------------------------------

const char* ntf_name(Ntf v) {
  switch (v) {
    case Ntf::Yes: return "yes";
    case Ntf::No: return "no";
    case Ntf::UnknownUpToT: return "unknown-up-to-T";
  }
  return "?";
}

NtfResult ntf_check(const MonomialIdeal& I, unsigned t_max) {
  if (!I.is_squarefree()) fail(Errc::SquareFreeRequired, "ntf_check needs a square-free ideal");
  NtfResult r;
  r.window = t_max;
  if (I.is_zero()) {
    r.verdict = Ntf::Yes;
    r.reason = "zero ideal";
    return r;
  }
  Clutter c = clutter_of(I);
  if (c.is_graph() && is_bipartite(c)) {
    r.verdict = Ntf::Yes;
    r.reason = "bipartite";
    return r;
  }
  try {
    if (is_totally_unimodular(IncidenceMatrix(c)).unimodular) {
      r.verdict = Ntf::Yes;
      r.reason = "totally unimodular";
      return r;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::ResourceExceeded) throw;
  }
  MonomialIdeal pw = I;
  for (unsigned t = 2; t <= t_max; ++t) {
    pw = product(pw, I);
    if (!(pw == symbolic_power(I, t))) {
      r.verdict = Ntf::No;
      r.witness_t = t;
      r.reason = "symbolic power";
      return r;
    }
  }
  r.verdict = Ntf::UnknownUpToT;
  r.reason = "scan";
  return r;
}

std::optional<unsigned> graph_stability_bound(const MonomialIdeal& I) {
  if (!I.is_squarefree() || I.is_zero()) return std::nullopt;
  Clutter c = clutter_of(I);
  if (!c.is_graph()) return std::nullopt;
  VertexSet used = c.vertex_set() & ~c.isolated_vertices();
  Clutter g = induced(c, used);
  if (!is_connected(g) || is_bipartite(g)) return std::nullopt;
  auto d = odd_cycle_data(g);
  unsigned k = static_cast<unsigned>(*d.smallest_odd_cycle_length - 1) / 2;
  unsigned bound = static_cast<unsigned>(g.num_vertices()) - k - static_cast<unsigned>(d.leaves.size());
  return std::max(1u, bound);
}

unsigned default_tmax(const MonomialIdeal& I) {
  auto b = graph_stability_bound(I);
  return b ? *b : 4u;
}

AssReport stability_scan(const MonomialIdeal& I, unsigned t_max) {
  if (t_max < 1) fail(Errc::RangeError, "t_max must be at least 1");
  if (I.is_zero()) fail(Errc::InvalidArgument, "associated primes of the zero ideal");
  AssReport r;
  r.window = t_max;
  MonomialIdeal pw = I;
  for (unsigned t = 1; t <= t_max; ++t) {
    if (t > 1) pw = product(pw, I);
    r.per_t[t] = associated_primes(pw);
  }
  for (unsigned t = 1; t < t_max; ++t)
    if (!r.per_t[t + 1].includes(r.per_t[t])) r.chain_ok = false;
  unsigned n = t_max;
  while (n > 1 && r.per_t[n - 1] == r.per_t[t_max]) --n;
  r.stable_index = n;

  if (I.is_squarefree()) {
    r.ntf = ntf_check(I, t_max);
    if (r.ntf.verdict == Ntf::Yes) {
      r.stability_proven = true;
    } else if (auto b = graph_stability_bound(I)) {
      r.stability_proven = *b <= t_max && n <= *b;
    }
  } else {
    r.ntf.window = t_max;
    for (unsigned t = 2; t <= t_max; ++t)
      if (!r.per_t[1].includes(r.per_t[t])) {
        r.ntf.verdict = Ntf::No;
        r.ntf.witness_t = t;
        r.ntf.reason = "scan";
        break;
      }
    if (r.ntf.verdict != Ntf::No) r.ntf.reason = "scan";
  }
  return r;
}

}  // namespace edgeideal
