#include "edgeideal/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "edgeideal/ass.hpp"
#include "edgeideal/betti.hpp"
#include "edgeideal/families.hpp"
#include "edgeideal/parallel.hpp"
#include "edgeideal/polyhedra.hpp"
#include "edgeideal/ring_properties.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

std::string describe(const Clutter& c) {
  std::string s = "n=" + std::to_string(c.num_vertices()) + " {";
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    if (i) s += ", ";
    s += edge_string(c, c.edges()[i]);
  }
  return s + "}";
}

std::string SuiteResult::to_text(std::size_t max_failures) const {
  std::ostringstream o;
  o << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << instances << " instances, " << failures.size()
    << " failures; " << family << ")\n";
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i)
    o << "  #" << failures[i].serial << " " << failures[i].instance << ": " << failures[i].detail << "\n";
  if (failures.size() > max_failures) o << "  ... " << failures.size() - max_failures << " more\n";
  return o.str();
}

namespace {

// A check returns an empty string on success, otherwise the reason.
struct Instance {
  std::string what;
  std::function<std::string()> check;
};

SuiteResult run(const std::string& name, const std::string& family, const std::vector<Instance>& items) {
  SuiteResult r;
  r.suite = name;
  r.family = family;
  r.instances = items.size();
  std::vector<std::string> outcome(items.size());
  parallel_chunks(items.size(), [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      try {
        outcome[i] = items[i].check();
      } catch (const std::exception& ex) {
        outcome[i] = std::string("exception: ") + ex.what();
      }
    }
  });
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!outcome[i].empty()) r.failures.push_back({i, items[i].what, outcome[i]});
  return r;
}

std::string fmt(const char* what, long long a, long long b) {
  return std::string(what) + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")";
}

HomologicalInvariants hom(const Clutter& c, CoefficientField f) { return homological_invariants(edge_ideal(c), f); }

bool ntf_window(const MonomialIdeal& I, unsigned t_max) {
  for (unsigned t = 2; t <= t_max; ++t)
    if (!(power(I, t) == symbolic_power(I, t))) return false;
  return true;
}

unsigned tmax_or(const SuiteOptions& o, unsigned d) { return o.t_max ? o.t_max : d; }

// Every clutter on up to min(n, 6) vertices, then seeded samples for 7..n.
std::vector<Clutter> clutter_family(const SuiteOptions& o, std::string& family, bool need_edges = true) {
  std::vector<Clutter> out;
  int exhaustive = std::min(o.n, 6);
  for (int m = 1; m <= exhaustive; ++m)
    for (const auto& c : clutters(m))
      if (!need_edges || c.num_edges()) out.push_back(c);
  family = "all clutters n<=" + std::to_string(exhaustive);
  for (int m = 7; m <= o.n; ++m) {
    for (auto& c : random_clutters(m, o.sample, o.seed + static_cast<std::uint64_t>(m)))
      if (!need_edges || c.num_edges()) out.push_back(std::move(c));
    family += ", " + std::to_string(o.sample) + " random clutters n=" + std::to_string(m);
  }
  return out;
}

std::vector<Clutter> graph_family(const SuiteOptions& o, std::string& family, const std::function<bool(const Clutter&)>& pred,
                                  const std::string& what) {
  family = "all " + what + " n<=" + std::to_string(o.n);
  return graphs_up_to(o.n, pred);
}

int min_edge_size(const Clutter& c) {
  int m = 64;
  for (VertexSet e : c.edges()) m = std::min(m, popcount(e));
  return m;
}

MonomialIdeal maximal_ideal(int n) {
  std::vector<VertexSet> v;
  for (int i = 0; i < n; ++i) v.push_back(bit(i));
  return squarefree_ideal(static_cast<std::size_t>(n), v);
}

bool has_edge(const Clutter& c) { return c.num_edges() > 0; }

bool has_leaf(const Clutter& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (popcount(g.neighbors(v)) == 1) return true;
  return false;
}

// ---------------------------------------------------------------------------

SuiteResult terai(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family)) {
    items.push_back({describe(c), [c, &o]() -> std::string {
                       auto Ic = edge_ideal(blocker(c));
                       int alpha0 = covering_number(c);
                       for (auto f : o.fields) {
                         auto hi = hom(c, f);
                         auto hc = homological_invariants(Ic, f);
                         // reg I = 1 + reg R/I, and both cases read reg R/I = pd R/I_c - 1
                         if (hi.reg + 1 != hc.pd) return fmt(("reg R/I + 1 != pd R/I_c over " + f.name()).c_str(), hi.reg + 1, hc.pd);
                         if (alpha0 >= 2) {
                           auto h = hilbert_data(c);
                           if (static_cast<std::size_t>(hi.reg + 1) > h.arith_deg) return fmt("reg I > arith-deg", hi.reg + 1, static_cast<long long>(h.arith_deg));
                         }
                       }
                       if (alpha0 == 1 && c.num_edges() >= 2) {
                         // I = f L with L of height >= 2
                         VertexSet common = c.vertex_set();
                         for (VertexSet e : c.edges()) common &= e;
                         std::vector<VertexSet> rest;
                         for (VertexSet e : c.edges()) rest.push_back(e & ~common);
                         auto L = Clutter::build(c.num_vertices(), rest);
                         if (covering_number(L) < 2) return "height-1 factor L has height < 2";
                         auto fL = product(squarefree_ideal(static_cast<std::size_t>(c.num_vertices()), {common}), edge_ideal(L));
                         if (!(fL == edge_ideal(c))) return "I != f L";
                         auto f0 = o.fields.front();
                         int r = popcount(common);
                         if (hom(c, f0).reg != hom(L, f0).reg + r) return "reg R/I != reg R/L + r";
                       }
                       return "";
                     }});
  }
  return run("terai", family, items);
}

SuiteResult additivity(const SuiteOptions& o) {
  std::vector<Instance> items;
  const int cap = std::min(o.n, 5);
  for (int a = 1; a <= cap; ++a)
    for (int b = a; b <= cap && a + b <= o.n; ++b)
      for (const auto& c1 : clutters(a))
        for (const auto& c2 : clutters(b)) {
          if (a == b && c2.edges() < c1.edges()) continue;
          items.push_back({"disjoint union " + describe(c1) + " + " + describe(c2), [c1, c2, &o]() -> std::string {
                             auto u = disjoint_union(c1, c2);
                             for (auto f : o.fields) {
                               int lhs = hom(u, f).reg, rhs = hom(c1, f).reg + hom(c2, f).reg;
                               if (lhs != rhs) return fmt(("reg not additive over " + f.name()).c_str(), lhs, rhs);
                             }
                             return "";
                           }});
        }
  for (int m = 1; m <= std::min(o.n - 1, 5); ++m)
    for (const auto& c : clutters(m))
      items.push_back({"isolated vertex added to " + describe(c), [c, &o]() -> std::string {
                         for (auto f : o.fields) {
                           int a = hom(c, f).reg, b = hom(disjoint_union(c, Clutter(1)), f).reg;
                           if (a != b) return fmt("reg changed by a new variable", a, b);
                         }
                         return "";
                       }});
  for (int m = 1; m <= cap; ++m)
    for (const auto& c : clutters(m))
      items.push_back({"induced subclutters of " + describe(c), [c, &o]() -> std::string {
                         auto f = o.fields.front();
                         int whole = hom(c, f).reg;
                         for (VertexSet s = 0; s < bit(c.num_vertices()); ++s) {
                           int part = hom(induced(c, s), f).reg;
                           if (part > whole) return fmt(("induced subclutter on mask " + std::to_string(s) + " has larger reg").c_str(), part, whole);
                         }
                         return "";
                       }});
  const int rn = std::min(o.n, 7);
  auto pool = random_clutters(rn, 2 * o.sample, o.seed ^ 0x5eedULL);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    auto c1 = pool[i], c2 = pool[i + 1];
    items.push_back({"pair " + describe(c1) + " ; " + describe(c2), [c1, c2, &o]() -> std::string {
                       auto I1 = edge_ideal(c1), I2 = edge_ideal(c2);
                       auto s = sum(I1, I2), x = intersect({I1, I2});
                       for (auto f : o.fields) {
                         int r1 = homological_invariants(I1, f).reg, r2 = homological_invariants(I2, f).reg;
                         int rs = homological_invariants(s, f).reg, rx = homological_invariants(x, f).reg;
                         if (rs > r1 + r2) return fmt("reg of sum exceeds r1 + r2", rs, r1 + r2);
                         if (rx > r1 + r2 + 1) return fmt("reg of intersection exceeds r1 + r2 + 1", rx, r1 + r2 + 1);
                       }
                       return "";
                     }});
  }
  std::string family = "clutter pairs with both sides n<=" + std::to_string(cap) + " and total <=" + std::to_string(o.n) +
                       ", added variables, induced subclutters, " + std::to_string(pool.size() / 2) +
                       " random pairs n=" + std::to_string(rn);
  return run("additivity", family, items);
}

SuiteResult reg_sandwich(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& g : graph_family(o, family, has_edge, "graphs with an edge")) {
    items.push_back({describe(g), [g, &o]() -> std::string {
                       auto iv = cover_invariants(g);
                       int first = -1;
                       for (auto f : o.fields) {
                         int r = hom(g, f).reg;
                         if (iv.im > r) return fmt("im > reg", iv.im, r);
                         if (r > *iv.beta_prime) return fmt("reg > beta'", r, *iv.beta_prime);
                         if (first >= 0 && r != first) return fmt("reg depends on the field", first, r);
                         first = r;
                       }
                       return "";
                     }});
  }
  return run("reg-sandwich", family, items);
}

SuiteResult chordal_reg(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& g : graph_family(o, family, [](const Clutter&) { return true; }, "graphs (chordal and weakly chordal checked)")) {
    items.push_back({describe(g), [g, &o]() -> std::string {
                       bool ch = is_chordal(g);
                       if (ch != is_chordal_by_cycles(g)) return "chordality routes disagree";
                       if (!ch && !is_weakly_chordal(g)) return "";
                       int im = induced_matching_number(g);
                       for (auto f : o.fields) {
                         int r = hom(g, f).reg;
                         if (r != im) return fmt(ch ? "chordal: reg != im" : "weakly chordal: reg != im", r, im);
                       }
                       return "";
                     }});
  }
  return run("chordal-reg", family, items);
}

SuiteResult froberg(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& g : graph_family(o, family, has_edge, "graphs with an edge")) {
    items.push_back({describe(g), [g, &o]() -> std::string {
                       bool cc = is_chordal(complement_graph(g));
                       for (auto f : o.fields) {
                         int r = hom(g, f).reg;
                         if ((r == 1) != cc) return "reg " + std::to_string(r) + " but complement chordal = " + (cc ? "true" : "false");
                       }
                       return "";
                     }});
  }
  return run("froberg", family, items);
}

SuiteResult duval_skeleton(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family, false)) {
    items.push_back({describe(c), [c, &o]() -> std::string {
                       auto d = independence_complex(c);
                       for (auto f : o.fields) {
                         auto h = hom(c, f);
                         int sk = depth_by_skeletons(d, f);
                         if (sk != h.depth) return fmt(("skeleton depth != n - pd over " + f.name()).c_str(), sk, h.depth);
                         auto p = ring_properties(c, f);
                         if (p.cm != (p.scm && p.unmixed)) return "cm != scm and unmixed over " + f.name();
                         if (p.vertex_decomposable && !p.shellable) return "vertex decomposable but not shellable";
                         if (p.shellable && !p.scm) return "shellable but not sequentially CM over " + f.name();
                         if (p.cm && !p.connected_codim1) return "CM but not connected in codimension 1";
                         // the bound needs I inside m^2, i.e. no variable is an edge
                         if (p.connected_codim1 && c.num_edges() && min_edge_size(c) >= 2) {
                           auto hd = hilbert_data(c);
                           int alpha0 = covering_number(c);
                           if (h.reg > hd.multiplicity - alpha0) return fmt("connected in codim 1 but reg > deg - codim", h.reg, hd.multiplicity - alpha0);
                         }
                       }
                       return "";
                     }});
  }
  return run("duval-skeleton", family, items);
}

SuiteResult scm_pd(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family)) {
    items.push_back({describe(c), [c, &o]() -> std::string {
                       int a0p = cover_invariants(c).alpha0_prime;
                       auto Ic = edge_ideal(blocker(c));
                       auto d = independence_complex(c);
                       for (auto f : o.fields) {
                         int pd = hom(c, f).pd;
                         int regc = homological_invariants(Ic, f).reg;
                         if (regc < a0p - 1) return fmt("reg R/I_c < alpha0' - 1", regc, a0p - 1);
                         if (pd < a0p) return fmt("pd R/I < alpha0'", pd, a0p);
                         if (is_sequentially_cm(d, f) && (regc != a0p - 1 || pd != a0p))
                           return "sequentially CM over " + f.name() + " but reg R/I_c = " + std::to_string(regc) + ", pd = " +
                                  std::to_string(pd) + ", alpha0' = " + std::to_string(a0p);
                       }
                       return "";
                     }});
  }
  return run("scm-pd", family, items);
}

SuiteResult leaf_chain(const SuiteOptions& o) {
  std::string family;
  const unsigned T = tmax_or(o, 4);
  std::vector<Instance> items;
  auto pred = [](const Clutter& g) { return g.num_vertices() >= 2 && is_connected(g) && has_leaf(g); };
  for (const auto& g : graph_family(o, family, pred, "connected graphs with a leaf")) {
    items.push_back({describe(g), [g, T]() -> std::string {
                       auto I = edge_ideal(g);
                       PrimeSet prev = ass_powers(I, 1);
                       for (unsigned t = 2; t <= T; ++t) {
                         PrimeSet cur = ass_powers(I, t);
                         if (!cur.includes(prev)) return "Ass(R/I^" + std::to_string(t - 1) + ") not contained in Ass(R/I^" + std::to_string(t) + ")";
                         prev = std::move(cur);
                       }
                       return "";
                     }});
  }
  family += ", t<=" + std::to_string(T);
  return run("leaf-chain", family, items);
}

// Whiskered odd cycle: cycle 0..L-1, leaves[i] extra vertices hanging off vertex i.
Clutter whiskered_cycle(int len, const std::vector<int>& leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  int next = len;
  for (int i = 0; i < len; ++i)
    for (int k = 0; k < leaves[static_cast<std::size_t>(i)]; ++k) edges.emplace_back(i, next++);
  return graph_from_edges(next, edges);
}

SuiteResult cycle_ass(const SuiteOptions& o) {
  std::vector<Instance> items;
  for (int len = 3; len <= o.n; len += 2) {
    const unsigned k = static_cast<unsigned>(len - 1) / 2;
    auto c = cycle_graph(len);
    items.push_back({"C" + std::to_string(len), [c, k, len]() -> std::string {
                       auto I = edge_ideal(c);
                       auto mins = minimal_primes(I);
                       for (unsigned t = 1; t <= k + 2; ++t) {
                         auto expect = mins;
                         if (t > k) expect.insert(full_set(len));
                         if (!(ass_powers(I, t) == expect)) return "Ass(R/I^" + std::to_string(t) + ") = " + to_string(ass_powers(I, t));
                         if (t > k) {
                           auto w = cycle_witness(c, t);
                           if (w.degree() != 2 * t - 1) return "witness degree";
                           if (!(colon(power(I, t), w) == maximal_ideal(len))) return "colon by the witness is not m at t=" + std::to_string(t);
                         }
                       }
                       return "";
                     }});
    // whiskers: distribute up to n - len leaves over the cycle
    std::vector<int> leaves(static_cast<std::size_t>(len), 0);
    std::function<void(int, int)> distribute = [&](int pos, int left) {
      if (pos == len) {
        int total = 0;
        for (int x : leaves) total += x;
        if (total == 0) return;
        auto g = whiskered_cycle(len, leaves);
        items.push_back({"whiskered " + describe(g), [g, k]() -> std::string {
                           auto I = edge_ideal(g);
                           auto m = maximal_ideal(g.num_vertices());
                           for (unsigned t = k + 1; t <= k + 2; ++t) {
                             auto w = cycle_witness(g, t);
                             if (w.degree() != 2 * t - 1) return "witness degree";
                             if (!(colon(power(I, t), w) == m)) return "colon by the witness is not m at t=" + std::to_string(t);
                           }
                           return "";
                         }});
        return;
      }
      for (int x = 0; x <= left; ++x) {
        leaves[static_cast<std::size_t>(pos)] = x;
        distribute(pos + 1, left - x);
      }
      leaves[static_cast<std::size_t>(pos)] = 0;
    };
    if (o.n - len <= 2) distribute(0, o.n - len);
  }
  // Built-outward primes are associated; at the stability bound they are all
  // the embedded ones, and for a unique odd cycle at every t.
  const int gn = std::min(o.n, 6);
  const unsigned T = tmax_or(o, 4);
  for (const auto& g : graphs_up_to(gn, [](const Clutter& g) { return g.num_vertices() >= 3 && is_connected(g) && !is_bipartite(g); })) {
    items.push_back({"built outward " + describe(g), [g, T]() -> std::string {
                       auto I = edge_ideal(g);
                       auto mins = minimal_primes(I);
                       auto bound = graph_stability_bound(I);
                       bool unique_cycle = odd_cycle_data(g).induced_odd_cycles.size() == 1 && induced_cycles(g).size() == 1;
                       unsigned top = std::min<unsigned>(T, bound ? *bound : T);
                       if (bound && *bound <= T) top = *bound;
                       for (unsigned t = 1; t <= top; ++t) {
                         auto ass = ass_powers(I, t);
                         auto star = ass_star(I, t);
                         if (!ass.includes(star)) return "Ass* not inside Ass at t=" + std::to_string(t);
                         PrimeSet both = mins;
                         both.merge(star);
                         bool at_bound = bound && t == *bound;
                         if ((at_bound || unique_cycle) && !(both == ass))
                           return "Ass(R/I^" + std::to_string(t) + ") = " + to_string(ass) + " but Min u Ass* = " + to_string(both);
                       }
                       return "";
                     }});
  }
  // Loops: a square generator counts as a cycle of length one.
  for (const auto& g : graphs_up_to(std::min(o.n, 4), [](const Clutter& g) { return g.num_vertices() >= 2 && is_connected(g); })) {
    items.push_back({"loop at vertex 1 of " + describe(g), [g]() -> std::string {
                       std::size_t n = static_cast<std::size_t>(g.num_vertices());
                       std::vector<Monomial> gens = edge_ideal(g).generators();
                       std::vector<Exponent> sq(n, 0);
                       sq[0] = 2;
                       gens.push_back(Monomial(sq));
                       auto I = minimalize_generators(n, gens);
                       for (unsigned t = 1; t <= 3; ++t)
                         if (!ass_powers(I, t).includes(ass_star(I, t))) return "Ass* not inside Ass at t=" + std::to_string(t);
                       return "";
                     }});
  }
  return run("cycle-ass", "odd cycles up to n, whiskered cycles, connected non-bipartite graphs n<=" + std::to_string(gn) + ", looped graphs n<=4", items);
}

// Ass of a sum on disjoint variables from the Ass of the summands.
PrimeSet compose(const std::vector<PrimeSet>& a1, const std::vector<PrimeSet>& a2, int shift, unsigned t) {
  PrimeSet out;
  for (unsigned t1 = 1; t1 <= t; ++t1) {
    unsigned t2 = t + 1 - t1;
    for (VertexSet p : a1[t1].supports())
      for (VertexSet q : a2[t2].supports()) out.insert(p | (q << shift));
  }
  return out;
}

SuiteResult disjoint_ass(const SuiteOptions& o) {
  std::vector<Instance> items;
  auto add_pair = [&](const Clutter& c1, const Clutter& c2, unsigned T) {
    items.push_back({describe(c1) + " + " + describe(c2) + " t<=" + std::to_string(T), [c1, c2, T]() -> std::string {
                       std::vector<PrimeSet> a1(T + 1), a2(T + 1);
                       auto I1 = edge_ideal(c1), I2 = edge_ideal(c2);
                       for (unsigned t = 1; t <= T; ++t) {
                         a1[t] = ass_powers(I1, t);
                         a2[t] = ass_powers(I2, t);
                       }
                       auto I = edge_ideal(disjoint_union(c1, c2));
                       for (unsigned t = 1; t <= T; ++t) {
                         auto lhs = ass_powers(I, t);
                         auto rhs = compose(a1, a2, c1.num_vertices(), t);
                         if (!(lhs == rhs)) return "t=" + std::to_string(t) + ": Ass = " + to_string(lhs) + ", composed = " + to_string(rhs);
                       }
                       return "";
                     }});
  };
  add_pair(cycle_graph(3), cycle_graph(3), tmax_or(o, 4));
  const int cap = std::min(o.n, 6);
  for (int a = 2; a <= cap; ++a)
    for (int b = a; a + b <= cap; ++b)
      for (const auto& g1 : graphs(a))
        for (const auto& g2 : graphs(b))
          if (is_connected(g1) && is_connected(g2) && (a != b || !(g2.edges() < g1.edges()))) add_pair(g1, g2, 3);
  return run("disjoint-ass", "two triangles t<=4, pairs of connected graphs with total n<=" + std::to_string(cap) + " t<=3", items);
}

SuiteResult lehman(const SuiteOptions& o) {
  std::string family;
  const unsigned T = tmax_or(o, 3);
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family)) {
    items.push_back({describe(c), [c, T]() -> std::string {
                       if (!konig_and_packing(c).packing) return "";
                       if (!is_konig(c)) return "packing without Konig";
                       auto ir = integrality_report(c);
                       if (!ir.q_integral) return "packing but Q(A) has fractional vertex " + to_string(*ir.fractional_witness);
                       if (!ntf_window(edge_ideal(c), T)) return "packing but I^t != I^(t) for some t<=" + std::to_string(T);
                       return "";
                     }});
  }
  return run("lehman", family + " (packing ones asserted)", items);
}

SuiteResult konig_lp(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family)) {
    items.push_back({describe(c), [c]() -> std::string {
                       IncidenceMatrix a(c);
                       auto fc = fractional_cover(a);
                       auto iv = cover_invariants(c);
                       if (fc.matching_lp_value != fc.cover_lp_value)
                         return "LP duality: " + fc.matching_lp_value.get_str() + " vs " + fc.cover_lp_value.get_str();
                       if (fc.matching_lp_value < iv.beta1) return "matching LP below beta1";
                       if (fc.cover_lp_value > iv.alpha0) return "cover LP above alpha0";
                       if ((iv.alpha0 == iv.beta1) != (fc.cover_lp_value == iv.alpha0 && fc.matching_lp_value == iv.beta1))
                         return "Konig does not match LP equalities";
                       std::vector<VertexSet> zero_one;
                       for (const auto& v : vertices_Q(a))
                         if (is_integral(v)) {
                           VertexSet s = 0;
                           for (std::size_t i = 0; i < v.size(); ++i)
                             if (v[i] == 1) s |= bit(static_cast<int>(i));
                             else if (v[i] != 0) return "integral vertex with entry other than 0/1";
                           zero_one.push_back(s);
                         }
                       std::sort(zero_one.begin(), zero_one.end());
                       auto covers = blocker(c).edges();
                       std::sort(covers.begin(), covers.end());
                       if (zero_one != covers) return "0/1 vertices of Q(A) are not the minimal covers";
                       return "";
                     }});
  }
  return run("konig-lp", family, items);
}

SuiteResult tu_ntf(const SuiteOptions& o) {
  std::string family;
  const unsigned T = tmax_or(o, 3);
  std::vector<Instance> items;
  for (const auto& c : clutter_family(o, family)) {
    items.push_back({describe(c), [c, T]() -> std::string {
                       IncidenceMatrix a(c);
                       bool tu = is_totally_unimodular(a).unimodular;
                       bool diadic = is_diadic(c);
                       if (!tu && !diadic) return "";
                       auto ir = integrality_report(c);
                       if (tu) {
                         if (!ir.q_integral || !ir.p_integral) return "TU but a polyhedron is not integral";
                         if (!ntf_window(edge_ideal(c), T)) return "TU but I is not normally torsion-free up to t=" + std::to_string(T);
                         if (!ntf_window(edge_ideal(blocker(c)), T)) return "TU but I_c is not normally torsion-free up to t=" + std::to_string(T);
                       }
                       if (diadic && ir.q_integral && !ntf_window(edge_ideal(c), T)) return "diadic with Q(A) integral but not normally torsion-free";
                       return "";
                     }});
  }
  return run("tu-ntf", family + ", t<=" + std::to_string(T), items);
}

SuiteResult bipartite_ntf(const SuiteOptions& o) {
  std::string family;
  const unsigned T = tmax_or(o, 4);
  std::vector<Instance> items;
  auto pred = [](const Clutter& g) { return g.num_edges() > 0 && is_bipartite(g); };
  for (const auto& g : graph_family(o, family, pred, "bipartite graphs with an edge")) {
    items.push_back({describe(g), [g, T]() -> std::string {
                       auto I = edge_ideal(g);
                       auto mins = minimal_primes(I);
                       for (unsigned t = 1; t <= T; ++t) {
                         if (t > 1 && !(power(I, t) == symbolic_power(I, t))) return "I^t != I^(t) at t=" + std::to_string(t);
                         if (!(ass_powers(I, t) == mins)) return "embedded prime at t=" + std::to_string(t);
                       }
                       return "";
                     }});
  }
  return run("bipartite-ntf", family + ", t<=" + std::to_string(T), items);
}

SuiteResult multiplicity_bound(const SuiteOptions& o) {
  std::vector<Clutter> family;
  std::string desc = "all uniform clutters n<=" + std::to_string(std::min(o.n, 6));
  for (int m = 1; m <= std::min(o.n, 6); ++m)
    for (const auto& c : clutters(m))
      if (c.num_edges() && c.uniform_degree()) family.push_back(c);
  for (int m = 7; m <= o.n; ++m) {
    std::string ex, sa;
    for (int d = 1; d <= m; ++d) {
      if (uniform_exhaustive(m, d)) {
        for (auto& c : uniform_clutters(m, d)) family.push_back(std::move(c));
        ex += (ex.empty() ? "" : ",") + std::to_string(d);
      } else {
        for (auto& c : random_uniform_clutters(m, d, o.sample, o.seed + static_cast<std::uint64_t>(10 * m + d))) family.push_back(std::move(c));
        sa += (sa.empty() ? "" : ",") + std::to_string(d);
      }
    }
    desc += "; n=" + std::to_string(m) + ": all d in {" + ex + "}, " + std::to_string(o.sample) + " random for d in {" + sa + "}";
  }
  std::vector<Instance> items;
  for (const auto& c : family) {
    items.push_back({describe(c), [c]() -> std::string {
                       int d = *c.uniform_degree();
                       auto h = hilbert_data(c);
                       int alpha0 = covering_number(c);
                       long long bound = 1;
                       for (int i = 0; i < alpha0; ++i) bound *= d;
                       if (h.multiplicity > bound) return fmt("e(R/I) > d^alpha0", h.multiplicity, bound);
                       // multiplicity counts the independent sets of maximum size
                       long long count = 0;
                       int best = -1;
                       for (VertexSet s = 0; s < bit(c.num_vertices()); ++s) {
                         bool indep = std::none_of(c.edges().begin(), c.edges().end(), [&](VertexSet e) { return is_subset(e, s); });
                         if (!indep) continue;
                         int k = popcount(s);
                         if (k > best) best = k, count = 0;
                         if (k == best) ++count;
                       }
                       if (count != h.multiplicity) return fmt("multiplicity != number of maximum independent sets", h.multiplicity, count);
                       if (best != h.dim) return fmt("dim != beta0", h.dim, best);
                       return "";
                     }});
  }
  return run("multiplicity-bound", desc, items);
}

SuiteResult b_graph(const SuiteOptions& o) {
  std::string family;
  std::vector<Instance> items;
  for (const auto& g : graph_family(o, family, has_edge, "graphs with an edge")) {
    items.push_back({describe(g), [g]() -> std::string {
                       if (!is_b_graph(g)) return "";
                       auto iv = cover_invariants(g);
                       if (iv.beta0 > iv.alpha0) return fmt("B-graph with beta0 > alpha0", iv.beta0, iv.alpha0);
                       return "";
                     }});
  }
  return run("b-graph", family, items);
}

const std::map<std::string, SuiteResult (*)(const SuiteOptions&)>& registry() {
  static const std::map<std::string, SuiteResult (*)(const SuiteOptions&)> r{
      {"terai", terai},
      {"additivity", additivity},
      {"reg-sandwich", reg_sandwich},
      {"chordal-reg", chordal_reg},
      {"froberg", froberg},
      {"duval-skeleton", duval_skeleton},
      {"scm-pd", scm_pd},
      {"leaf-chain", leaf_chain},
      {"cycle-ass", cycle_ass},
      {"disjoint-ass", disjoint_ass},
      {"lehman", lehman},
      {"konig-lp", konig_lp},
      {"tu-ntf", tu_ntf},
      {"bipartite-ntf", bipartite_ntf},
      {"multiplicity-bound", multiplicity_bound},
      {"b-graph", b_graph},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"terai", "additivity", "reg-sandwich", "chordal-reg", "froberg", "duval-skeleton",
                                              "scm-pd", "leaf-chain", "cycle-ass", "disjoint-ass", "lehman", "konig-lp",
                                              "tu-ntf", "bipartite-ntf", "multiplicity-bound", "b-graph"};
  return names;
}

SuiteResult verify_suite(const std::string& id, const SuiteOptions& options) {
  auto it = registry().find(id);
  if (it == registry().end()) fail(Errc::UnknownSuite, "unknown suite '" + id + "'");
  if (options.n < 1) fail(Errc::RangeError, "suite size bound must be positive");
  if (options.fields.empty()) fail(Errc::InvalidArgument, "at least one field is needed");
  return it->second(options);
}

}  // namespace edgeideal
