// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "edgeideal/ass.hpp"
#include "edgeideal/betti.hpp"
#include "edgeideal/clutter.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/families.hpp"
#include "edgeideal/polyhedra.hpp"
#include "edgeideal/ring_properties.hpp"
#include "edgeideal/suites.hpp"

using namespace edgeideal;

namespace {

constexpr std::size_t kSample = 2000;
constexpr std::uint64_t kSeed = 20240601;

const auto QQ = CoefficientField::rationals();
const auto F2 = CoefficientField::prime(2);
const auto F3 = CoefficientField::prime(3);

// Collects failed checks; the first few are printed.
struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void suite(const std::string& id, SuiteOptions o) {
    o.seed = kSeed;
    auto r = verify_suite(id, o);
    std::ostringstream s;
    s << id << " n<=" << o.n << ": " << r.instances << " instances";
    notes.push_back(s.str());
    if (!r.passed()) failures.push_back(r.to_text(5));
  }
};

SuiteOptions opts(int n, unsigned t_max = 0, std::vector<CoefficientField> fields = {QQ}) {
  SuiteOptions o;
  o.n = n;
  o.t_max = t_max;
  o.sample = kSample;
  o.fields = std::move(fields);
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void characteristic_dependence(Checker& c) {
  auto I = edge_ideal(parse_clutter(testing::data_file("gversusg.clutter")));
  c.expect(I.nvars() == 11 && I.size() == 25, "expected 25 generators in 11 variables");
  auto t0 = std::chrono::steady_clock::now();
  int r2 = betti_table(I, F2).regularity();
  int r3 = betti_table(I, F3).regularity();
  double secs = seconds_since(t0);
  c.expect(r2 == 3, "reg over F2 is " + std::to_string(r2));
  c.expect(r3 == 2, "reg over F3 is " + std::to_string(r3));
  c.expect(secs <= 60.0, "took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "reg F2=" << r2 << ", F3=" << r3 << ", " << static_cast<int>(secs * 1000) << " ms";
  c.notes.push_back(s.str());
}

void cycle_pattern(Checker& c) {
  for (int k = 1; k <= 3; ++k) {
    int n = 2 * k + 1;
    auto g = cycle_graph(n);
    auto I = edge_ideal(g);
    auto min = minimal_primes(I);
    auto with_m = min;
    with_m.insert(full_set(n));
    for (unsigned t = 1; t <= static_cast<unsigned>(k) + 2; ++t) {
      auto ass = ass_powers(I, t);
      std::string at = "C" + std::to_string(n) + " t=" + std::to_string(t);
      if (t <= static_cast<unsigned>(k)) {
        c.expect(ass == min, at + ": Ass != Min");
        continue;
      }
      c.expect(ass == with_m, at + ": Ass != Min + m");
      auto w = cycle_witness(g, t);
      c.expect(w.degree() == 2 * t - 1, at + ": witness degree " + std::to_string(w.degree()));
      c.expect(colon(power(I, t), w) == testing::maximal_ideal(static_cast<std::size_t>(n)), at + ": (I^t : c) != m");
    }
  }
  c.notes.push_back("C3, C5, C7 up to t = k + 2");
}

void notchain(Checker& c) {
  auto I = parse_ideal(testing::data_file("notchain.ideal"));
  std::string in;
  for (unsigned t = 1; t <= 4; ++t) {
    bool m = ass_powers(I, t).contains(full_set(5));
    c.expect(m == (t == 1 || t == 4), "m in Ass at t=" + std::to_string(t) + " is " + (m ? "true" : "false"));
    if (m) in += (in.empty() ? "" : ",") + std::to_string(t);
  }
  c.expect(!stability_scan(I, 4).chain_ok, "chain_ok is true");
  c.notes.push_back("m in Ass for t in {" + in + "}, chain_ok=false");
}

void q6(Checker& c) {
  auto cl = parse_clutter(testing::data_file("q6.clutter"));
  auto inv = cover_invariants(cl);
  c.expect(inv.alpha0 == 2 && inv.beta1 == 1, "alpha0/beta1 differ from 2/1");
  c.expect(!konig_and_packing(cl).packing, "Q6 packs");
  c.expect(integrality_report(cl).q_integral, "Q(A) not integral");
  auto ntf = ntf_check(edge_ideal(cl), 3);
  c.expect(ntf.verdict == Ntf::No && ntf.witness_t && *ntf.witness_t <= 3, std::string("ntf verdict ") + ntf_name(ntf.verdict));
  if (ntf.witness_t) c.notes.push_back("ntf no, witness t=" + std::to_string(*ntf.witness_t));
}

void c6_examples(Checker& c) {
  auto comp = parse_clutter(testing::data_file("c6_complement.clutter"));
  int reg = homological_invariants(edge_ideal(comp), QQ).reg;
  int im = cover_invariants(comp).im;
  c.expect(reg == 2 && im == 1, "C6 complement reg/im = " + std::to_string(reg) + "/" + std::to_string(im));
  auto c6 = cycle_graph(6);
  int pd = homological_invariants(edge_ideal(c6), QQ).pd;
  c.expect(pd == 4 && cover_invariants(c6).alpha0_prime == 4, "C6 pd " + std::to_string(pd));
  c.expect(!ring_properties(c6, QQ).scm, "C6 is scm");
  c.expect(ring_properties(cycle_graph(3), QQ).scm, "C3 not scm");
  c.expect(ring_properties(cycle_graph(5), QQ).scm, "C5 not scm");
  c.expect(!ring_properties(cycle_graph(7), QQ).scm, "C7 is scm");
}

void properties(Checker& c) {
  std::size_t duals = 0, betti = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& cl : clutters(n)) {
      if (!cl.num_edges()) continue;
      auto I = edge_ideal(cl);
      auto D = alexander_dual(I);
      c.expect(alexander_dual(D) == I, "dual involution fails on " + describe(cl));
      c.expect(edge_ideal(blocker(cl)) == D, "blocker/dual square fails on " + describe(cl));
      ++duals;
      if (n <= 5 && I.size() <= 5) {
        for (auto f : {QQ, F2}) {
          auto t = betti_table(I, f);
          auto e = t.entries;
          e[{0, 0}] = 1;
          c.expect(e == oracle::taylor_betti(I, f.characteristic), "Hochster != Taylor on " + describe(cl));
        }
        ++betti;
      }
    }
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < 100; ++k) {
    auto I = testing::random_squarefree(rng, 6, 2 + k % 4);
    for (auto f : {QQ, F2, F3}) {
      auto e = betti_table(I, f).entries;
      e[{0, 0}] = 1;
      c.expect(e == oracle::taylor_betti(I, f.characteristic), "Hochster != Taylor on a random ideal");
    }
    ++betti;
  }
  // spheres and points
  for (int n = 2; n <= 8; ++n) {
    std::vector<VertexSet> facets, points;
    for (int v = 0; v < n; ++v) facets.push_back(full_set(n) & ~bit(v)), points.push_back(bit(v));
    for (auto f : {QQ, F2, F3}) {
      std::vector<std::size_t> sphere(static_cast<std::size_t>(n), 0);
      sphere.back() = 1;
      c.expect(reduced_homology(SimplicialComplex::from_faces(n, facets), f) == sphere, "sphere homology n=" + std::to_string(n));
      c.expect(reduced_homology(SimplicialComplex::from_faces(n, points), f) == std::vector<std::size_t>{0, static_cast<std::size_t>(n - 1)},
               "points homology n=" + std::to_string(n));
    }
  }
  c.notes.push_back(std::to_string(duals) + " duals, " + std::to_string(betti) + " Betti comparisons");
  c.suite("konig-lp", opts(7));
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "regularity depends on the characteristic", characteristic_dependence},
      {2, "associated primes of odd cycle powers", cycle_pattern},
      {3, "non-ascending Ass chain", notchain},
      {4, "graphs with a leaf have ascending Ass chains",
       [](Checker& c) { c.suite("leaf-chain", opts(7, 4)); }},
      {5, "bipartite graphs are normally torsion-free",
       [](Checker& c) { c.suite("bipartite-ntf", opts(7, 4)); }},
      {6, "Q6 does not pack, Q(A) integral, not torsion-free", q6},
      {7, "Terai's formula and the height one corollary", [](Checker& c) { c.suite("terai", opts(7)); }},
      {8, "regularity of chordal graphs and the im/beta' sandwich",
       [](Checker& c) {
         c.suite("chordal-reg", opts(8));
         c.suite("reg-sandwich", opts(7));
       }},
      {9, "C6 complement, C6 and sequentially CM cycles", c6_examples},
      {10, "skeleton depth formula over QQ and F2",
       [](Checker& c) { c.suite("duval-skeleton", opts(6, 0, {QQ, F2})); }},
      {11, "sCM regularity and projective dimension bounds", [](Checker& c) { c.suite("scm-pd", opts(7)); }},
      {12, "packing clutters: integral Q(A), no symbolic witness", [](Checker& c) { c.suite("lehman", opts(7, 3)); }},
      {13, "multiplicity bound for uniform clutters", [](Checker& c) { c.suite("multiplicity-bound", opts(8)); }},
      {14, "duality, Betti, homology and LP properties", properties},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    bool ok = c.failures.empty();
    failed += !ok;
    std::string notes;
    for (const auto& n : c.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::printf("%s %2d %s [%s] (%.1f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), notes.c_str(), secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf("     %s\n", c.failures[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
