#include "edgeideal/betti.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "edgeideal/limits.hpp"
#include "edgeideal/parallel.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

unsigned worker_count() {
  static unsigned w = [] {
    if (const char* env = std::getenv("EDGEIDEAL_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }();
  return w;
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [k, v] : entries) r = std::max(r, k.second - k.first);
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [k, v] : entries) p = std::max(p, k.first);
  return p;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : entries)
    if (k.first == i) s += v;
  return s;
}

std::string BettiTable::to_text() const {
  int pd = projective_dimension(), reg = regularity();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, tot{"total:"};
  for (int i = 0; i <= pd; ++i) {
    head.push_back(std::to_string(i));
    tot.push_back(std::to_string(total(i)));
  }
  cells.push_back(head);
  cells.push_back(tot);
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      auto v = at(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      std::string pad(width[c] - cell.size(), ' ');
      line += (c == 0 ? pad + cell : " " + pad + cell);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

BettiTable betti_table(const MonomialIdeal& I, CoefficientField f) {
  if (!I.is_squarefree()) fail(Errc::SquareFreeRequired, "Hochster's formula needs a square-free ideal");
  const int n = static_cast<int>(I.nvars());
  if (n > limits().betti_n) fail(Errc::ResourceExceeded, "Betti tables limited to betti_n variables");
  BettiTable t;
  t.field = f;
  t.nvars = n;
  if (I.is_zero()) {
    t.entries[{0, 0}] = 1;
    return t;
  }
  const std::size_t cells = std::size_t{1} << n;
  // face[m]: m contains no generator support.
  std::vector<std::uint8_t> face(cells, 1);
  for (VertexSet g : I.support_masks()) face[g] = 0;
  for (std::size_t m = 1; m < cells; ++m) {
    if (!face[m]) continue;
    for (VertexSet r = m; r; r &= r - 1)
      if (!face[m & ~(r & (~r + 1))]) {
        face[m] = 0;
        break;
      }
  }

  std::vector<std::map<std::pair<int, int>, std::uint64_t>> partial(worker_count());
  parallel_chunks(cells, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& out = partial[w];
    std::vector<std::vector<VertexSet>> levels;
    for (std::size_t s = begin; s < end; ++s) {
      VertexSet sigma = s;
      int size = popcount(sigma);
      levels.assign(static_cast<std::size_t>(size) + 1, {});
      VertexSet sub = 0;
      while (true) {
        if (face[sub]) levels[static_cast<std::size_t>(popcount(sub))].push_back(sub);
        if (sub == sigma) break;
        sub = (sub - sigma) & sigma;
      }
      while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
      auto h = reduced_homology_of_levels(levels, f);
      for (std::size_t k = 0; k < h.size(); ++k) {
        if (!h[k]) continue;
        int j = static_cast<int>(k) - 1;  // homological index of H̃_j
        int i = size - j - 1;
        out[{i, size}] += h[k];
      }
    }
  });
  for (const auto& p : partial)
    for (const auto& [k, v] : p) t.entries[k] += v;
  return t;
}

HomologicalInvariants homological_invariants(const BettiTable& t, const MonomialIdeal& I) {
  HomologicalInvariants h;
  h.reg = t.regularity();
  h.pd = t.projective_dimension();
  h.depth = static_cast<int>(I.nvars()) - h.pd;
  if (I.is_zero()) {
    h.dim = static_cast<int>(I.nvars());
  } else {
    int height = 64;
    auto min = minimal_primes(I);
    for (VertexSet p : min.supports()) height = std::min(height, popcount(p));
    h.dim = static_cast<int>(I.nvars()) - height;
  }
  return h;
}

HomologicalInvariants homological_invariants(const MonomialIdeal& I, CoefficientField f) {
  return homological_invariants(betti_table(I, f), I);
}

HilbertData hilbert_data(const SimplicialComplex& d) {
  if (d.is_void()) fail(Errc::InvalidArgument, "the void complex has no Stanley-Reisner ring");
  HilbertData h;
  auto f = d.f_vector();  // f[i] = f_{i-1}
  const int dim = static_cast<int>(f.size()) - 1;
  h.dim = dim;
  h.h.assign(static_cast<std::size_t>(dim) + 1, 0);
  // h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}.
  for (int i = 0; i <= dim; ++i) {
    long long binom = 1;
    for (int k = 0; k <= dim - i; ++k) {
      long long term = static_cast<long long>(f[static_cast<std::size_t>(i)]) * binom * (k % 2 ? -1 : 1);
      h.h[static_cast<std::size_t>(i + k)] += term;
      binom = binom * (dim - i - k) / (k + 1);
    }
  }
  while (h.h.size() > 1 && h.h.back() == 0) h.h.pop_back();
  h.multiplicity = static_cast<long long>(f.back());
  h.a_invariant = static_cast<int>(h.h.size()) - 1 - dim;
  h.arith_deg = d.facets().size();
  return h;
}

HilbertData hilbert_data(const Clutter& c) { return hilbert_data(independence_complex(c)); }

}  // namespace edgeideal
