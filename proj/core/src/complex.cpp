#include "edgeideal/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

SimplicialComplex SimplicialComplex::void_complex(int n) {
  SimplicialComplex d;
  d.n_ = n;
  return d;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  SimplicialComplex d;
  d.n_ = n;
  d.facets_ = {0};
  return d;
}

SimplicialComplex SimplicialComplex::simplex(int n, VertexSet s) {
  SimplicialComplex d;
  d.n_ = n;
  d.facets_ = {s};
  return d;
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<VertexSet> faces) {
  if (n < 0 || n > kMaxVertices) fail(Errc::RangeError, "vertex count must be in 0..64");
  for (VertexSet f : faces)
    if (!is_subset(f, full_set(n))) fail(Errc::RangeError, "face outside the ground set");
  SimplicialComplex d;
  d.n_ = n;
  d.facets_ = maximal_sets(std::move(faces));
  return d;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int m = 0;
  for (VertexSet f : facets_) m = std::max(m, popcount(f));
  return m - 1;
}

bool SimplicialComplex::is_pure() const {
  for (VertexSet f : facets_)
    if (popcount(f) != popcount(facets_.front())) return false;
  return true;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return is_subset(face, f); });
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::levels() const {
  if (facets_.empty()) return {};
  std::unordered_set<VertexSet> seen;
  std::size_t budget = limits().homology_faces;
  for (VertexSet f : facets_) {
    // Every subset of f, including f and ∅.
    VertexSet sub = f;
    while (true) {
      seen.insert(sub);
      if (seen.size() > budget) fail(Errc::ResourceExceeded, "face count exceeds homology_faces");
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::vector<VertexSet>> lv(static_cast<std::size_t>(dimension() + 2));
  for (VertexSet s : seen) lv[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& l : lv) std::sort(l.begin(), l.end());
  return lv;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t k = 0;
  for (const auto& l : levels()) k += l.size();
  return k;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& l : levels()) f.push_back(l.size());
  return f;
}

SimplicialComplex independence_complex(const Clutter& c) {
  const int n = c.num_vertices();
  if (c.edges().empty()) return SimplicialComplex::simplex(n, full_set(n));
  std::vector<VertexSet> faces;
  for (VertexSet t : minimal_transversals(c.edges())) faces.push_back(full_set(n) & ~t);
  return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& d, int i) {
  if (i < -1 || i > d.dimension()) fail(Errc::RangeError, "skeleton index out of range");
  std::vector<VertexSet> faces;
  for (VertexSet f : d.facets()) {
    if (popcount(f) <= i + 1) {
      faces.push_back(f);
      continue;
    }
    // All (i+1)-subsets of f.
    std::vector<int> v = to_indices(f);
    const int k = i + 1;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) idx[static_cast<std::size_t>(a)] = a;
    const int m = static_cast<int>(v.size());
    while (true) {
      VertexSet s = 0;
      for (int a : idx) s |= bit(v[static_cast<std::size_t>(a)]);
      faces.push_back(s);
      int a = k - 1;
      while (a >= 0 && idx[static_cast<std::size_t>(a)] == m - k + a) --a;
      if (a < 0) break;
      ++idx[static_cast<std::size_t>(a)];
      for (int b = a + 1; b < k; ++b) idx[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(b - 1)] + 1;
    }
  }
  return SimplicialComplex::from_faces(d.num_vertices(), std::move(faces));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i) {
  if (i < -1 || i > d.dimension()) fail(Errc::RangeError, "skeleton index out of range");
  if (i == -1) return SimplicialComplex::empty_complex(d.num_vertices());
  auto sk = skeleton(d, i);
  std::vector<VertexSet> faces;
  for (VertexSet f : sk.facets())
    if (popcount(f) == i + 1) faces.push_back(f);
  return SimplicialComplex::from_faces(d.num_vertices(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet face) {
  std::vector<VertexSet> faces;
  for (VertexSet f : d.facets())
    if (is_subset(face, f)) faces.push_back(f & ~face);
  if (faces.empty()) return SimplicialComplex::void_complex(d.num_vertices());
  return SimplicialComplex::from_faces(d.num_vertices(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& d, int v) {
  std::vector<VertexSet> faces;
  for (VertexSet f : d.facets()) faces.push_back(f & ~bit(v));
  return SimplicialComplex::from_faces(d.num_vertices(), std::move(faces));
}

CoefficientField CoefficientField::prime(unsigned p) {
  if (p < 2) fail(Errc::InvalidArgument, "characteristic must be 0 or a prime");
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) fail(Errc::InvalidArgument, "characteristic too large");
  return {p};
}

std::string CoefficientField::name() const {
  return characteristic == 0 ? std::string("QQ") : "ZZ/" + std::to_string(characteristic);
}

}  // namespace edgeideal
