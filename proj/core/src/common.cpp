#include "edgeideal/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

std::vector<int> to_indices(VertexSet s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

VertexSet from_indices(const std::vector<int>& idx) {
  VertexSet s = 0;
  for (int i : idx) s |= bit(i);
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  int j = lowest(a ^ b);
  // The list holding j is smaller unless the other list stops before j.
  if (a & bit(j)) return (b >> j) != 0;
  return (a >> j) == 0;
}

void sort_lex(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), lex_less); }

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnitGenerator: return "UnitGenerator";
    case Errc::SquareFreeRequired: return "SquareFreeRequired";
    case Errc::ResourceExceeded: return "ResourceExceeded";
    case Errc::SpernerViolation: return "SpernerViolation";
    case Errc::EmptyEdge: return "EmptyEdge";
    case Errc::GraphRequired: return "GraphRequired";
    case Errc::RangeError: return "RangeError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ParseError::ParseError(int line, int column, const std::string& what)
    : Error(Errc::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      message_(what) {}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet k : kept) {
      if (is_subset(k, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  sort_lex(kept);
  return kept;
}

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  for (auto& s : sets) s = ~s;
  auto out = minimal_sets(std::move(sets));
  for (auto& s : out) s = ~s;
  sort_lex(out);
  return out;
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> cur{0};
  // Small edges first keeps the intermediate families small.
  std::vector<VertexSet> order = sets;
  std::sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });
  for (VertexSet e : order) {
    if (e == 0) return {};
    std::vector<VertexSet> next;
    next.reserve(cur.size() * 2);
    for (VertexSet t : cur) {
      if (t & e) {
        next.push_back(t);
      } else {
        for_each_bit(e, [&](int v) { next.push_back(t | bit(v)); });
      }
    }
    cur = minimal_sets(std::move(next));
    if (cur.size() > limits().components) fail(Errc::ResourceExceeded, "too many minimal transversals");
  }
  sort_lex(cur);
  return cur;
}

// ---------------------------------------------------------------------------

void Limits::apply(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Errc::InvalidArgument, "bad limit entry '" + item + "'");
    std::string key = item.substr(0, eq);
    unsigned long long v = 0;
    try {
      v = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(Errc::InvalidArgument, "bad limit value in '" + item + "'");
    }
    if (key == "power_generators") power_generators = v;
    else if (key == "box_cells") box_cells = v;
    else if (key == "components") components = v;
    else if (key == "linear_quotient_generators") linear_quotient_generators = static_cast<int>(v);
    else if (key == "cover_n") cover_n = static_cast<int>(v);
    else if (key == "structure_n") structure_n = static_cast<int>(v);
    else if (key == "perfect_n") perfect_n = static_cast<int>(v);
    else if (key == "packing_n") packing_n = static_cast<int>(v);
    else if (key == "homology_faces") homology_faces = v;
    else if (key == "betti_n") betti_n = static_cast<int>(v);
    else if (key == "shellable_facets") shellable_facets = static_cast<int>(v);
    else if (key == "ass_star_n") ass_star_n = static_cast<int>(v);
    else if (key == "polyhedra_n") polyhedra_n = static_cast<int>(v);
    else if (key == "tu_min_dim") tu_min_dim = static_cast<int>(v);
    else fail(Errc::InvalidArgument, "unknown limit '" + key + "'");
  }
}

Limits& limits() {
  static Limits l = [] {
    Limits x;
    if (const char* env = std::getenv("EDGEIDEAL_LIMITS")) x.apply(env);
    return x;
  }();
  return l;
}

}  // namespace edgeideal
