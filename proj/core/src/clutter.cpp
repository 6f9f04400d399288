#include "edgeideal/clutter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "edgeideal/limits.hpp"
#include "edgeideal/setfamily.hpp"

namespace edgeideal {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxVertices) fail(Errc::RangeError, "vertex count must be in 0..64");
}

// Packs the bits of s selected by keep into consecutive low bits.
VertexSet compress(VertexSet s, VertexSet keep) {
  VertexSet out = 0;
  int k = 0;
  for_each_bit(keep, [&](int i) {
    if (s & bit(i)) out |= bit(k);
    ++k;
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Clutter::Clutter(int n) : n_(n) { check_n(n); }

Clutter Clutter::build(int n, std::vector<VertexSet> edges, std::vector<std::string> labels) {
  check_n(n);
  for (VertexSet e : edges) {
    if (e == 0) fail(Errc::EmptyEdge, "empty edge");
    if (!is_subset(e, full_set(n))) fail(Errc::RangeError, "edge uses a vertex outside the ground set");
  }
  sort_lex(edges);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && is_subset(edges[i], edges[j]))
        fail(Errc::SpernerViolation, "edge " + std::to_string(i) + " is contained in another edge");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    fail(Errc::InvalidArgument, "label count differs from vertex count");
  Clutter c(n);
  c.edges_ = std::move(edges);
  c.labels_ = std::move(labels);
  return c;
}

Clutter Clutter::minimalize_edges(int n, std::vector<VertexSet> edges, std::vector<std::string> labels) {
  for (VertexSet e : edges)
    if (e == 0) fail(Errc::EmptyEdge, "empty edge");
  return build(n, minimal_sets(std::move(edges)), std::move(labels));
}

std::string Clutter::label(int v) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(v)];
  return std::to_string(v + 1);
}

bool Clutter::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return popcount(e) == 2; });
}

std::optional<int> Clutter::uniform_degree() const {
  if (edges_.empty()) return std::nullopt;
  int d = popcount(edges_.front());
  for (VertexSet e : edges_)
    if (popcount(e) != d) return std::nullopt;
  return d;
}

int Clutter::max_edge_size() const {
  int d = 0;
  for (VertexSet e : edges_) d = std::max(d, popcount(e));
  return d;
}

VertexSet Clutter::neighbors(int v) const {
  VertexSet s = 0;
  for (VertexSet e : edges_)
    if (e & bit(v)) s |= e;
  return s & ~bit(v);
}

VertexSet Clutter::isolated_vertices() const {
  VertexSet used = 0;
  for (VertexSet e : edges_) used |= e;
  return full_set(n_) & ~used;
}

Clutter graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSet> e;
  for (auto [a, b] : edges) {
    if (a == b) fail(Errc::InvalidArgument, "graphs have no loops");
    e.push_back(bit(a) | bit(b));
  }
  return Clutter::build(n, std::move(e));
}

Clutter cycle_graph(int n) {
  if (n < 3) fail(Errc::RangeError, "cycles need at least three vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, e);
}

Clutter complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graph_from_edges(n, e);
}

Clutter path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(n, e);
}

Clutter complement_graph(const Clutter& g) {
  if (!g.is_graph()) fail(Errc::GraphRequired, "complement needs a graph");
  std::set<VertexSet> have(g.edges().begin(), g.edges().end());
  std::vector<VertexSet> e;
  int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!have.count(bit(i) | bit(j))) e.push_back(bit(i) | bit(j));
  return Clutter::build(n, std::move(e));
}

Clutter disjoint_union(const Clutter& a, const Clutter& b) {
  int n = a.num_vertices() + b.num_vertices();
  check_n(n);
  std::vector<VertexSet> e = a.edges();
  for (VertexSet f : b.edges()) e.push_back(f << a.num_vertices());
  return Clutter::build(n, std::move(e));
}

MonomialIdeal edge_ideal(const Clutter& c) {
  return squarefree_ideal(static_cast<std::size_t>(c.num_vertices()), c.edges());
}

Clutter clutter_of(const MonomialIdeal& I) {
  if (!I.is_squarefree()) fail(Errc::SquareFreeRequired, "clutters correspond to square-free ideals");
  return Clutter::build(static_cast<int>(I.nvars()), I.support_masks());
}

Clutter blocker(const Clutter& c) {
  if (c.edges().empty()) fail(Errc::InvalidArgument, "the blocker needs at least one edge");
  return Clutter::build(c.num_vertices(), minimal_transversals(c.edges()));
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

int min_hitting_set(const std::vector<VertexSet>& edges, VertexSet chosen, int depth, int best) {
  if (depth >= best) return best;
  // Branch on the smallest edge that is not yet hit.
  VertexSet pick = 0;
  int size = 65;
  for (VertexSet e : edges) {
    if (e & chosen) continue;
    int p = popcount(e);
    if (p < size) {
      size = p;
      pick = e;
    }
  }
  if (!pick) return depth;
  if (depth + 1 >= best) return best;
  for_each_bit(pick, [&](int v) { best = std::min(best, min_hitting_set(edges, chosen | bit(v), depth + 1, best)); });
  return best;
}

int max_packing(const std::vector<VertexSet>& edges, std::size_t from, VertexSet used, int cur, int best) {
  best = std::max(best, cur);
  if (cur + static_cast<int>(edges.size() - from) <= best) return best;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (edges[i] & used) continue;
    best = max_packing(edges, i + 1, used | edges[i], cur + 1, best);
  }
  return best;
}

}  // namespace

int covering_number(const Clutter& c) {
  if (c.edges().empty()) return 0;
  return min_hitting_set(c.edges(), 0, 0, c.num_vertices() + 1);
}

int matching_number(const Clutter& c) { return max_packing(c.edges(), 0, 0, 0, 0); }

int induced_matching_number(const Clutter& c) {
  const auto& E = c.edges();
  int best = 0;
  std::function<void(std::size_t, VertexSet, int)> go = [&](std::size_t from, VertexSet uni, int k) {
    best = std::max(best, k);
    for (std::size_t i = from; i < E.size(); ++i) {
      if (E[i] & uni) continue;
      VertexSet u2 = uni | E[i];
      // Every edge inside the new union must be one of the chosen ones; chosen
      // edges are pairwise disjoint, so such an edge is contained in uni or in E[i].
      bool ok = true;
      for (std::size_t j = 0; j < E.size() && ok; ++j) {
        if (j == i || !is_subset(E[j], u2)) continue;
        if (is_subset(E[j], uni)) continue;  // checked when uni was built
        ok = false;
      }
      if (ok) go(i + 1, u2, k + 1);
    }
  };
  go(0, 0, 0);
  return best;
}

int min_maximal_matching(const Clutter& g) {
  if (!g.is_graph()) fail(Errc::GraphRequired, "smallest maximal matching is defined for graphs");
  const int n = g.num_vertices();
  std::vector<VertexSet> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nb[static_cast<std::size_t>(v)] = g.neighbors(v);
  int best = n;
  // undecided: vertices not yet matched nor declared unmatched.
  std::function<void(VertexSet, VertexSet, int)> go = [&](VertexSet undecided, VertexSet unmatched, int k) {
    if (k >= best) return;
    if (!undecided) {
      for (int v = 0; v < n; ++v)
        if ((unmatched & bit(v)) && (nb[static_cast<std::size_t>(v)] & unmatched)) return;
      best = k;
      return;
    }
    int v = lowest(undecided);
    VertexSet rest = undecided & ~bit(v);
    for_each_bit(nb[static_cast<std::size_t>(v)] & rest, [&](int u) { go(rest & ~bit(u), unmatched, k + 1); });
    // Leaving v unmatched is only possible if no neighbour is already unmatched.
    if (!(nb[static_cast<std::size_t>(v)] & unmatched)) go(rest, unmatched | bit(v), k);
  };
  go(full_set(n), 0, 0);
  return best;
}

InvariantRecord cover_invariants(const Clutter& c) {
  if (c.num_vertices() > limits().cover_n) fail(Errc::ResourceExceeded, "cover invariants limited to cover_n vertices");
  InvariantRecord r;
  const int n = c.num_vertices();
  if (c.edges().empty()) {
    r.alpha0 = 0;
    r.alpha0_prime = 0;
  } else {
    auto covers = minimal_transversals(c.edges());
    r.alpha0 = n;
    r.alpha0_prime = 0;
    for (VertexSet t : covers) {
      r.alpha0 = std::min(r.alpha0, popcount(t));
      r.alpha0_prime = std::max(r.alpha0_prime, popcount(t));
    }
  }
  r.beta0 = n - r.alpha0;
  r.beta0_prime = n - r.alpha0_prime;
  r.beta1 = matching_number(c);
  r.im = induced_matching_number(c);
  if (c.is_graph()) r.beta_prime = min_maximal_matching(c);
  return r;
}

// ---------------------------------------------------------------------------
// Minors

Clutter minor(const Clutter& c, VertexSet del, VertexSet con) {
  VertexSet all = c.vertex_set();
  if (del & con) fail(Errc::InvalidArgument, "deleted and contracted sets overlap");
  if (!is_subset(del | con, all)) fail(Errc::RangeError, "minor sets outside the ground set");
  VertexSet keep = all & ~(del | con);
  std::vector<VertexSet> e;
  for (VertexSet f : c.edges()) {
    if (f & del) continue;
    VertexSet g = f & ~con;
    if (!g) fail(Errc::EmptyEdge, "contraction empties an edge");
    e.push_back(compress(g, keep));
  }
  std::vector<std::string> labels;
  if (!c.labels().empty())
    for_each_bit(keep, [&](int v) { labels.push_back(c.labels()[static_cast<std::size_t>(v)]); });
  return Clutter::minimalize_edges(popcount(keep), std::move(e), std::move(labels));
}

Clutter induced(const Clutter& c, VertexSet s) {
  if (!is_subset(s, c.vertex_set())) fail(Errc::RangeError, "induced set outside the ground set");
  std::vector<VertexSet> e;
  for (VertexSet f : c.edges())
    if (is_subset(f, s)) e.push_back(compress(f, s));
  std::vector<std::string> labels;
  if (!c.labels().empty())
    for_each_bit(s, [&](int v) { labels.push_back(c.labels()[static_cast<std::size_t>(v)]); });
  return Clutter::build(popcount(s), std::move(e), std::move(labels));
}

// ---------------------------------------------------------------------------
// Odd cycles

OddCycleData odd_cycle_data(const Clutter& g) {
  if (!g.is_graph()) fail(Errc::GraphRequired, "odd cycle data needs a graph");
  OddCycleData d;
  const int n = g.num_vertices();
  d.neighbor_map.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    d.neighbor_map[static_cast<std::size_t>(v)] = g.neighbors(v);
    if (popcount(d.neighbor_map[static_cast<std::size_t>(v)]) == 1) d.leaves.push_back(v);
  }
  // Shortest odd closed walk through BFS levels; its length is the odd girth.
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for_each_bit(d.neighbor_map[static_cast<std::size_t>(u)], [&](int w) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        } else if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)]) {
          int len = 2 * dist[static_cast<std::size_t>(u)] + 1;
          if (!d.smallest_odd_cycle_length || len < *d.smallest_odd_cycle_length) d.smallest_odd_cycle_length = len;
        }
      });
    }
  }
  for (auto& c : induced_cycles(g))
    if (c.size() % 2 == 1) d.induced_odd_cycles.push_back(std::move(c));
  return d;
}

std::vector<std::vector<int>> induced_cycles(const Clutter& g, int min_len) {
  if (!g.is_graph()) fail(Errc::GraphRequired, "induced cycles need a graph");
  const int n = g.num_vertices();
  std::vector<VertexSet> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nb[static_cast<std::size_t>(v)] = g.neighbors(v);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int, VertexSet)> dfs = [&](int s, VertexSet on_path) {
    int last = path.back();
    VertexSet inner = on_path & ~bit(last) & ~bit(s);
    for_each_bit(nb[static_cast<std::size_t>(last)] & ~on_path, [&](int v) {
      if (v < s) return;
      if (nb[static_cast<std::size_t>(v)] & inner) return;
      if ((nb[static_cast<std::size_t>(v)] & bit(s)) && path.size() >= 2) {
        if (path[1] < v && static_cast<int>(path.size()) + 1 >= min_len) {
          auto cyc = path;
          cyc.push_back(v);
          out.push_back(std::move(cyc));
        }
        return;
      }
      path.push_back(v);
      dfs(s, on_path | bit(v));
      path.pop_back();
    });
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(s, bit(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Path ideals

MonomialIdeal path_ideal(const Digraph& d, int t) {
  if (t < 2) fail(Errc::RangeError, "path ideals need t >= 2");
  check_n(d.n);
  std::vector<VertexSet> out(static_cast<std::size_t>(d.n), 0);
  for (auto [a, b] : d.arcs) {
    if (a < 0 || b < 0 || a >= d.n || b >= d.n) fail(Errc::RangeError, "arc endpoint out of range");
    if (a == b) fail(Errc::InvalidArgument, "loops are not allowed in path ideals");
    out[static_cast<std::size_t>(a)] |= bit(b);
  }
  std::vector<VertexSet> gens;
  std::function<void(int, VertexSet, int)> go = [&](int v, VertexSet used, int len) {
    if (len == t) {
      gens.push_back(used);
      return;
    }
    for_each_bit(out[static_cast<std::size_t>(v)] & ~used, [&](int w) { go(w, used | bit(w), len + 1); });
  };
  for (int v = 0; v < d.n; ++v) go(v, bit(v), 1);
  return squarefree_ideal(static_cast<std::size_t>(d.n), gens);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Line {
  int number;
  std::size_t offset;  // column offset of text[0] in the original line
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t b = 0;
    while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    std::size_t e = raw.size();
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    if (b < e) out.push_back({no, b, raw.substr(b, e - b)});
  }
  return out;
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokens(const Line& l) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < l.text.size()) {
    while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    if (i >= l.text.size()) break;
    std::size_t b = i;
    while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    out.push_back({l.text.substr(b, i - b), static_cast<int>(l.offset + b) + 1});
  }
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Header {
  int n = 0;
  std::vector<std::string> labels;
  std::size_t body = 0;  // index of the first body line
};

Header read_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "missing header 'vertices n'");
  auto t = tokens(lines[0]);
  if (t[0].text != "vertices") throw ParseError(lines[0].number, t[0].column, "expected header 'vertices n'");
  if (t.size() != 2 || !all_digits(t[1].text))
    throw ParseError(lines[0].number, t.size() > 1 ? t[1].column : t[0].column, "expected a vertex count");
  Header h;
  if (t[1].text.size() > 3 || std::stoi(t[1].text) > kMaxVertices)
    throw ParseError(lines[0].number, t[1].column, "at most 64 vertices are supported");
  h.n = std::stoi(t[1].text);
  h.body = 1;
  if (lines.size() > 1) {
    auto t2 = tokens(lines[1]);
    if (t2[0].text == "labels") {
      if (static_cast<int>(t2.size()) - 1 != h.n)
        throw ParseError(lines[1].number, t2[0].column, "label count differs from vertex count");
      for (std::size_t i = 1; i < t2.size(); ++i) h.labels.push_back(t2[i].text);
      h.body = 2;
    }
  }
  return h;
}

int resolve_vertex(const Token& tok, int line, Header& h, std::map<std::string, int>& label_index, bool& used_labels) {
  if (all_digits(tok.text) && h.labels.empty()) {
    if (tok.text.size() > 3) throw ParseError(line, tok.column, "vertex index out of range");
    int v = std::stoi(tok.text);
    if (v < 1 || v > h.n) throw ParseError(line, tok.column, "vertex index out of range");
    return v - 1;
  }
  auto it = label_index.find(tok.text);
  if (it != label_index.end()) return it->second;
  if (!h.labels.empty()) throw ParseError(line, tok.column, "unknown label '" + tok.text + "'");
  if (static_cast<int>(label_index.size()) >= h.n) throw ParseError(line, tok.column, "more labels than vertices");
  used_labels = true;
  int v = static_cast<int>(label_index.size());
  label_index.emplace(tok.text, v);
  return v;
}

}  // namespace

Clutter parse_clutter(const std::string& text) {
  auto lines = content_lines(text);
  Header h = read_header(lines);
  std::map<std::string, int> label_index;
  for (std::size_t i = 0; i < h.labels.size(); ++i) label_index[h.labels[i]] = static_cast<int>(i);
  bool used_labels = false;
  std::vector<VertexSet> edges;
  for (std::size_t k = h.body; k < lines.size(); ++k) {
    VertexSet e = 0;
    for (const auto& tok : tokens(lines[k])) {
      if (tok.text == "->") throw ParseError(lines[k].number, tok.column, "arc in a clutter file; use the digraph reader");
      int v = resolve_vertex(tok, lines[k].number, h, label_index, used_labels);
      if (e & bit(v)) throw ParseError(lines[k].number, tok.column, "repeated vertex in an edge");
      e |= bit(v);
    }
    edges.push_back(e);
  }
  std::vector<std::string> labels = h.labels;
  if (used_labels) {
    labels.assign(static_cast<std::size_t>(h.n), "");
    for (auto& [name, v] : label_index) labels[static_cast<std::size_t>(v)] = name;
    for (int v = 0; v < h.n; ++v)
      if (labels[static_cast<std::size_t>(v)].empty()) labels[static_cast<std::size_t>(v)] = "v" + std::to_string(v + 1);
  }
  return Clutter::build(h.n, std::move(edges), std::move(labels));
}

std::string edge_string(const Clutter& c, VertexSet e) {
  std::string s;
  for_each_bit(e, [&](int v) {
    if (!s.empty()) s += ' ';
    s += c.label(v);
  });
  return s;
}

std::string format_clutter(const Clutter& c) {
  std::string s = "vertices " + std::to_string(c.num_vertices()) + "\n";
  if (!c.labels().empty()) {
    s += "labels";
    for (const auto& l : c.labels()) s += ' ' + l;
    s += '\n';
  }
  for (VertexSet e : c.edges()) s += edge_string(c, e) + "\n";
  return s;
}

Digraph parse_digraph(const std::string& text) {
  auto lines = content_lines(text);
  Header h = read_header(lines);
  std::map<std::string, int> label_index;
  for (std::size_t i = 0; i < h.labels.size(); ++i) label_index[h.labels[i]] = static_cast<int>(i);
  bool used_labels = false;
  Digraph d;
  d.n = h.n;
  for (std::size_t k = h.body; k < lines.size(); ++k) {
    auto t = tokens(lines[k]);
    if (t.size() != 3 || t[1].text != "->")
      throw ParseError(lines[k].number, t[0].column, "expected an arc 'u -> v'");
    int a = resolve_vertex(t[0], lines[k].number, h, label_index, used_labels);
    int b = resolve_vertex(t[2], lines[k].number, h, label_index, used_labels);
    if (a == b) throw ParseError(lines[k].number, t[2].column, "loops are not allowed");
    d.arcs.emplace_back(a, b);
  }
  return d;
}

}  // namespace edgeideal
