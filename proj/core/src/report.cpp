#include "edgeideal/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "edgeideal/ass.hpp"
#include "edgeideal/betti.hpp"
#include "edgeideal/polyhedra.hpp"
#include "edgeideal/ring_properties.hpp"

namespace edgeideal {

using json = nlohmann::ordered_json;

Input parse_input(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool arcs = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "vars") return parse_ideal(text);
    if (line.find("->") != std::string::npos) arcs = true;
  }
  if (arcs) return parse_digraph(text);
  return parse_clutter(text);
}

Input load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_input(s.str());
}

const std::vector<std::string>& report_sections() {
  static const std::vector<std::string> names{"input", "invariants", "structure", "packing", "homological",
                                              "hilbert", "ring", "ass", "polyhedra"};
  return names;
}

const char* status_name(SectionStatus s) {
  switch (s) {
    case SectionStatus::Ok: return "ok";
    case SectionStatus::Disabled: return "disabled";
    case SectionStatus::Exceeded: return "exceeded";
    case SectionStatus::Error: return "error";
  }
  return "?";
}

namespace {

SectionStatus status_from(const std::string& s) {
  if (s == "ok") return SectionStatus::Ok;
  if (s == "disabled") return SectionStatus::Disabled;
  if (s == "exceeded") return SectionStatus::Exceeded;
  if (s == "error") return SectionStatus::Error;
  fail(Errc::ParseError, "unknown section status '" + s + "'");
}

json indices(VertexSet s) {
  json a = json::array();
  for_each_bit(s, [&](int v) { a.push_back(v + 1); });
  return a;
}

json primes_json(const PrimeSet& p) {
  json a = json::array();
  for (VertexSet s : p.supports()) a.push_back(indices(s));
  return a;
}

json edges_json(const Clutter& c) {
  json a = json::array();
  for (VertexSet e : c.edges()) a.push_back(edge_string(c, e));
  return a;
}

json point_json(const RationalPoint& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(x.get_str());
  return a;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json ass_json(const MonomialIdeal& I, unsigned t_max) {
  unsigned T = t_max ? t_max : default_tmax(I);
  if (I.is_zero()) {
    // R/0 is a domain: the only associated prime is (0), in every power
    json per = json::object();
    for (unsigned t = 1; t <= T; ++t) per[std::to_string(t)] = json::array({json::array()});
    return {{"window", T},          {"per_t", per},       {"stable_index", 1},  {"stability_proven", true},
            {"chain_ok", true},     {"ntf", "yes"},       {"ntf_witness_t", nullptr}, {"ntf_reason", "zero ideal"}};
  }
  auto r = stability_scan(I, T);
  json per = json::object();
  for (const auto& [t, p] : r.per_t) per[std::to_string(t)] = primes_json(p);
  json j;
  j["window"] = r.window;
  j["per_t"] = per;
  j["stable_index"] = opt(r.stable_index);
  j["stability_proven"] = r.stability_proven;
  j["chain_ok"] = r.chain_ok;
  j["ntf"] = ntf_name(r.ntf.verdict);
  j["ntf_witness_t"] = opt(r.ntf.witness_t);
  j["ntf_reason"] = r.ntf.reason;
  return j;
}

struct Builder {
  const ReportOptions& options;
  Report report;

  bool wanted(const std::string& name) const { return options.enable.empty() || options.enable.count(name); }

  void add(const std::string& name, const std::function<json()>& body) {
    Section s;
    s.name = name;
    s.requested = options.enable.count(name) > 0;
    if (!wanted(name)) {
      s.status = SectionStatus::Disabled;
      s.message = "not requested";
      s.data = "{}";
      report.sections.push_back(std::move(s));
      return;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      s.data = body().dump();
    } catch (const Error& e) {
      s.status = e.code() == Errc::ResourceExceeded ? SectionStatus::Exceeded : SectionStatus::Error;
      s.message = e.what();
      s.data = "{}";
    } catch (const std::exception& e) {
      s.status = SectionStatus::Error;
      s.message = e.what();
      s.data = "{}";
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.sections.push_back(std::move(s));
  }

  void not_applicable(const std::string& name, const std::string& why) {
    Section s;
    s.name = name;
    s.requested = options.enable.count(name) > 0;
    s.status = SectionStatus::Disabled;
    s.message = why;
    s.data = "{}";
    report.sections.push_back(std::move(s));
  }
};

void clutter_sections(Builder& b, const Clutter& c) {
  const auto& o = b.options;
  b.add("invariants", [&] {
    auto iv = cover_invariants(c);
    json j;
    j["alpha0"] = iv.alpha0;
    j["beta0"] = iv.beta0;
    j["beta1"] = iv.beta1;
    j["im"] = iv.im;
    j["beta_prime"] = opt(iv.beta_prime);
    j["alpha0_prime"] = iv.alpha0_prime;
    j["beta0_prime"] = iv.beta0_prime;
    j["minimal_covers"] = c.num_edges() ? edges_json(blocker(c)) : json::array();
    return j;
  });
  b.add("structure", [&] {
    auto f = structure_flags(c);
    json j;
    j["bipartite"] = opt(f.bipartite);
    j["chordal"] = opt(f.chordal);
    j["weakly_chordal"] = opt(f.weakly_chordal);
    j["perfect"] = opt(f.perfect);
    j["uniform"] = opt(f.uniform_d);
    j["balanced"] = f.balanced;
    j["totally_balanced"] = f.totally_balanced;
    j["diadic"] = f.diadic;
    j["binary"] = f.binary;
    j["b_graph"] = opt(f.b_graph);
    return j;
  });
  b.add("packing", [&] {
    auto kp = konig_and_packing(c);
    json j;
    j["konig"] = kp.konig;
    j["packing"] = kp.packing;
    if (kp.witness) {
      json w;
      w["deleted"] = indices(kp.witness_deleted);
      w["contracted"] = indices(kp.witness_contracted);
      w["minor_vertices"] = kp.witness->num_vertices();
      w["minor_edges"] = edges_json(*kp.witness);
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    return j;
  });
  const auto I = edge_ideal(c);
  b.add("homological", [&] {
    json j = json::object();
    for (auto f : o.fields) {
      auto t = betti_table(I, f);
      auto h = homological_invariants(t, I);
      json e;
      e["reg"] = h.reg;
      e["pd"] = h.pd;
      e["depth"] = h.depth;
      e["dim"] = h.dim;
      json betti = json::array();
      for (const auto& [ij, v] : t.entries) betti.push_back(json::array({ij.first, ij.second, v}));
      e["betti"] = betti;
      e["betti_text"] = t.to_text();
      j[f.name()] = e;
    }
    return j;
  });
  b.add("hilbert", [&] {
    auto h = hilbert_data(c);
    json j;
    j["h"] = h.h;
    j["dim"] = h.dim;
    j["multiplicity"] = h.multiplicity;
    j["a_invariant"] = h.a_invariant;
    j["arith_deg"] = h.arith_deg;
    return j;
  });
  b.add("ring", [&] {
    json j = json::object();
    for (auto f : o.fields) {
      auto p = ring_properties(c, f);
      json e;
      e["cm"] = p.cm;
      e["scm"] = p.scm;
      e["shellable"] = p.shellable;
      e["vertex_decomposable"] = p.vertex_decomposable;
      e["connected_codim1"] = p.connected_codim1;
      e["unmixed"] = p.unmixed;
      j[f.name()] = e;
    }
    return j;
  });
  b.add("ass", [&] { return ass_json(I, o.t_max); });
  b.add("polyhedra", [&] {
    json j;
    if (!c.num_edges()) {
      j["note"] = "no edges";
      return j;
    }
    IncidenceMatrix a(c);
    auto ir = integrality_report(c);
    j["q_integral"] = ir.q_integral;
    j["p_integral"] = ir.p_integral;
    j["q_fractional_vertex"] = ir.fractional_witness ? point_json(*ir.fractional_witness) : json(nullptr);
    j["p_fractional_vertex"] = ir.p_fractional_witness ? point_json(*ir.p_fractional_witness) : json(nullptr);
    auto tu = is_totally_unimodular(a);
    j["totally_unimodular"] = tu.unimodular;
    if (!tu.unimodular) {
      json w;
      json rows = json::array(), cols = json::array();
      for (int r : tu.rows) rows.push_back(r + 1);
      for (int k : tu.cols) cols.push_back(edge_string(c, c.edges()[static_cast<std::size_t>(k)]));
      w["vertices"] = rows;
      w["edges"] = cols;
      w["determinant"] = tu.determinant;
      j["tu_violation"] = w;
    } else {
      j["tu_violation"] = nullptr;
    }
    auto fc = fractional_cover(a);
    j["cover_lp"] = fc.cover_lp_value.get_str();
    j["matching_lp"] = fc.matching_lp_value.get_str();
    j["cover_optimum"] = point_json(fc.cover_optimum);
    json verts = json::array();
    for (const auto& v : vertices_Q(a)) verts.push_back(point_json(v));
    j["q_vertices"] = verts;
    return j;
  });
}

}  // namespace

bool Report::ok() const {
  for (const auto& s : sections) {
    if (s.status == SectionStatus::Exceeded || s.status == SectionStatus::Error) return false;
    if (s.status == SectionStatus::Disabled && s.requested) return false;
  }
  return true;
}

std::string Report::to_json(bool timings, int indent) const {
  json j;
  j["kind"] = kind;
  j["ok"] = ok();
  json secs = json::array();
  for (const auto& s : sections) {
    json e;
    e["name"] = s.name;
    e["status"] = status_name(s.status);
    e["requested"] = s.requested;
    e["message"] = s.message;
    e["data"] = json::parse(s.data);
    if (timings) e["seconds"] = s.seconds;
    secs.push_back(e);
  }
  j["sections"] = secs;
  return j.dump(indent);
}

namespace {

void flatten(std::ostringstream& out, const std::string& prefix, const json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(out, prefix.empty() ? k : prefix + "." + k, v);
    return;
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.find('\n') != std::string::npos) {
      out << "  " << prefix << ":\n";
      std::istringstream lines(s);
      std::string line;
      while (std::getline(lines, line)) out << "    " << line << "\n";
      return;
    }
    out << "  " << prefix << ": " << s << "\n";
    return;
  }
  out << "  " << prefix << ": " << j.dump() << "\n";
}

}  // namespace

std::string Report::to_text(bool timings) const {
  std::ostringstream out;
  out << "kind: " << kind << "\n";
  for (const auto& s : sections) {
    out << "[" << s.name << "] " << status_name(s.status);
    if (!s.message.empty()) out << " (" << s.message << ")";
    if (timings) out << " " << s.seconds << "s";
    out << "\n";
    flatten(out, "", json::parse(s.data));
  }
  return out.str();
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
  Report r;
  r.kind = j.at("kind").get<std::string>();
  for (const auto& e : j.at("sections")) {
    Section s;
    s.name = e.at("name").get<std::string>();
    s.status = status_from(e.at("status").get<std::string>());
    s.requested = e.at("requested").get<bool>();
    s.message = e.at("message").get<std::string>();
    s.data = e.at("data").dump();
    if (e.contains("seconds")) s.seconds = e.at("seconds").get<double>();
    r.sections.push_back(std::move(s));
  }
  return r;
}

Report run_report(const Input& input, const ReportOptions& options) {
  for (const auto& name : options.enable)
    if (std::find(report_sections().begin(), report_sections().end(), name) == report_sections().end())
      fail(Errc::InvalidArgument, "unknown report section '" + name + "'");
  if (options.fields.empty()) fail(Errc::InvalidArgument, "at least one field is needed");
  Builder b{options, {}};
  if (const auto* c = std::get_if<Clutter>(&input)) {
    b.report.kind = "clutter";
    b.add("input", [&] {
      json j;
      j["vertices"] = c->num_vertices();
      j["labels"] = c->labels();
      j["edges"] = edges_json(*c);
      return j;
    });
    clutter_sections(b, *c);
  } else if (const auto* d = std::get_if<Digraph>(&input)) {
    b.report.kind = "digraph";
    auto I = path_ideal(*d, options.path_length);
    b.add("input", [&] {
      json j;
      j["vertices"] = d->n;
      json arcs = json::array();
      for (auto [u, v] : d->arcs) arcs.push_back(json::array({u + 1, v + 1}));
      j["arcs"] = arcs;
      j["path_length"] = options.path_length;
      j["path_ideal"] = format_ideal(I);
      return j;
    });
    clutter_sections(b, clutter_of(I));
  } else {
    const auto& I = std::get<MonomialIdeal>(input);
    b.report.kind = "ideal";
    b.add("input", [&] {
      json j;
      j["vars"] = I.nvars();
      json g = json::array();
      for (const auto& m : I.generators()) g.push_back(to_string(m));
      j["generators"] = g;
      j["squarefree"] = I.is_squarefree();
      return j;
    });
    if (I.is_squarefree()) {
      clutter_sections(b, clutter_of(I));
    } else {
      for (const char* name : {"invariants", "structure", "packing", "homological", "hilbert", "ring"})
        b.not_applicable(name, "needs a square-free ideal");
      b.add("ass", [&] { return ass_json(I, options.t_max); });
      b.not_applicable("polyhedra", "needs a square-free ideal");
    }
  }
  return b.report;
}

}  // namespace edgeideal
