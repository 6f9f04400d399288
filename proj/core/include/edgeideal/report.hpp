#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "edgeideal/clutter.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/monomial.hpp"

namespace edgeideal {

using Input = std::variant<Clutter, MonomialIdeal, Digraph>;

// "vars n" starts an ideal, lines with "->" make a digraph, anything else is
// read as a clutter.
Input parse_input(const std::string& text);
Input load_input(const std::string& path);

// Sections: input, invariants, structure, packing, homological, hilbert,
// ring, ass, polyhedra.
const std::vector<std::string>& report_sections();

struct ReportOptions {
  std::vector<CoefficientField> fields{CoefficientField::rationals(), CoefficientField::prime(2)};
  unsigned t_max = 0;         // 0: default stability window
  unsigned path_length = 2;   // t for the path ideal of a digraph
  std::set<std::string> enable;  // empty: every section
};

enum class SectionStatus { Ok, Disabled, Exceeded, Error };
const char* status_name(SectionStatus s);

struct Section {
  std::string name;
  SectionStatus status = SectionStatus::Ok;
  std::string message;  // reason when not ok
  std::string data;     // JSON object text
  bool requested = false;  // named explicitly in ReportOptions::enable
  double seconds = 0;
};

struct Report {
  std::string kind;  // clutter, ideal, digraph
  std::vector<Section> sections;
  // Requested sections that were exceeded or failed make the report fail;
  // sections that do not apply to the input are only marked.
  bool ok() const;
  std::string to_json(bool timings = false, int indent = 2) const;
  std::string to_text(bool timings = false) const;
};
Report report_from_json(const std::string& json);

Report run_report(const Input& input, const ReportOptions& options = {});

}  // namespace edgeideal
