// Command line front end: reports, associated primes, polyhedra, suites, duals.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

#include "edgeideal/limits.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/suites.hpp"

using namespace edgeideal;

namespace {

// Exit codes: 0 success, 1 a section or suite failed, 2 bad input or usage.
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::vector<CoefficientField> parse_fields(const std::vector<unsigned>& ps) {
  std::vector<CoefficientField> out;
  for (unsigned p : ps) out.push_back(p == 0 ? CoefficientField::rationals() : CoefficientField::prime(p));
  return out;
}

int print_report(const Report& r, bool as_json, bool timings) {
  std::cout << (as_json ? r.to_json(timings) + "\n" : r.to_text(timings));
  return r.ok() ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of square-free monomial ideals and clutters"};
  app.require_subcommand(1);
  std::string limits_spec;
  app.add_option("--limits", limits_spec, "resource guards, e.g. betti_n=18,power_generators=500000 (also EDGEIDEAL_LIMITS)");

  std::string file;
  std::vector<unsigned> fields;
  unsigned tmax = 0, path_length = 2;
  bool as_json = false, timings = false;
  std::vector<std::string> sections;

  auto* report = app.add_subcommand("report", "full invariant report");
  report->add_option("file", file, "clutter, ideal or digraph file")->required()->check(CLI::ExistingFile);
  report->add_option("--field", fields, "0 for QQ or a prime p (repeatable; default 0 and 2)");
  report->add_option("--tmax", tmax, "window for associated primes of powers");
  report->add_option("--sections", sections, "only these sections")->delimiter(',');
  report->add_option("--path-length", path_length, "path length t for digraph input")->check(CLI::Range(2u, 64u));
  report->add_flag("--json", as_json, "JSON output");
  report->add_flag("--timings", timings, "include timings");

  auto* ass = app.add_subcommand("ass", "associated primes of powers");
  ass->add_option("file", file)->required()->check(CLI::ExistingFile);
  ass->add_option("--tmax", tmax)->required();
  ass->add_flag("--json", as_json);

  auto* poly = app.add_subcommand("polyhedra", "set covering and packing polyhedra");
  poly->add_option("file", file)->required()->check(CLI::ExistingFile);
  poly->add_flag("--json", as_json);

  std::string suite;
  SuiteOptions so;
  auto* verify = app.add_subcommand("verify", "run a verification suite ('all' runs every suite)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--n", so.n, "size bound")->required();
  verify->add_option("--tmax,--t", so.t_max, "power window");
  verify->add_option("--sample", so.sample, "random instances per vertex count above 6");
  verify->add_option("--seed", so.seed);
  verify->add_option("--field", fields, "0 for QQ or a prime p (repeatable; default 0 and 2)");
  verify->add_flag("--json", as_json);

  auto* dual = app.add_subcommand("dual", "Alexander dual / blocker");
  dual->add_option("file", file)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!limits_spec.empty()) limits().apply(limits_spec);
    ReportOptions ro;
    if (!fields.empty()) ro.fields = so.fields = parse_fields(fields);
    ro.t_max = tmax;
    ro.path_length = path_length;

    if (*report) {
      ro.enable.insert(sections.begin(), sections.end());
      if (!ro.enable.empty()) ro.enable.insert("input");
      return print_report(run_report(load_input(file), ro), as_json, timings);
    }
    if (*ass) {
      ro.enable = {"input", "ass"};
      return print_report(run_report(load_input(file), ro), as_json, false);
    }
    if (*poly) {
      ro.enable = {"input", "polyhedra"};
      return print_report(run_report(load_input(file), ro), as_json, false);
    }
    if (*verify) {
      std::vector<std::string> ids = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& id : ids) {
        auto r = verify_suite(id, so);
        all_ok = all_ok && r.passed();
        if (as_json) {
          nlohmann::ordered_json j;
          j["suite"] = r.suite;
          j["passed"] = r.passed();
          j["instances"] = r.instances;
          j["family"] = r.family;
          auto& f = j["failures"] = nlohmann::ordered_json::array();
          for (const auto& x : r.failures) f.push_back({{"serial", x.serial}, {"instance", x.instance}, {"detail", x.detail}});
          out.push_back(j);
        } else {
          std::cout << r.to_text() << std::flush;
        }
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return all_ok ? 0 : kFailed;
    }
    if (*dual) {
      auto in = load_input(file);
      if (auto* c = std::get_if<Clutter>(&in)) {
        std::cout << format_clutter(blocker(*c));
      } else if (auto* I = std::get_if<MonomialIdeal>(&in)) {
        std::cout << format_ideal(alexander_dual(*I));
      } else {
        std::cout << format_clutter(blocker(clutter_of(path_ideal(std::get<Digraph>(in), path_length))));
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ResourceExceeded ? kFailed : kBadInput;
  }
  return 0;
}
