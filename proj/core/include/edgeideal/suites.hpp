#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgeideal/complex.hpp"

namespace edgeideal {

struct SuiteOptions {
  int n = 6;                 // size bound of the family
  unsigned t_max = 0;        // 0 picks the suite default
  std::size_t sample = 150;  // random instances per vertex count beyond exhaustive range
  std::uint64_t seed = 20240601;
  std::vector<CoefficientField> fields{CoefficientField::rationals(), CoefficientField::prime(2)};
};

struct SuiteFailure {
  std::size_t serial = 0;
  std::string instance;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t instances = 0;
  std::string family;  // how the instances were produced
  std::vector<SuiteFailure> failures;  // ordered by serial
  bool passed() const { return failures.empty(); }
  std::string to_text(std::size_t max_failures = 20) const;
};

const std::vector<std::string>& suite_names();
// UnknownSuite for unregistered ids.
SuiteResult verify_suite(const std::string& id, const SuiteOptions& options = {});

// One-line description of a clutter: "n=5 {1 2, 2 3}".
std::string describe(const Clutter& c);

}  // namespace edgeideal
