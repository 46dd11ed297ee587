// Self-contained verification suites: each one exercises a documented
// mathematical property of the engine (weight-set cardinalities, dimension
// formula agreement, cone identities, classification tables, ...) over a
// fixed deterministic input population and reports check/failure counts.
// Output is byte-deterministic: fixed seeds, no timing, no addresses.
#pragma once

#include <string>
#include <vector>

#include "core/io.hpp"

namespace hq {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
  bool ok() const { return failures == 0; }
};

// The individual suite names, in canonical order.
std::vector<std::string> suite_names();

// Runs one suite by name; throws invalid_input for an unknown name.
SuiteResult run_suite(const std::string& name);

// "all" runs every suite in canonical order; any other name delegates to
// run_suite.
std::vector<SuiteResult> run_suites(const std::string& name);

// Deterministic rendering of one or more suite results.
std::string render_suites(const std::vector<SuiteResult>& results, Format f);

}  // namespace hq
