#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurk/io.hpp"

namespace schurk {

struct SuiteResult {
  std::string name, title;
  int checks = 0, failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::string error;                  // uncaught exception, if any
  json report = json::object();       // values worth printing
  double seconds = 0;
  bool passed() const { return failures == 0 && error.empty() && checks > 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  unsigned jobs = 1;
};

// Module invariant suites, then the twelve acceptance criteria.
const std::vector<std::string>& module_suites();
const std::vector<std::string>& criterion_suites();
std::vector<std::string> all_suites();
std::string suite_title(const std::string& name);

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});
// "all", "modules", "criteria", or comma-separated names; results keep the requested order
std::vector<SuiteResult> run_suites(const std::string& selection, const VerifyOptions& opt = {});

json suite_json(const SuiteResult& r);

}  // namespace schurk
