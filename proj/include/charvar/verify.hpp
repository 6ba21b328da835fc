#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/json_io.hpp"

namespace charvar {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // suite default when empty
  double tol = kDefaultTol;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One measured quantity and the bound it must respect.
struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::size_t samples = 0;
  std::vector<Check> checks;
  Json details = Json::object();
  double seconds = 0.0;

  bool passed() const;
  Json to_json() const;
};

/// fricke, su3-membership, baird, retraction, sigma, rank3, example,
/// transpose, minors, kempf-ness, figures.
std::vector<std::string> suite_names();

/// Runs a suite. Sampling fans out over seed-derived substreams, so the
/// report depends on the seed only. Throws BadParameter for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config = {});

}  // namespace charvar
