// Acceptance run: one line per criterion. With an argument N only criterion N
// runs (ctest registers each separately).
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "charvar/verify.hpp"

using namespace charvar;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::optional<std::size_t> samples;
  std::optional<double> limit_seconds;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "retraction correctness", "retraction", 1000, 10.0},
      {2, "Fricke identity", "fricke", 10000, 5.0},
      {3, "sigma-ball soundness and rank-2 lift", "sigma", 100000, std::nullopt},
      {4, "rank-3 two-sheet law", "rank3", 10000, std::nullopt},
      {5, "SU(3) membership", "su3-membership", 100000, 60.0},
      {6, "explicit SU(3) example", "example", std::nullopt, std::nullopt},
      {7, "transpose involution", "transpose", 10000, std::nullopt},
      {8, "minors relation", "minors", 10000, std::nullopt},
      {9, "Kempf-Ness functional, gradient and flow", "kempf-ness", 10000, std::nullopt},
      {10, "Baird polynomial", "baird", 10, 1.0},
      {11, "figure data", "figures", std::nullopt, std::nullopt},
  };
  return all;
}

bool run_one(const Criterion& c) {
  VerifyConfig cfg;
  cfg.seed = 1;
  cfg.samples = c.samples;
  const SuiteReport report = run_suite(c.suite, cfg);
  const bool in_time = !c.limit_seconds || report.seconds < *c.limit_seconds;
  const bool ok = report.passed() && in_time;
  std::printf("%s  %2d  %-42s %8.3f s", ok ? "PASS" : "FAIL", c.id, c.title, report.seconds);
  if (c.limit_seconds) std::printf(" (limit %g s)", *c.limit_seconds);
  std::printf("\n");
  for (const auto& check : report.checks)
    if (!check.passed) std::printf("        %s = %.6g, bound %.6g\n", check.name.c_str(), check.value, check.bound);
  if (!in_time) std::printf("        runtime over the limit\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_ok = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only && c.id != *only) continue;
    ran = true;
    all_ok = run_one(c) && all_ok;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only.value_or(0));
    return 2;
  }
  return all_ok ? 0 : 1;
}
