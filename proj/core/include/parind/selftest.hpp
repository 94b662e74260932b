#pragma once

#include "parind/report.hpp"

#include <string>
#include <vector>

namespace parind::selftest {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double millis = 0;
  double budget_millis = 0;
};

struct AcceptanceOptions {
  std::string only;  // substring filter on criterion id; empty runs all
  report::Backend backend = report::Backend::exact;
  std::string cache_dir;  // reuse group caches when nonempty
  uint64_t seed = report::kDefaultSeed;
};

/// The full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace parind::selftest
