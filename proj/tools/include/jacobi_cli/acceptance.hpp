#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jacobi::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The ten acceptance checks, run in order. `on_result` sees each result as
/// soon as it is available.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [n] title: detail (t s)"
std::string format_line(const CriterionResult& r);

}  // namespace jacobi::cli
