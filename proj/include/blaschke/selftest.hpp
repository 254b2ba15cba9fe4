#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace blaschke {

struct InvariantResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the library invariants at the given sample count. An empty filter
/// runs every module; otherwise only invariants whose module equals it.
std::vector<InvariantResult> run_selftest(Eigen::Index sample_count, std::string_view module_filter = {});

}  // namespace blaschke
