#pragma once

// JSON / CSV serialization and the function-spec grammar used by the CLI.
// Floating-point output is rounded to 12 significant digits so identical runs
// produce byte-identical files.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "blaschke/schauder.hpp"
#include "blaschke/tmw.hpp"

namespace blaschke::io {

using nlohmann::json;

double round12(double x);
std::string format12(double x);

json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& j);

/// {sample_count, analytic_radius, taylor: [[re, im], ...]}
json to_json(const BoundaryFunctiond& f);
/// Rebuilds from the Taylor list; resamples at `sample_count` when given.
BoundaryFunctiond function_from_json(const json& j, std::optional<Eigen::Index> sample_count = std::nullopt);

/// {kind, generator_tag, points: [[re, im], ...]}
json to_json(const PointSequenced& seq);
PointSequenced sequence_from_json(const json& j);

/// {sequence, coefficients, residual_sup_norms, remainder_identity_gap, meta}
json to_json(const ExpansionResultd& result);

/// Header `n,sup,<norm-spec>...[,bound]`, one row per n, LF line endings.
std::string to_csv(const ConvergenceTable<double>& table);

json to_json(const WitnessReport<double>& report);
json gram_to_json(const Eigen::MatrixXcd& gram, Eigen::Index sample_count);
json to_json(const FunctionalNorm<double>& norm, std::size_t n, std::complex<double> lambda);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& path, std::string_view content);

struct ParsedFunction {
  BoundaryFunctiond function;
  std::string description;
  /// Set when the function is a Cauchy kernel k_alpha.
  std::optional<DiskPointd> kernel_alpha;
};

/// Grammar: `poly:a0,a1,...` | `kernel:z` | `blaschke:z1;z2;...` | `ratgeo:c`
/// (1/(1 - cz)) | `file:<path>` (JSON BoundaryFunction). Complex literals are
/// written like `0.3`, `0.3+0.2i`, `-0.5i`.
ParsedFunction parse_function(std::string_view spec, Eigen::Index sample_count);

}  // namespace blaschke::io
