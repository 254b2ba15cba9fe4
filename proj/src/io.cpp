#include "blaschke/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace blaschke::io {

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

json complex_to_json(std::complex<double> z) { return json::array({round12(z.real()), round12(z.imag())}); }

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw PreconditionError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_list(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
  return out;
}

json real_list(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(round12(x));
  return out;
}

constexpr double kEntireThreshold = 1e300;

}  // namespace

json to_json(const BoundaryFunctiond& f) {
  // Trailing zero coefficients are dropped; they carry no information.
  Eigen::Index used = f.taylor().size();
  while (used > 1 && f.taylor()[used - 1] == std::complex<double>(0)) --used;
  return json{{"sample_count", f.sample_count()},
              {"analytic_radius", round12(std::min(f.analytic_radius(), 1.0e308))},
              {"taylor", complex_list(f.taylor().head(used))}};
}

BoundaryFunctiond function_from_json(const json& j, std::optional<Eigen::Index> sample_count) {
  try {
    const Eigen::Index m = sample_count.value_or(j.at("sample_count").get<Eigen::Index>());
    const auto& list = j.at("taylor");
    Eigen::VectorXcd taylor(Eigen::Index(list.size()));
    for (std::size_t k = 0; k < list.size(); ++k) taylor[Eigen::Index(k)] = complex_from_json(list[k]);
    Eigen::Index used = taylor.size();
    while (used > 1 && taylor[used - 1] == std::complex<double>(0)) --used;
    double radius = j.at("analytic_radius").get<double>();
    if (radius >= kEntireThreshold) radius = entire_radius<double>();
    return from_taylor<double>(taylor.head(used), m, radius);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed BoundaryFunction JSON: ") + e.what());
  }
}

json to_json(const PointSequenced& seq) {
  json points = json::array();
  for (const auto& p : seq.points) points.push_back(complex_to_json(p.value()));
  return json{{"kind", to_string(seq.kind)}, {"generator_tag", seq.generator_tag}, {"points", points}};
}

PointSequenced sequence_from_json(const json& j) {
  try {
    PointSequenced seq;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Blaschke") {
      seq.kind = SequenceKind::Blaschke;
    } else if (kind == "NonBlaschke") {
      seq.kind = SequenceKind::NonBlaschke;
    } else {
      throw PreconditionError("unknown sequence kind '" + kind + "'");
    }
    seq.generator_tag = j.at("generator_tag").get<std::string>();
    for (const auto& p : j.at("points")) seq.points.emplace_back(complex_from_json(p));
    require_distinct(seq.points);
    return seq;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed PointSequence JSON: ") + e.what());
  }
}

json to_json(const ExpansionResultd& result) {
  return json{{"sequence", to_json(result.sequence)},
              {"coefficients", complex_list(result.coefficients)},
              {"residual_sup_norms", real_list(result.residual_sup_norms)},
              {"remainder_identity_gap", round12(result.remainder_identity_gap)},
              {"meta", {{"sample_count", result.sample_count}, {"function", result.function}}}};
}

std::string to_csv(const ConvergenceTable<double>& table) {
  std::ostringstream out;
  out << "n";
  for (const auto& spec : table.norms) out << ',' << spec.label;
  if (table.kernel_bound) out << ",bound";
  out << '\n';
  for (Eigen::Index row = 0; row < table.values.rows(); ++row) {
    out << row + 1;
    for (Eigen::Index col = 0; col < table.values.cols(); ++col) out << ',' << format12(table.values(row, col));
    if (table.kernel_bound) out << ',' << format12((*table.kernel_bound)[std::size_t(row)]);
    out << '\n';
  }
  return out.str();
}

json to_json(const WitnessReport<double>& report) {
  return json{{"support", report.support},
              {"c", real_list(report.c)},
              {"lambda_modulus", real_list(report.lambda_modulus)},
              {"values", real_list(report.values)},
              {"expected", real_list(report.expected)},
              {"l2_partial_sum", round12(report.l2_partial_sums.empty() ? 0.0 : report.l2_partial_sums.back())},
              {"l2_partial_sums", real_list(report.l2_partial_sums)},
              {"max_relative_error", round12(report.max_relative_error())},
              {"strictly_increasing", report.strictly_increasing()}};
}

json gram_to_json(const Eigen::MatrixXcd& gram, Eigen::Index sample_count) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < gram.cols(); ++j) row.push_back(complex_to_json(gram(i, j)));
    rows.push_back(row);
  }
  const Eigen::MatrixXcd deviation = gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
  Eigen::MatrixXcd off = gram;
  off.diagonal().setZero();
  return json{{"k", gram.rows()},
              {"sample_count", sample_count},
              {"matrix", rows},
              {"max_deviation_from_identity", round12(deviation.cwiseAbs().maxCoeff())},
              {"max_off_diagonal", round12(off.size() ? off.cwiseAbs().maxCoeff() : 0.0)}};
}

json to_json(const FunctionalNorm<double>& norm, std::size_t n, std::complex<double> lambda) {
  return json{{"n", n},
              {"lambda", complex_to_json(lambda)},
              {"quadrature", round12(norm.quadrature)},
              {"closed_form", round12(norm.closed_form)},
              {"relative_gap", round12(std::abs(norm.quadrature - norm.closed_form) / norm.closed_form)}};
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

ParsedFunction parse_function(std::string_view spec, Eigen::Index sample_count) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw PreconditionError("function spec '" + std::string(spec) + "' has no ':'");
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  ParsedFunction out;
  out.description = std::string(spec);
  if (head == "poly") {
    const auto items = parse::split(arg, ',');
    Eigen::VectorXcd coeffs(Eigen::Index(items.size()));
    for (std::size_t k = 0; k < items.size(); ++k) coeffs[Eigen::Index(k)] = parse::parse_complex(items[k]);
    out.function = from_taylor<double>(coeffs, sample_count, entire_radius<double>());
  } else if (head == "kernel") {
    const DiskPointd alpha(parse::parse_complex(arg));
    out.function = cauchy_kernel(alpha, sample_count);
    out.kernel_alpha = alpha;
  } else if (head == "ratgeo") {
    // 1/(1 - cz) is the Cauchy kernel at conj(c).
    const DiskPointd alpha(std::conj(parse::parse_complex(arg)));
    out.function = cauchy_kernel(alpha, sample_count);
    out.kernel_alpha = alpha;
  } else if (head == "blaschke") {
    std::vector<DiskPointd> zeros;
    for (auto item : parse::split(arg, ';')) zeros.emplace_back(parse::parse_complex(item));
    out.function = product_as_function(FiniteBlaschkeProductd(std::move(zeros)), sample_count);
  } else if (head == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) throw PreconditionError("cannot read function file '" + std::string(arg) + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("function file is not valid JSON: ") + e.what());
    }
    out.function = function_from_json(j, sample_count);
  } else {
    throw PreconditionError("unknown function spec '" + std::string(spec) + "'");
  }
  return out;
}

}  // namespace blaschke::io
