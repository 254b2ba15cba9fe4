#pragma once

// The Takenaka-Malmquist-Walsh system e_n = sqrt(1 - |lambda_n|^2) B_{n-1} k_{lambda_n},
// the point-evaluation functional f -> (T_{conj(B_{N-1})} f)(lambda_N) and a
// lacunary H^2 combination of e_n along which that functional grows without
// bound.

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

#include "blaschke/norms.hpp"
#include "blaschke/products.hpp"
#include "blaschke/toeplitz.hpp"

namespace blaschke {

template <typename Real = double>
struct TMWElement {
  std::size_t index;
  BoundaryFunction<Real> function;
};

namespace detail {

template <typename Real>
ComplexVector<Real> tmw_samples(const PointSequence<Real>& seq, std::size_t n, Eigen::Index sample_count) {
  const auto& lambda = seq.lambda(n);
  const Real weight = std::sqrt(Real(1) - std::norm(lambda.value()));
  return weight * seq.product(n - 1).boundary_samples(sample_count).cwiseProduct(kernel_samples(lambda, sample_count));
}

}  // namespace detail

template <typename Real>
TMWElement<Real> tmw_element(const PointSequence<Real>& seq, std::size_t n, Eigen::Index sample_count) {
  if (n < 1 || n > seq.size()) throw PreconditionError("tmw_element: index out of range of the sequence prefix");
  require_sample_count(sample_count);
  return {n, from_samples<Real>(detail::tmw_samples(seq, n, sample_count), seq.product(n).analytic_radius())};
}

/// G(i, j) = <e_{i+1}, e_{j+1}> under the discrete boundary pairing.
template <typename Real>
Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(const PointSequence<Real>& seq, std::size_t k,
                                                                          Eigen::Index sample_count) {
  if (k > seq.size()) throw PreconditionError("gram_matrix: K exceeds prefix length");
  Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic> elements(sample_count, Eigen::Index(k));
  for (std::size_t n = 1; n <= k; ++n) elements.col(Eigen::Index(n - 1)) = tmw_element(seq, n, sample_count).function.samples();
  return elements.transpose() * elements.conjugate() / Real(sample_count);
}

template <typename Real>
struct FunctionalNorm {
  Real quadrature;
  Real closed_form;
};

/// ||Lambda_N|| = ||B_{N-1} k_{lambda_N}||_2 by quadrature, against 1/sqrt(1 - |lambda_N|^2).
template <typename Real>
FunctionalNorm<Real> functional_norm(const PointSequence<Real>& seq, std::size_t n, Eigen::Index sample_count) {
  if (n < 1 || n > seq.size()) throw PreconditionError("functional_norm: N out of range of the sequence prefix");
  require_sample_count(sample_count);
  const auto& lambda = seq.lambda(n);
  const ComplexVector<Real> representer =
      seq.product(n - 1).boundary_samples(sample_count).cwiseProduct(kernel_samples(lambda, sample_count));
  return {hardy_norm(representer, 2.0), Real(1) / std::sqrt(Real(1) - std::norm(lambda.value()))};
}

/// Support grammar: `pow2` (2, 4, 8, ... <= K) or `list:n1,n2,...`.
inline std::vector<std::size_t> lacunary_support(std::string_view spec, std::size_t k) {
  std::vector<std::size_t> support;
  if (spec == "pow2") {
    for (std::size_t n = 2; n <= k; n *= 2) support.push_back(n);
  } else if (spec.starts_with("list:")) {
    for (auto item : parse::split(spec.substr(5), ',')) {
      const long n = parse::parse_integer(item);
      if (n < 1) throw PreconditionError("support indices must be >= 1");
      support.push_back(std::size_t(n));
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
      throw PreconditionError("support indices must be distinct");
    }
  } else {
    throw PreconditionError("unknown support spec '" + std::string(spec) + "'");
  }
  if (support.empty()) throw PreconditionError("empty lacunary support");
  if (support.back() > k) throw PreconditionError("support exceeds K = " + std::to_string(k));
  return support;
}

template <typename Real = double>
struct WitnessReport {
  std::vector<std::size_t> support;
  std::vector<Real> c;
  std::vector<Real> lambda_modulus;
  /// |(T_{conj(B_{N-1})} f_K)(lambda_N)| for N in the support.
  std::vector<Real> values;
  /// c_N / sqrt(1 - |lambda_N|^2).
  std::vector<Real> expected;
  /// Running sums of c_n^2 over the support.
  std::vector<Real> l2_partial_sums;
  BoundaryFunction<Real> f;

  Real max_relative_error() const {
    Real worst = 0;
    for (std::size_t i = 0; i < values.size(); ++i) worst = std::max(worst, std::abs(values[i] - expected[i]) / expected[i]);
    return worst;
  }
  bool strictly_increasing() const { return std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end(); }
};

/// f_K = sum_{n in support} n^{-exponent} e_n, and the functional values at
/// each support index, which equal c_N / sqrt(1 - |lambda_N|^2) because every
/// cross term is annihilated.
template <typename Real>
WitnessReport<Real> lacunary_witness(const PointSequence<Real>& seq, std::size_t k, Real exponent,
                                     const std::vector<std::size_t>& support, Eigen::Index sample_count) {
  if (seq.kind != SequenceKind::NonBlaschke || !seq.modulus_tends_to_one) {
    throw PreconditionError("lacunary_witness needs a non-Blaschke sequence with |lambda_n| -> 1, got " +
                            seq.generator_tag);
  }
  if (k > seq.size()) throw PreconditionError("lacunary_witness: K exceeds prefix length");
  if (support.empty() || support.back() > k || support.front() < 1) {
    throw PreconditionError("lacunary_witness: support must lie in 1..K");
  }
  require_sample_count(sample_count);

  WitnessReport<Real> report;
  report.support = support;
  ComplexVector<Real> sum = ComplexVector<Real>::Zero(sample_count);
  Real l2 = 0;
  for (const std::size_t n : support) {
    const Real c = std::pow(Real(n), -exponent);
    const Real modulus = seq.lambda(n).modulus();
    report.c.push_back(c);
    report.lambda_modulus.push_back(modulus);
    report.expected.push_back(c / std::sqrt(Real(1) - modulus * modulus));
    l2 += c * c;
    report.l2_partial_sums.push_back(l2);
    sum += c * detail::tmw_samples(seq, n, sample_count);
  }
  report.f = from_samples<Real>(sum, seq.product(support.back()).analytic_radius());

  BoundaryFunction<Real> h = report.f;
  auto next = support.begin();
  for (std::size_t n = 1; next != support.end(); ++n) {
    if (n == *next) {
      report.values.push_back(std::abs(eval_inside(h, seq.lambda(n))));
      ++next;
      if (next == support.end()) break;
    }
    h = toeplitz_factor_apply(h, seq.lambda(n));
  }
  return report;
}

}  // namespace blaschke
