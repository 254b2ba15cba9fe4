#pragma once

// Blaschke factors, finite Blaschke products, Cauchy kernels and point
// sequences in the disk.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blaschke/fnspace.hpp"
#include "blaschke/parse.hpp"

namespace blaschke {

/// b_lambda(z) = (lambda - z) / (1 - conj(lambda) z), for |z| <= 1.
template <typename Real>
Complex<Real> blaschke_factor(const DiskPoint<Real>& lambda, const Complex<Real>& z) {
  const Complex<Real> den = Real(1) - lambda.conj() * z;
  if (std::abs(den) < Real(1e-14)) throw PreconditionError("blaschke_factor: degenerate denominator");
  return (lambda.value() - z) / den;
}

/// b_lambda sampled at the M-th roots of unity.
template <typename Real>
ComplexVector<Real> factor_samples(const DiskPoint<Real>& lambda, Eigen::Index sample_count) {
  const auto z = unit_roots<Real>(sample_count);
  return (lambda.value() - z.array()) / (Real(1) - lambda.conj() * z.array());
}

/// k_lambda sampled at the M-th roots of unity.
template <typename Real>
ComplexVector<Real> kernel_samples(const DiskPoint<Real>& lambda, Eigen::Index sample_count) {
  const auto z = unit_roots<Real>(sample_count);
  return (Real(1) - lambda.conj() * z.array()).inverse();
}

template <typename Real = double>
class FiniteBlaschkeProduct {
 public:
  FiniteBlaschkeProduct() = default;
  explicit FiniteBlaschkeProduct(std::vector<DiskPoint<Real>> zeros) : zeros_(std::move(zeros)) {}

  std::size_t degree() const { return zeros_.size(); }
  const std::vector<DiskPoint<Real>>& zeros() const { return zeros_; }

  Complex<Real> operator()(const Complex<Real>& z) const {
    Complex<Real> value(1);
    for (const auto& lambda : zeros_) value *= blaschke_factor(lambda, z);
    return value;
  }

  ComplexVector<Real> boundary_samples(Eigen::Index sample_count) const {
    ComplexVector<Real> values = ComplexVector<Real>::Ones(sample_count);
    for (const auto& lambda : zeros_) values.array() *= factor_samples(lambda, sample_count).array();
    return values;
  }

  /// Nearest pole radius min 1/|lambda_k|; entire when every zero is 0.
  Real analytic_radius() const {
    Real largest = 0;
    for (const auto& lambda : zeros_) largest = std::max(largest, lambda.modulus());
    return largest == Real(0) ? entire_radius<Real>() : Real(1) / largest;
  }

 private:
  std::vector<DiskPoint<Real>> zeros_;
};

using FiniteBlaschkeProductd = FiniteBlaschkeProduct<double>;

template <typename Real>
Complex<Real> product_eval(const FiniteBlaschkeProduct<Real>& b, const Complex<Real>& z) {
  return b(z);
}

template <typename Real>
BoundaryFunction<Real> product_as_function(const FiniteBlaschkeProduct<Real>& b, Eigen::Index sample_count) {
  require_sample_count(sample_count);
  if (Eigen::Index(b.degree()) > sample_count / 4) {
    throw PreconditionError("product_as_function: degree " + std::to_string(b.degree()) +
                            " exceeds sample_count/4");
  }
  return from_samples<Real>(b.boundary_samples(sample_count), b.analytic_radius());
}

/// k_lambda(z) = 1/(1 - conj(lambda) z), built from its exact Taylor series.
template <typename Real>
BoundaryFunction<Real> cauchy_kernel(const DiskPoint<Real>& lambda, Eigen::Index sample_count) {
  require_sample_count(sample_count);
  ComplexVector<Real> taylor(sample_count / 2);
  const Complex<Real> w = lambda.conj();
  taylor[0] = Complex<Real>(1);
  for (Eigen::Index k = 1; k < taylor.size(); ++k) taylor[k] = std::pow(w, Real(k));
  const Real radius = lambda.modulus() == Real(0) ? entire_radius<Real>() : Real(1) / lambda.modulus();
  return from_taylor<Real>(taylor, sample_count, radius);
}

enum class SequenceKind { NonBlaschke, Blaschke };

inline const char* to_string(SequenceKind kind) {
  return kind == SequenceKind::Blaschke ? "Blaschke" : "NonBlaschke";
}

/// Finite prefix lambda_1 .. lambda_K of a sequence in the disk. The kind is
/// declared by the generator from the closed form of the sequence.
template <typename Real = double>
struct PointSequence {
  std::vector<DiskPoint<Real>> points;
  SequenceKind kind = SequenceKind::NonBlaschke;
  std::string generator_tag;
  /// Whether |lambda_n| -> 1 for the full (infinite) sequence.
  bool modulus_tends_to_one = false;

  std::size_t size() const { return points.size(); }
  /// One-based access, lambda(1) is the first point.
  const DiskPoint<Real>& lambda(std::size_t n) const { return points.at(n - 1); }
  /// B_n with zeros lambda_1 .. lambda_n.
  FiniteBlaschkeProduct<Real> product(std::size_t n) const {
    if (n > points.size()) throw PreconditionError("PointSequence::product: n exceeds prefix length");
    return FiniteBlaschkeProduct<Real>({points.begin(), points.begin() + std::ptrdiff_t(n)});
  }
};

using PointSequenced = PointSequence<double>;

inline constexpr double kDistinctnessTolerance = 1e-10;

template <typename Real>
void require_distinct(const std::vector<DiskPoint<Real>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (std::abs(points[i].value() - points[j].value()) < Real(kDistinctnessTolerance)) {
        throw PreconditionError("sequence points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are not distinct");
      }
    }
  }
}

/// Golden angle 2 pi (1 - 1/phi), default phase step of "harmonic".
template <typename Real>
constexpr Real golden_angle() {
  return Real(2) * std::numbers::pi_v<Real> * (Real(1) - Real(1) / std::numbers::phi_v<Real>);
}

/// Sequence generators:
///   harmonic[:theta]   lambda_n = (1 - 1/(n+1)) e^{i n theta}     non-Blaschke
///   harmonic-shifted   lambda_n = 1 - 1/(n+2)                    non-Blaschke
///   geometric:q        lambda_n = 1 - q^n, 0 < q < 1             Blaschke
///   explicit:[z1, z2, ...]                                       declared non-Blaschke
template <typename Real = double>
PointSequence<Real> make_sequence(std::string_view spec, std::size_t count) {
  PointSequence<Real> seq;
  seq.generator_tag = std::string(spec);
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (head == "harmonic") {
    const Real theta = arg.empty() ? golden_angle<Real>() : Real(parse::parse_real(arg));
    seq.kind = SequenceKind::NonBlaschke;
    seq.modulus_tends_to_one = true;
    seq.generator_tag = "harmonic:" + std::to_string(double(theta));
    for (std::size_t n = 1; n <= count; ++n) {
      const Real r = Real(1) - Real(1) / Real(n + 1);
      seq.points.emplace_back(std::polar(r, Real(n) * theta));
    }
  } else if (head == "harmonic-shifted") {
    if (!arg.empty()) throw PreconditionError("harmonic-shifted takes no argument");
    seq.kind = SequenceKind::NonBlaschke;
    seq.modulus_tends_to_one = true;
    for (std::size_t n = 1; n <= count; ++n) seq.points.emplace_back(Real(1) - Real(1) / Real(n + 2));
  } else if (head == "geometric") {
    const Real q = Real(parse::parse_real(arg));
    if (!(q > Real(0) && q < Real(1))) throw PreconditionError("geometric:q requires 0 < q < 1");
    seq.kind = SequenceKind::Blaschke;
    seq.modulus_tends_to_one = true;
    for (std::size_t n = 1; n <= count; ++n) seq.points.emplace_back(Real(1) - std::pow(q, Real(n)));
  } else if (head == "explicit") {
    std::string_view body = parse::trim(arg);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw PreconditionError("explicit sequence must be written explicit:[z1,z2,...]");
    }
    body = body.substr(1, body.size() - 2);
    for (auto item : parse::split(body, ',')) {
      const auto z = parse::parse_complex(item);
      seq.points.emplace_back(Complex<Real>(Real(z.real()), Real(z.imag())));
    }
    seq.kind = SequenceKind::NonBlaschke;
    seq.modulus_tends_to_one = false;
  } else {
    throw PreconditionError("unknown sequence spec '" + std::string(spec) + "'");
  }
  require_distinct(seq.points);
  return seq;
}

/// |B_n(z)| for n = 0 .. n_max.
template <typename Real>
std::vector<Real> pointwise_decay_check(const PointSequence<Real>& seq, const DiskPoint<Real>& z, std::size_t n_max) {
  if (n_max > seq.size()) throw PreconditionError("pointwise_decay_check: n_max exceeds prefix length");
  std::vector<Real> out{Real(1)};
  Complex<Real> value(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    value *= blaschke_factor(seq.lambda(n), z.value());
    out.push_back(std::abs(value));
  }
  return out;
}

}  // namespace blaschke
