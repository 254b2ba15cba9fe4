#pragma once

// Analytic functions on the closed unit disk, represented by their values at
// the M-th roots of unity together with the nonnegative-frequency half of the
// discrete Fourier spectrum (the truncated Taylor series).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include "blaschke/errors.hpp"

namespace blaschke {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr Eigen::Index kDefaultSampleCount = 2048;
inline constexpr Eigen::Index kMinSampleCount = 16;

/// Points of the disk are kept at least this far from the unit circle.
template <typename Real>
constexpr Real boundary_guard() {
  return Real(1e-8);
}

/// Negative-frequency content above this fraction of max |sample| rejects a
/// claimed analytic function.
template <typename Real>
constexpr Real analyticity_tolerance() {
  return Real(1e-8);
}

/// Radius of analyticity recorded for entire functions (polynomials, B_0).
template <typename Real>
constexpr Real entire_radius() {
  return std::numeric_limits<Real>::max();
}

inline bool is_power_of_two(Eigen::Index m) { return m > 0 && (m & (m - 1)) == 0; }

inline void require_sample_count(Eigen::Index m) {
  if (!is_power_of_two(m) || m < kMinSampleCount) {
    throw PreconditionError("sample count must be a power of two >= 16, got " + std::to_string(m));
  }
}

/// A point of the open unit disk with |value| <= 1 - boundary_guard.
template <typename Real = double>
class DiskPoint {
 public:
  DiskPoint() = default;

  explicit DiskPoint(Complex<Real> value) : value_(value) {
    if (!(std::abs(value) <= Real(1) - boundary_guard<Real>())) {
      std::ostringstream msg;
      msg << "disk point " << value << " is outside |z| <= 1 - " << boundary_guard<Real>();
      throw PreconditionError(msg.str());
    }
  }

  explicit DiskPoint(Real re, Real im = Real(0)) : DiskPoint(Complex<Real>(re, im)) {}

  const Complex<Real>& value() const { return value_; }
  Complex<Real> conj() const { return std::conj(value_); }
  Real modulus() const { return std::abs(value_); }

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) { return a.value_ == b.value_; }

 private:
  Complex<Real> value_{};
};

namespace detail {

template <typename Real>
Eigen::FFT<Real>& fft_engine() {
  thread_local Eigen::FFT<Real> engine;
  return engine;
}

/// Normalized DFT: X_k = (1/M) sum_j x_j exp(-2 pi i jk/M), so X_k = a_k for a
/// polynomial of degree < M.
template <typename Real>
ComplexVector<Real> spectrum(const ComplexVector<Real>& samples) {
  ComplexVector<Real> out;
  fft_engine<Real>().fwd(out, samples);
  out /= Real(samples.size());
  return out;
}

/// Values of sum_k coeffs[k] zeta^k at the M roots of unity.
template <typename Real>
ComplexVector<Real> synthesize(const ComplexVector<Real>& coeffs, Eigen::Index m) {
  ComplexVector<Real> padded = ComplexVector<Real>::Zero(m);
  padded.head(coeffs.size()) = coeffs;
  ComplexVector<Real> out;
  fft_engine<Real>().inv(out, padded);
  out *= Real(m);
  return out;
}

template <typename Real>
Real noise_floor(Real scale) {
  return Real(64) * std::numeric_limits<Real>::epsilon() * scale;
}

}  // namespace detail

/// The M-th roots of unity exp(2 pi i k / M).
template <typename Real = double>
ComplexVector<Real> unit_roots(Eigen::Index m) {
  ComplexVector<Real> z(m);
  const Real step = Real(2) * std::numbers::pi_v<Real> / Real(m);
  for (Eigen::Index k = 0; k < m; ++k) z[k] = std::polar(Real(1), step * Real(k));
  return z;
}

template <typename Real = double>
class BoundaryFunction {
 public:
  using Scalar = Complex<Real>;
  using Vector = ComplexVector<Real>;

  BoundaryFunction() = default;

  Eigen::Index sample_count() const { return samples_.size(); }
  const Vector& samples() const { return samples_; }
  /// a_0 .. a_{M/2-1}.
  const Vector& taylor() const { return taylor_; }
  Real analytic_radius() const { return radius_; }
  /// Magnitude below which Taylor coefficients are roundoff; 0 when the
  /// coefficients were supplied exactly.
  Real coefficient_floor() const { return floor_; }

  BoundaryFunction with_radius(Real radius) const {
    if (!(radius >= Real(1))) throw PreconditionError("analytic radius must be >= 1");
    BoundaryFunction out = *this;
    out.radius_ = radius;
    return out;
  }

  Scalar operator()(const DiskPoint<Real>& z) const;

  static BoundaryFunction from_parts(Vector samples, Vector taylor, Real radius, Real floor) {
    BoundaryFunction f;
    f.samples_ = std::move(samples);
    f.taylor_ = std::move(taylor);
    f.radius_ = radius;
    f.floor_ = floor;
    return f;
  }

 private:
  Vector samples_;
  Vector taylor_;
  Real radius_ = Real(1);
  Real floor_ = Real(0);
};

using BoundaryFunctiond = BoundaryFunction<double>;
using DiskPointd = DiskPoint<double>;

/// Build from Taylor coefficients. The coefficients are stored exactly and the
/// samples are synthesized at the roots of unity.
template <typename Real>
BoundaryFunction<Real> from_taylor(const ComplexVector<Real>& coeffs, Eigen::Index sample_count,
                                   Real analytic_radius) {
  require_sample_count(sample_count);
  if (coeffs.size() == 0) throw PreconditionError("from_taylor: empty coefficient list");
  if (coeffs.size() > sample_count / 2) {
    throw PreconditionError("from_taylor: " + std::to_string(coeffs.size()) +
                            " coefficients exceed sample_count/2 = " + std::to_string(sample_count / 2));
  }
  if (!(analytic_radius >= Real(1))) throw PreconditionError("from_taylor: analytic radius must be >= 1");
  ComplexVector<Real> taylor = ComplexVector<Real>::Zero(sample_count / 2);
  taylor.head(coeffs.size()) = coeffs;
  auto samples = detail::synthesize<Real>(taylor, sample_count);
  return BoundaryFunction<Real>::from_parts(std::move(samples), std::move(taylor), analytic_radius, Real(0));
}

/// Largest modulus among the negative-frequency bins (indices M/2 .. M-1,
/// Nyquist included) of a normalized spectrum.
template <typename Real>
Real negative_frequency_level(const ComplexVector<Real>& spectrum) {
  const Eigen::Index m = spectrum.size();
  return spectrum.tail(m - m / 2).cwiseAbs().maxCoeff();
}

/// Build from boundary samples of a function asserted to be analytic. Throws
/// AnalyticityError when the negative-frequency content exceeds tolerance.
/// The stored samples are resynthesized from the retained spectrum.
template <typename Real>
BoundaryFunction<Real> from_samples(const ComplexVector<Real>& samples, Real analytic_radius) {
  const Eigen::Index m = samples.size();
  require_sample_count(m);
  const auto spec = detail::spectrum<Real>(samples);
  const Real scale = samples.cwiseAbs().maxCoeff();
  const Real negative = negative_frequency_level<Real>(spec);
  if (negative > analyticity_tolerance<Real>() * scale) {
    std::ostringstream msg;
    msg << "analyticity violated: negative-frequency level " << negative << " exceeds "
        << analyticity_tolerance<Real>() << " * " << scale << " (M = " << m << ")";
    throw AnalyticityError(msg.str(), double(negative), double(scale));
  }
  ComplexVector<Real> taylor = spec.head(m / 2);
  auto resampled = detail::synthesize<Real>(taylor, m);
  return BoundaryFunction<Real>::from_parts(std::move(resampled), std::move(taylor), analytic_radius,
                                            detail::noise_floor(scale));
}

template <typename Real = double>
BoundaryFunction<Real> constant_function(Complex<Real> value, Eigen::Index sample_count) {
  ComplexVector<Real> c(1);
  c[0] = value;
  return from_taylor<Real>(c, sample_count, entire_radius<Real>());
}

/// Horner evaluation of the truncated Taylor series at an interior point.
template <typename Real>
Complex<Real> eval_inside(const BoundaryFunction<Real>& f, const DiskPoint<Real>& z) {
  const auto& a = f.taylor();
  Complex<Real> acc(0);
  for (Eigen::Index k = a.size() - 1; k >= 0; --k) acc = acc * z.value() + a[k];
  return acc;
}

template <typename Real>
Complex<Real> BoundaryFunction<Real>::operator()(const DiskPoint<Real>& z) const {
  return eval_inside(*this, z);
}

/// Riesz projection on the grid: drop the negative-frequency bins.
template <typename Real>
BoundaryFunction<Real> riesz_project(const ComplexVector<Real>& samples) {
  const Eigen::Index m = samples.size();
  if (!is_power_of_two(m)) throw PreconditionError("riesz_project: sample count must be a power of two");
  const auto spec = detail::spectrum<Real>(samples);
  ComplexVector<Real> taylor = spec.head(m / 2);
  auto projected = detail::synthesize<Real>(taylor, m);
  const Real scale = samples.size() ? samples.cwiseAbs().maxCoeff() : Real(0);
  return BoundaryFunction<Real>::from_parts(std::move(projected), std::move(taylor), Real(1),
                                            detail::noise_floor(scale));
}

/// f_r(z) = f(rz). For r > 1 the Taylor tail below the coefficient floor is
/// discarded first, since amplifying roundoff by r^k is meaningless.
template <typename Real>
BoundaryFunction<Real> dilate(const BoundaryFunction<Real>& f, Real r) {
  if (!(r > Real(0))) throw PreconditionError("dilate: r must be positive");
  if (r > f.analytic_radius()) {
    std::ostringstream msg;
    msg << "dilate: r = " << r << " exceeds the declared analytic radius " << f.analytic_radius();
    throw PreconditionError(msg.str());
  }
  ComplexVector<Real> taylor = f.taylor();
  Real floor = f.coefficient_floor();
  Eigen::Index keep = taylor.size();
  if (r > Real(1) && floor > Real(0)) {
    while (keep > 0 && std::abs(taylor[keep - 1]) <= floor) --keep;
    taylor.tail(taylor.size() - keep).setZero();
    floor *= std::pow(r, Real(std::max<Eigen::Index>(keep - 1, 0)));
  }
  for (Eigen::Index k = 1; k < keep; ++k) taylor[k] *= std::pow(r, Real(k));
  auto samples = detail::synthesize<Real>(taylor, f.sample_count());
  const Real radius = f.analytic_radius() == entire_radius<Real>() ? entire_radius<Real>() : f.analytic_radius() / r;
  return BoundaryFunction<Real>::from_parts(std::move(samples), std::move(taylor), radius, floor);
}

enum class CombineOp { add, sub, mul, div };

/// Sample-wise combination. The result is checked for analyticity. For div the
/// caller asserts analyticity and may supply the resulting analytic radius
/// (default 1).
template <typename Real>
BoundaryFunction<Real> pointwise_combine(const BoundaryFunction<Real>& f, const BoundaryFunction<Real>& g,
                                         CombineOp op, std::optional<Real> radius = std::nullopt) {
  if (f.sample_count() != g.sample_count()) throw PreconditionError("pointwise_combine: sample counts differ");
  ComplexVector<Real> out;
  switch (op) {
    case CombineOp::add: out = f.samples() + g.samples(); break;
    case CombineOp::sub: out = f.samples() - g.samples(); break;
    case CombineOp::mul: out = f.samples().cwiseProduct(g.samples()); break;
    case CombineOp::div:
      if (g.samples().cwiseAbs().minCoeff() < Real(1e-12)) {
        throw PreconditionError("pointwise_combine: divisor has a sample of modulus < 1e-12");
      }
      out = f.samples().cwiseQuotient(g.samples());
      break;
  }
  const Real r = radius.value_or(op == CombineOp::div ? Real(1) : std::min(f.analytic_radius(), g.analytic_radius()));
  return from_samples<Real>(out, r);
}

template <typename Real>
BoundaryFunction<Real> operator+(const BoundaryFunction<Real>& f, const BoundaryFunction<Real>& g) {
  return pointwise_combine(f, g, CombineOp::add);
}

template <typename Real>
BoundaryFunction<Real> operator-(const BoundaryFunction<Real>& f, const BoundaryFunction<Real>& g) {
  return pointwise_combine(f, g, CombineOp::sub);
}

template <typename Real>
BoundaryFunction<Real> operator*(const BoundaryFunction<Real>& f, const BoundaryFunction<Real>& g) {
  return pointwise_combine(f, g, CombineOp::mul);
}

template <typename Real>
BoundaryFunction<Real> operator*(Complex<Real> c, const BoundaryFunction<Real>& f) {
  return BoundaryFunction<Real>::from_parts(c * f.samples(), c * f.taylor(), f.analytic_radius(),
                                            std::abs(c) * f.coefficient_floor());
}

/// Trapezoid duality pairing <f, g> = (1/M) sum f conj(g).
template <typename DerivedF, typename DerivedG>
auto inner_product(const Eigen::MatrixBase<DerivedF>& f, const Eigen::MatrixBase<DerivedG>& g) {
  using Scalar = typename DerivedF::Scalar;
  return Scalar(g.dot(f)) / typename Scalar::value_type(f.size());
}

template <typename Real>
Complex<Real> inner_product(const BoundaryFunction<Real>& f, const BoundaryFunction<Real>& g) {
  if (f.sample_count() != g.sample_count()) throw PreconditionError("inner_product: sample counts differ");
  return inner_product(f.samples(), g.samples());
}

}  // namespace blaschke
