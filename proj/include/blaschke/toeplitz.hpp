#pragma once

// Toeplitz operators with conjugate-analytic symbols.
//
// For a single Blaschke factor the operator is applied through the exact
// zero-extraction identity
//
//     f = f(lambda) (1 - conj(lambda) b_lambda) + b_lambda T f,
//
// solved for T f on the circle, where |b_lambda| = 1. The numerator vanishes at
// lambda, so the quotient is analytic with no new pole. The projection route
// P(conj(phi) f) is kept as an independent cross-check.

#include <algorithm>
#include <sstream>

#include "blaschke/fnspace.hpp"
#include "blaschke/norms.hpp"
#include "blaschke/products.hpp"

namespace blaschke {

/// T_{conj(b_lambda)} f.
template <typename Real>
BoundaryFunction<Real> toeplitz_factor_apply(const BoundaryFunction<Real>& f, const DiskPoint<Real>& lambda) {
  const Eigen::Index m = f.sample_count();
  const Complex<Real> value = eval_inside(f, lambda);
  const auto b = factor_samples(lambda, m);
  ComplexVector<Real> numerator = f.samples() - value * (Complex<Real>(1) - lambda.conj() * b.array()).matrix();
  ComplexVector<Real> quotient = numerator.cwiseQuotient(b);
  const Real radius = lambda.modulus() == Real(0) ? f.analytic_radius()
                                                  : std::min(f.analytic_radius(), Real(1) / lambda.modulus());
  return from_samples<Real>(quotient, radius);
}

/// T_{conj(B)} f as the composition of single-factor operators, applied in the
/// order of the zeros.
template <typename Real>
BoundaryFunction<Real> toeplitz_product_apply(const BoundaryFunction<Real>& f, const FiniteBlaschkeProduct<Real>& b) {
  BoundaryFunction<Real> out = f;
  for (const auto& lambda : b.zeros()) out = toeplitz_factor_apply(out, lambda);
  return out;
}

template <typename Real>
struct ProjectedToeplitz {
  BoundaryFunction<Real> value;
  /// Largest spectral modulus of conj(phi) f near the Nyquist band, relative
  /// to its sup norm. Large values mean positive and negative frequencies
  /// overlap on the grid.
  Real alias_level;
  bool aliased() const { return alias_level > analyticity_tolerance<Real>(); }
};

/// P(conj(phi) f) on the grid, with phi given by boundary samples.
template <typename Real>
ProjectedToeplitz<Real> toeplitz_general_apply(const BoundaryFunction<Real>& f, const ComplexVector<Real>& phi_samples) {
  const Eigen::Index m = f.sample_count();
  if (phi_samples.size() != m) throw PreconditionError("toeplitz_general_apply: symbol sample count mismatch");
  const ComplexVector<Real> product = phi_samples.conjugate().cwiseProduct(f.samples());
  const auto spec = detail::spectrum<Real>(product);
  const Eigen::Index band = std::max<Eigen::Index>(m / 16, 1);
  const Real scale = std::max(sup_norm(product), std::numeric_limits<Real>::min());
  const Real alias = spec.segment(m / 2 - band, 2 * band).cwiseAbs().maxCoeff() / scale;
  auto projected = riesz_project<Real>(product).with_radius(f.analytic_radius());
  return {std::move(projected), alias};
}

template <typename Real>
struct BoundCheck {
  Real lhs;
  Real rhs;
  bool holds;
};

/// ||T_{conj(phi)} f||_inf <= R/(R-1) ||phi||_inf ||f_R||_{H^1}, 1 < R < R_0.
/// ||phi||_inf = 1 for a Blaschke product.
template <typename Real>
BoundCheck<Real> dilated_hardy_bound_check(const BoundaryFunction<Real>& f, const FiniteBlaschkeProduct<Real>& phi, Real r) {
  if (!(r > Real(1) && r < f.analytic_radius())) {
    std::ostringstream msg;
    msg << "dilated_hardy_bound_check: R = " << r << " must lie in (1, " << f.analytic_radius() << ")";
    throw PreconditionError(msg.str());
  }
  const Real lhs = sup_norm(toeplitz_product_apply(f, phi));
  const Real rhs = r / (r - Real(1)) * hardy_norm(dilate(f, r), 1.0);
  return {lhs, rhs, lhs <= rhs};
}

template <typename Real>
struct FactorBoundCheck {
  Real lhs;
  Real rhs;
  bool holds;
  /// | ||T f||_inf - ||f - f(lambda)(1 - conj(lambda) b_lambda)||_inf | on the grid.
  Real grid_equality_gap;
};

/// ||T_{conj(b_lambda)} f||_inf <= 3 ||f||_inf, together with the grid
/// equality ||T f||_inf = ||f - f(lambda)(1 - conj(lambda) b_lambda)||_inf.
template <typename Real>
FactorBoundCheck<Real> factor_sup_bound_check(const BoundaryFunction<Real>& f, const DiskPoint<Real>& lambda) {
  const auto t = toeplitz_factor_apply(f, lambda);
  const auto b = factor_samples(lambda, f.sample_count());
  const Complex<Real> value = eval_inside(f, lambda);
  const ComplexVector<Real> numerator =
      f.samples() - value * (Complex<Real>(1) - lambda.conj() * b.array()).matrix();
  const Real lhs = sup_norm(t);
  const Real rhs = Real(3) * sup_norm(f);
  return {lhs, rhs, lhs <= rhs * (Real(1) + Real(1e-12)), std::abs(lhs - sup_norm(numerator))};
}

}  // namespace blaschke
