#pragma once

// Quadrature norms on analytic functions of the closed disk: sup, Hardy H^p and
// weighted Bergman A^p_alpha. All use probability normalizations, so that
// ||f||_X <= ||f||_inf for every implemented X (embedding constant C_0 = 1).

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Eigenvalues>

#include "blaschke/fnspace.hpp"
#include "blaschke/parse.hpp"

namespace blaschke {

enum class NormKind { sup, hardy, bergman };

struct NormSpec {
  NormKind kind = NormKind::sup;
  double p = std::numeric_limits<double>::infinity();
  double alpha = 0.0;
  int radial_nodes = 64;
  /// Source text, used as the CSV column header.
  std::string label = "sup";

  static NormSpec sup() { return {}; }
  static NormSpec hardy(double p) {
    NormSpec s{NormKind::hardy, p, 0.0, 64, "hardy:" + format(p)};
    s.validate();
    return s;
  }
  static NormSpec bergman(double p, double alpha, int radial_nodes = 64) {
    NormSpec s{NormKind::bergman, p, alpha, radial_nodes, "bergman:" + format(p) + ":" + format(alpha)};
    s.validate();
    return s;
  }

  /// Grammar: `sup` | `hardy:p` | `bergman:p:alpha[:radial_nodes]`, p may be `inf`.
  static NormSpec parse(std::string_view text) {
    text = parse::trim(text);
    const auto parts = parse::split(text, ':');
    NormSpec s;
    if (parts[0] == "sup" && parts.size() == 1) {
      s = sup();
    } else if (parts[0] == "hardy" && parts.size() == 2) {
      s = NormSpec{NormKind::hardy, parse_exponent(parts[1]), 0.0, 64, {}};
    } else if (parts[0] == "bergman" && (parts.size() == 3 || parts.size() == 4)) {
      s = NormSpec{NormKind::bergman, parse_exponent(parts[1]), parse::parse_real(parts[2]), 64, {}};
      if (parts.size() == 4) s.radial_nodes = int(parse::parse_integer(parts[3]));
    } else {
      throw PreconditionError("unknown norm spec '" + std::string(text) + "'");
    }
    s.label = std::string(text);
    s.validate();
    return s;
  }

  void validate() const {
    if (!(p >= 1.0)) throw PreconditionError("norm spec: p must be >= 1");
    if (kind == NormKind::bergman && !(alpha > -1.0)) throw PreconditionError("norm spec: alpha must be > -1");
    if (radial_nodes < 1) throw PreconditionError("norm spec: radial_nodes must be positive");
  }

 private:
  static double parse_exponent(std::string_view text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    return parse::parse_real(text);
  }
  static std::string format(double x) {
    if (std::isinf(x)) return "inf";
    std::string s = std::to_string(x);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }
};

template <typename Derived>
auto sup_norm(const Eigen::MatrixBase<Derived>& samples) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return samples.size() ? Real(samples.cwiseAbs().maxCoeff()) : Real(0);
}

/// Boundary maximum; equals the H^inf norm by the maximum principle.
template <typename Real>
Real sup_norm(const BoundaryFunction<Real>& f) {
  return sup_norm(f.samples());
}

/// (mean |f|^p)^{1/p} over the boundary grid; p = inf gives the sup norm.
template <typename Derived>
auto hardy_norm(const Eigen::MatrixBase<Derived>& samples, double p) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (!(p >= 1.0)) throw PreconditionError("hardy_norm: p must be >= 1");
  if (std::isinf(p)) return sup_norm(samples);
  if (p == 2.0) return Real(std::sqrt(samples.squaredNorm() / Real(samples.size())));
  const Real mean = samples.cwiseAbs().array().pow(Real(p)).mean();
  return Real(std::pow(mean, Real(1) / Real(p)));
}

template <typename Real>
Real hardy_norm(const BoundaryFunction<Real>& f, double p) {
  return hardy_norm(f.samples(), p);
}

template <typename Real>
struct QuadratureRule {
  RealVector<Real> nodes;
  RealVector<Real> weights;
};

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - t)^alpha (Golub-Welsch).
/// alpha = 0 is Gauss-Legendre.
template <typename Real = double>
QuadratureRule<Real> gauss_jacobi_unit(int n, Real alpha) {
  if (n < 1) throw PreconditionError("gauss_jacobi_unit: need at least one node");
  if (!(alpha > Real(-1))) throw PreconditionError("gauss_jacobi_unit: alpha must be > -1");
  // Jacobi recurrence on [-1, 1] with a = alpha, b = 0.
  const Real a = alpha;
  const Real b = 0;
  RealVector<Real> diag(n);
  RealVector<Real> sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) {
    const Real s = Real(2 * k) + a + b;
    diag[k] = k == 0 ? (b - a) / (a + b + Real(2)) : (b * b - a * a) / (s * (s + Real(2)));
  }
  for (int k = 1; k < n; ++k) {
    const Real s = Real(2 * k) + a + b;
    const Real num = Real(4 * k) * (Real(k) + a) * (Real(k) + b) * (Real(k) + a + b);
    sub[k - 1] = std::sqrt(num / (s * s * (s + Real(1)) * (s - Real(1))));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const Real mu0 = std::pow(Real(2), a + b + Real(1)) * std::tgamma(a + Real(1)) * std::tgamma(b + Real(1)) /
                   std::tgamma(a + b + Real(2));
  QuadratureRule<Real> rule;
  rule.nodes = (solver.eigenvalues().array() + Real(1)) / Real(2);
  rule.weights = mu0 * solver.eigenvectors().row(0).transpose().array().square() * std::pow(Real(2), -a - Real(1));
  return rule;
}

/// Normalized weighted Bergman norm
///   ( int_D |f|^p (1 + alpha)(1 - |z|^2)^alpha dA/pi )^{1/p}
/// from Taylor coefficients: Gauss-Jacobi in the radius absorbs (1 - r)^alpha,
/// trapezoid in the angle on an M-point circle.
template <typename Real>
Real bergman_norm_from_taylor(const ComplexVector<Real>& taylor, Eigen::Index sample_count, double p, double alpha,
                              int radial_nodes) {
  if (!(p >= 1.0)) throw PreconditionError("bergman_norm: p must be >= 1");
  if (!(alpha > -1.0)) throw PreconditionError("bergman_norm: alpha must be > -1");
  const Real a = Real(alpha);
  const auto rule = gauss_jacobi_unit<Real>(radial_nodes, a);
  const bool sup = std::isinf(p);
  Real total = 0;
  ComplexVector<Real> scaled(taylor.size());
  for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
    const Real r = rule.nodes[j];
    Real power = 1;
    for (Eigen::Index k = 0; k < taylor.size(); ++k, power *= r) scaled[k] = taylor[k] * power;
    const auto values = detail::synthesize<Real>(scaled, sample_count);
    if (sup) {
      total = std::max(total, sup_norm(values));
      continue;
    }
    const Real circle_mean = p == 2.0 ? values.squaredNorm() / Real(sample_count)
                                      : values.cwiseAbs().array().pow(Real(p)).mean();
    total += rule.weights[j] * Real(2) * r * (Real(1) + a) * std::pow(Real(1) + r, a) * circle_mean;
  }
  return sup ? total : std::pow(total, Real(1) / Real(p));
}

template <typename Real>
Real bergman_norm(const BoundaryFunction<Real>& f, double p, double alpha, int radial_nodes = 64) {
  if (!(f.analytic_radius() >= Real(1))) throw PreconditionError("bergman_norm: analytic radius must be >= 1");
  return bergman_norm_from_taylor<Real>(f.taylor(), f.sample_count(), p, alpha, radial_nodes);
}

/// Bergman norm of raw boundary samples of an analytic function.
template <typename Real>
Real bergman_norm(const ComplexVector<Real>& samples, double p, double alpha, int radial_nodes = 64) {
  const Eigen::Index m = samples.size();
  ComplexVector<Real> taylor = detail::spectrum<Real>(samples).head(m / 2);
  return bergman_norm_from_taylor<Real>(taylor, m, p, alpha, radial_nodes);
}

template <typename Real>
Real norm(const ComplexVector<Real>& samples, const NormSpec& spec) {
  switch (spec.kind) {
    case NormKind::sup: return sup_norm(samples);
    case NormKind::hardy: return hardy_norm(samples, spec.p);
    case NormKind::bergman: return bergman_norm<Real>(samples, spec.p, spec.alpha, spec.radial_nodes);
  }
  return Real(0);
}

template <typename Real>
Real norm(const BoundaryFunction<Real>& f, const NormSpec& spec) {
  if (spec.kind == NormKind::bergman) return bergman_norm(f, spec.p, spec.alpha, spec.radial_nodes);
  return norm<Real>(f.samples(), spec);
}

/// C_0 for ||f||_X <= C_0 ||f||_inf; 1 for every implemented space.
inline constexpr double embedding_constant(const NormSpec&) { return 1.0; }

/// Relative slack for embedding comparisons.
inline constexpr double kEmbeddingSlack = 1e-10;

template <typename Real>
struct EmbeddingCheck {
  Real norm_x;
  Real c0_times_sup;
  bool holds;
};

template <typename Real>
EmbeddingCheck<Real> embedding_check(const BoundaryFunction<Real>& f, const NormSpec& spec) {
  const Real x = norm(f, spec);
  const Real bound = Real(embedding_constant(spec)) * sup_norm(f);
  return {x, bound, x <= bound * (Real(1) + Real(kEmbeddingSlack))};
}

}  // namespace blaschke
