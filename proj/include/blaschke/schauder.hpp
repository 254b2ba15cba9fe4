#pragma once

// Expansion of f in the finite Blaschke products B_0 = 1, B_n = b_1 ... b_n of
// a non-Blaschke sequence. With h_n = T_{conj(B_n)} f and v_n = h_{n-1}(lambda_n):
//
//     c_0 = v_1,   c_n = v_{n+1} - conj(lambda_n) v_n,
//     R_N f = (h_N - conj(lambda_N) v_N) B_N = f - sum_{n<N} c_n B_n.

#include <optional>
#include <string>
#include <vector>

#include "blaschke/norms.hpp"
#include "blaschke/products.hpp"
#include "blaschke/toeplitz.hpp"

namespace blaschke {

template <typename Real = double>
struct ExpansionResult {
  PointSequence<Real> sequence;
  /// c_0 .. c_{N-1}.
  ComplexVector<Real> coefficients;
  /// ||R_n f||_inf from the closed form, n = 1 .. N.
  std::vector<Real> residual_sup_norms;
  /// max over n <= N and the grid of |f - S_n f - R_n f|.
  Real remainder_identity_gap = 0;
  Eigen::Index sample_count = 0;
  std::string function;
};

using ExpansionResultd = ExpansionResult<double>;

namespace detail {

template <typename Real>
void require_expandable(const BoundaryFunction<Real>& f, const PointSequence<Real>& seq, std::size_t n) {
  if (seq.kind != SequenceKind::NonBlaschke) {
    throw PreconditionError("expansion requires a non-Blaschke sequence, got " + seq.generator_tag);
  }
  if (n > seq.size()) {
    throw PreconditionError("expansion of " + std::to_string(n) + " terms needs " + std::to_string(n) +
                            " sequence points, prefix has " + std::to_string(seq.size()));
  }
  require_sample_count(f.sample_count());
}

/// Grid quantities available after step n of the expansion.
template <typename Real>
struct ExpansionStep {
  std::size_t n;
  Complex<Real> coefficient;            // c_{n-1}
  const ComplexVector<Real>& remainder; // R_n f on the grid
  const ComplexVector<Real>& partial;   // S_n f on the grid
  const BoundaryFunction<Real>& iterate;  // h_n
};

/// Runs the Toeplitz chain h_0 = f, h_n = T_{conj(b_{lambda_n})} h_{n-1} and
/// calls visit(step) for n = 1 .. n_max.
template <typename Real, typename Visitor>
void run_expansion(const BoundaryFunction<Real>& f, const PointSequence<Real>& seq, std::size_t n_max, Visitor&& visit) {
  const Eigen::Index m = f.sample_count();
  BoundaryFunction<Real> h = f;
  ComplexVector<Real> product = ComplexVector<Real>::Ones(m);  // B_{n-1}, then B_n
  ComplexVector<Real> partial = ComplexVector<Real>::Zero(m);
  ComplexVector<Real> remainder(m);
  Complex<Real> previous_value(0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& lambda = seq.lambda(n);
    const Complex<Real> value = eval_inside(h, lambda);
    const Complex<Real> c = n == 1 ? value : value - seq.lambda(n - 1).conj() * previous_value;
    partial += c * product;
    try {
      h = toeplitz_factor_apply(h, lambda);
    } catch (const AnalyticityError& e) {
      throw AnalyticityError("expansion step " + std::to_string(n) + ": " + e.what(), e.negative_level(), e.scale(),
                             int(n));
    }
    product.array() *= factor_samples(lambda, m).array();
    remainder = (h.samples().array() - lambda.conj() * value) * product.array();
    visit(ExpansionStep<Real>{n, c, remainder, partial, h});
    previous_value = value;
  }
}

}  // namespace detail

template <typename Real>
ExpansionResult<Real> expansion_coefficients(const BoundaryFunction<Real>& f, const PointSequence<Real>& seq,
                                             std::size_t n_terms, std::string description = {}) {
  detail::require_expandable(f, seq, n_terms);
  ExpansionResult<Real> result;
  result.sequence = seq;
  result.coefficients.resize(Eigen::Index(n_terms));
  result.sample_count = f.sample_count();
  result.function = std::move(description);
  detail::run_expansion(f, seq, n_terms, [&](const detail::ExpansionStep<Real>& step) {
    result.coefficients[Eigen::Index(step.n - 1)] = step.coefficient;
    result.residual_sup_norms.push_back(sup_norm(step.remainder));
    const Real gap = (f.samples() - step.partial - step.remainder).cwiseAbs().maxCoeff();
    result.remainder_identity_gap = std::max(result.remainder_identity_gap, gap);
  });
  return result;
}

/// S_n f = sum_{k<n} c_k B_k.
template <typename Real>
BoundaryFunction<Real> partial_sum(const ExpansionResult<Real>& result, std::size_t n, Eigen::Index sample_count) {
  if (n > std::size_t(result.coefficients.size())) throw PreconditionError("partial_sum: n exceeds coefficient count");
  require_sample_count(sample_count);
  ComplexVector<Real> sum = ComplexVector<Real>::Zero(sample_count);
  ComplexVector<Real> product = ComplexVector<Real>::Ones(sample_count);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) product.array() *= factor_samples(result.sequence.lambda(k), sample_count).array();
    sum += result.coefficients[Eigen::Index(k)] * product;
  }
  const Real radius = n <= 1 ? entire_radius<Real>() : result.sequence.product(n - 1).analytic_radius();
  return from_samples<Real>(sum, radius);
}

/// R_N f = (T_{conj(B_N)} f - conj(lambda_N) (T_{conj(B_{N-1})} f)(lambda_N)) B_N.
template <typename Real>
BoundaryFunction<Real> remainder_closed_form(const BoundaryFunction<Real>& f, const PointSequence<Real>& seq,
                                             std::size_t n) {
  if (n < 1) throw PreconditionError("remainder_closed_form: N must be >= 1");
  if (n > seq.size()) throw PreconditionError("remainder_closed_form: N exceeds prefix length");
  const auto previous = toeplitz_product_apply(f, seq.product(n - 1));
  const Complex<Real> value = eval_inside(previous, seq.lambda(n));
  const auto current = toeplitz_factor_apply(previous, seq.lambda(n));
  const ComplexVector<Real> samples =
      (current.samples().array() - seq.lambda(n).conj() * value) * seq.product(n).boundary_samples(f.sample_count()).array();
  return from_samples<Real>(samples, std::min(current.analytic_radius(), seq.product(n).analytic_radius()));
}

template <typename Real>
struct TriangularSolution {
  ComplexVector<Real> coefficients;
  /// min_j |B_{j-1}(lambda_j)|; shrinks as sequence points crowd together.
  Real min_diagonal;
};

/// Solves sum_{n<k} a_n B_n(lambda_i) = f(lambda_i), i = 1..k, by forward
/// substitution on the lower-triangular system.
template <typename Real>
TriangularSolution<Real> triangular_reconstruct(const ComplexVector<Real>& values, const PointSequence<Real>& seq) {
  const Eigen::Index k = values.size();
  if (std::size_t(k) > seq.size()) throw PreconditionError("triangular_reconstruct: more values than sequence points");
  using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Complex<Real> point = seq.points[std::size_t(i)].value();
    Complex<Real> product(1);
    for (Eigen::Index j = 0; j <= i; ++j) {
      if (j > 0) product *= blaschke_factor(seq.points[std::size_t(j - 1)], point);
      a(i, j) = product;
    }
  }
  const Real min_diagonal = k ? Real(a.diagonal().cwiseAbs().minCoeff()) : Real(1);
  if (min_diagonal < Real(1e-12)) {
    throw PreconditionError("triangular_reconstruct: near-singular diagonal (min |B_{j-1}(lambda_j)| = " +
                            std::to_string(double(min_diagonal)) + "), sequence points nearly coincide");
  }
  return {a.template triangularView<Eigen::Lower>().solve(values), min_diagonal};
}

template <typename Real = double>
struct ConvergenceTable {
  /// Column specs; the first is always the sup norm.
  std::vector<NormSpec> norms;
  /// Row n holds ||R_{n+1} f||_X for each column.
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> values;
  /// (|B_{n-1}(alpha)| + |B_n(alpha)|) / (1 - |alpha|) when f = k_alpha.
  std::optional<std::vector<Real>> kernel_bound;
  /// Every X column <= C_0 * sup column (+ 1e-10 ||f||_inf).
  bool domination_holds = true;
  Real function_sup = 0;

  std::size_t rows() const { return std::size_t(values.rows()); }
};

template <typename Real>
ConvergenceTable<Real> convergence_study(const BoundaryFunction<Real>& f, const PointSequence<Real>& seq,
                                         std::size_t n_max, std::vector<NormSpec> norms,
                                         std::optional<DiskPoint<Real>> kernel_alpha = std::nullopt) {
  detail::require_expandable(f, seq, n_max);
  ConvergenceTable<Real> table;
  if (norms.empty() || norms.front().kind != NormKind::sup) {
    std::erase_if(norms, [](const NormSpec& s) { return s.kind == NormKind::sup; });
    norms.insert(norms.begin(), NormSpec::sup());
  }
  table.norms = std::move(norms);
  table.values.resize(Eigen::Index(n_max), Eigen::Index(table.norms.size()));
  table.function_sup = sup_norm(f);
  detail::run_expansion(f, seq, n_max, [&](const detail::ExpansionStep<Real>& step) {
    const Eigen::Index row = Eigen::Index(step.n - 1);
    for (std::size_t j = 0; j < table.norms.size(); ++j) {
      table.values(row, Eigen::Index(j)) = norm<Real>(step.remainder, table.norms[j]);
    }
  });
  const Real slack = Real(kEmbeddingSlack) * table.function_sup;
  for (std::size_t j = 1; j < table.norms.size(); ++j) {
    const Real c0 = Real(embedding_constant(table.norms[j]));
    if (((table.values.col(Eigen::Index(j)) - c0 * table.values.col(0)).array() > slack).any()) {
      table.domination_holds = false;
    }
  }
  if (kernel_alpha) {
    const auto decay = pointwise_decay_check(seq, *kernel_alpha, n_max);
    std::vector<Real> bound;
    for (std::size_t n = 1; n <= n_max; ++n) {
      bound.push_back((decay[n - 1] + decay[n]) / (Real(1) - kernel_alpha->modulus()));
    }
    table.kernel_bound = std::move(bound);
  }
  return table;
}

}  // namespace blaschke
