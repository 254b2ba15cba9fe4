#include <algorithm>
#include "blaschke/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "blaschke/schauder.hpp"
#include "blaschke/tmw.hpp"

namespace blaschke {
namespace {

using Vec = Eigen::VectorXcd;
using Outcome = std::pair<bool, std::string>;

// Largest harmonic-shifted index whose kernel tail |lambda_N|^(M/2) stays
// below roundoff at M samples (lambda_N = 1 - 1/(N+2), so N + 2 <= M/64).
std::size_t resolvable_index(Eigen::Index m) {
  return std::clamp<std::size_t>(std::size_t(m / 64), 3, 100) - 2;
}

Outcome within(double value, double tol) {
  std::ostringstream msg;
  msg << "max deviation " << value << " (tolerance " << tol << ")";
  return {value <= tol, msg.str()};
}

struct Corpus {
  explicit Corpus(Eigen::Index m) : m(m), rng(20240611) {}

  std::complex<double> random_complex(double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
  }
  DiskPointd random_point(double radius) { return DiskPointd(random_complex(radius)); }

  Vec random_coeffs(Eigen::Index n) {
    std::normal_distribution<double> g;
    Vec c(n);
    for (auto& x : c) x = {g(rng), g(rng)};
    return c;
  }

  FiniteBlaschkeProductd random_product(std::size_t degree, double radius) {
    std::vector<DiskPointd> zeros;
    for (std::size_t k = 0; k < degree; ++k) zeros.push_back(random_point(radius));
    return FiniteBlaschkeProductd(std::move(zeros));
  }

  std::vector<BoundaryFunctiond> functions() {
    std::vector<BoundaryFunctiond> out;
    out.push_back(from_taylor<double>(random_coeffs(33), m, entire_radius<double>()));
    out.push_back(cauchy_kernel(random_point(0.9), m));
    out.push_back(product_as_function(random_product(8, 0.9), m));
    out.push_back(constant_function<double>(2.5, m));
    return out;
  }

  Eigen::Index m;
  std::mt19937_64 rng;
};

struct Invariant {
  const char* module;
  const char* name;
  std::function<Outcome(Corpus&)> check;
};

std::vector<Invariant> invariants() {
  std::vector<Invariant> list;

  list.push_back({"fnspace", "taylor round trip", [](Corpus& c) {
    const Vec coeffs = c.random_coeffs(33);
    const auto f = from_taylor<double>(coeffs, c.m, entire_radius<double>());
    const Vec back = detail::spectrum<double>(f.samples()).head(coeffs.size());
    return within((back - coeffs).cwiseAbs().maxCoeff() / coeffs.cwiseAbs().maxCoeff(), 1e-12);
  }});
  list.push_back({"fnspace", "riesz projection idempotent", [](Corpus& c) {
    const Vec s = c.random_coeffs(c.m);
    const auto once = riesz_project<double>(s);
    const auto twice = riesz_project<double>(once.samples());
    return within((once.taylor() - twice.taylor()).cwiseAbs().maxCoeff(), 1e-14 * sup_norm(s));
  }});
  list.push_back({"fnspace", "riesz projection self-adjoint", [](Corpus& c) {
    const Vec f = c.random_coeffs(c.m), g = c.random_coeffs(c.m);
    const auto lhs = inner_product(riesz_project<double>(f).samples(), g);
    const auto rhs = inner_product(f, riesz_project<double>(g).samples());
    return within(std::abs(lhs - rhs), 1e-12);
  }});
  list.push_back({"fnspace", "dilation pairing symmetry", [](Corpus& c) {
    const auto f = cauchy_kernel(c.random_point(0.8), c.m);
    const auto g = from_taylor<double>(c.random_coeffs(20), c.m, entire_radius<double>());
    const auto lhs = inner_product(dilate(f, 0.7), g);
    const auto rhs = inner_product(f, dilate(g, 0.7));
    return within(std::abs(lhs - rhs), 1e-10);
  }});
  list.push_back({"fnspace", "evaluation matches Cauchy pairing", [](Corpus& c) {
    double worst = 0;
    for (const auto& f : c.functions()) {
      for (int k = 0; k < 10; ++k) {
        const auto z = c.random_point(0.95);
        const Vec kernel = kernel_samples(z, c.m);
        worst = std::max(worst, std::abs(eval_inside(f, z) - inner_product(f.samples(), kernel)));
      }
    }
    return within(worst, 1e-10);
  }});

  list.push_back({"blaschke", "unimodular on the circle", [](Corpus& c) {
    const auto b = c.random_product(12, 0.95);
    return within((b.boundary_samples(c.m).cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-12);
  }});
  list.push_back({"blaschke", "kernel-factor identity", [](Corpus& c) {
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      const auto lambda = c.random_point(0.99);
      const auto z = k % 2 ? c.random_complex(1.0) : std::polar(1.0, double(k));
      const auto lhs = (1.0 - std::norm(lambda.value())) / (1.0 - lambda.conj() * z) +
                       lambda.conj() * blaschke_factor(lambda, z);
      worst = std::max(worst, std::abs(lhs - 1.0));
    }
    return within(worst, 1e-13);
  }});
  list.push_back({"blaschke", "multiplicativity", [](Corpus& c) {
    const auto b1 = c.random_product(4, 0.9), b2 = c.random_product(5, 0.9);
    auto zeros = b1.zeros();
    zeros.insert(zeros.end(), b2.zeros().begin(), b2.zeros().end());
    const FiniteBlaschkeProductd both(zeros);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const auto z = c.random_complex(1.0);
      worst = std::max(worst, std::abs(both(z) - b1(z) * b2(z)));
    }
    return within(worst, 1e-14);
  }});
  list.push_back({"blaschke", "sampled product agrees with direct evaluation", [](Corpus& c) {
    const auto b = c.random_product(std::size_t(std::min<Eigen::Index>(64, c.m / 4)), 0.9);
    const auto f = product_as_function(b, c.m);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const auto z = c.random_point(0.99);
      worst = std::max(worst, std::abs(eval_inside(f, z) - b(z.value())));
    }
    return within(worst, 1e-9);
  }});

  list.push_back({"toeplitz", "zero-extraction reconstruction", [](Corpus& c) {
    double worst = 0;
    for (const auto& f : c.functions()) {
      const auto lambda = c.random_point(0.9);
      const Vec rebuilt = (1.0 - std::norm(lambda.value())) * eval_inside(f, lambda) * kernel_samples(lambda, c.m) +
                          factor_samples(lambda, c.m).cwiseProduct(toeplitz_factor_apply(f, lambda).samples());
      worst = std::max(worst, (f.samples() - rebuilt).cwiseAbs().maxCoeff() / sup_norm(f));
    }
    return within(worst, 1e-10);
  }});
  list.push_back({"toeplitz", "kernels are eigenvectors", [](Corpus& c) {
    const auto alpha = c.random_point(0.9);
    const auto b = c.random_product(6, 0.9);
    const auto k = cauchy_kernel(alpha, c.m);
    const Vec expected = std::conj(b(alpha.value())) * k.samples();
    return within((toeplitz_product_apply(k, b).samples() - expected).cwiseAbs().maxCoeff(), 1e-9);
  }});
  list.push_back({"toeplitz", "recurrence agrees with projection", [](Corpus& c) {
    double worst = 0;
    for (const auto& f : c.functions()) {
      const auto lambda = c.random_point(0.9);
      const auto direct = toeplitz_factor_apply(f, lambda);
      const auto projected = toeplitz_general_apply(f, Vec(factor_samples(lambda, c.m)));
      worst = std::max(worst, (direct.samples() - projected.value.samples()).cwiseAbs().maxCoeff());
    }
    return within(worst, 1e-9);
  }});
  list.push_back({"toeplitz", "factor operators commute", [](Corpus& c) {
    const auto f = c.functions().front();
    const auto l1 = c.random_point(0.9), l2 = c.random_point(0.9);
    const auto a = toeplitz_factor_apply(toeplitz_factor_apply(f, l1), l2);
    const auto b = toeplitz_factor_apply(toeplitz_factor_apply(f, l2), l1);
    return within((a.samples() - b.samples()).cwiseAbs().maxCoeff() / sup_norm(f), 1e-10);
  }});
  list.push_back({"toeplitz", "sup norm bound and grid equality", [](Corpus& c) {
    double worst = 0;
    bool holds = true;
    for (const auto& f : c.functions()) {
      const auto check = factor_sup_bound_check(f, c.random_point(0.9));
      holds = holds && check.holds;
      worst = std::max(worst, check.grid_equality_gap / std::max(check.lhs, 1e-300));
    }
    auto out = within(worst, 1e-12);
    out.first = out.first && holds;
    return out;
  }});

  list.push_back({"schauder", "telescoping identity", [](Corpus& c) {
    const auto seq = make_sequence("harmonic-shifted", 30);
    double worst = 0;
    for (const auto& f : c.functions()) {
      const auto r = expansion_coefficients(f, seq, 30);
      worst = std::max(worst, r.remainder_identity_gap / sup_norm(f));
    }
    return within(worst, 1e-9);
  }});
  list.push_back({"schauder", "exact on the span", [](Corpus& c) {
    const auto seq = make_sequence("harmonic", 12);
    const Vec gamma = c.random_coeffs(6);
    Vec samples = Vec::Zero(c.m);
    for (Eigen::Index k = 0; k < gamma.size(); ++k) samples += gamma[k] * seq.product(std::size_t(k)).boundary_samples(c.m);
    const auto f = from_samples<double>(samples, seq.product(6).analytic_radius());
    const auto r = expansion_coefficients(f, seq, 12);
    Vec expected = Vec::Zero(12);
    expected.head(6) = gamma;
    double tail = 0;
    for (std::size_t n = 6; n < r.residual_sup_norms.size(); ++n) tail = std::max(tail, r.residual_sup_norms[n]);
    return within(std::max((r.coefficients - expected).cwiseAbs().maxCoeff(), tail), 1e-9);
  }});
  list.push_back({"schauder", "uniqueness via triangular system", [](Corpus& c) {
    const auto seq = make_sequence("harmonic", 8);
    const Vec gamma = c.random_coeffs(8);
    Vec values(8);
    for (std::size_t i = 1; i <= 8; ++i) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < 8; ++k) s += gamma[Eigen::Index(k)] * seq.product(k)(seq.lambda(i).value());
      values[Eigen::Index(i - 1)] = s;
    }
    return within((triangular_reconstruct(values, seq).coefficients - gamma).cwiseAbs().maxCoeff(), 1e-9);
  }});
  list.push_back({"schauder", "norm domination", [](Corpus& c) {
    const auto seq = make_sequence("harmonic-shifted", 20);
    bool holds = true;
    for (const auto& f : c.functions()) {
      const auto t = convergence_study(f, seq, 20,
                                       {NormSpec::hardy(1), NormSpec::hardy(2), NormSpec::bergman(2, 0), NormSpec::bergman(1, 0.5)});
      holds = holds && t.domination_holds;
    }
    return Outcome{holds, holds ? "every X column <= sup column" : "domination violated"};
  }});
  list.push_back({"schauder", "kernel remainder bound", [](Corpus& c) {
    const auto seq = make_sequence("harmonic-shifted", 40);
    const DiskPointd alpha(0.3);
    const auto r = expansion_coefficients(cauchy_kernel(alpha, c.m), seq, 40);
    const auto decay = pointwise_decay_check(seq, alpha, 40);
    double excess = -1;
    for (std::size_t n = 1; n <= 40; ++n) {
      excess = std::max(excess, r.residual_sup_norms[n - 1] - (decay[n - 1] + decay[n]) / 0.7);
    }
    std::ostringstream msg;
    msg << "largest residual minus bound " << excess;
    return Outcome{excess <= 1e-9, msg.str()};
  }});

  list.push_back({"tmw", "orthonormal system", [](Corpus& c) {
    const auto seq = make_sequence("harmonic", 12);
    const Eigen::MatrixXcd g = gram_matrix(seq, 12, c.m);
    return within((g - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-8);
  }});
  list.push_back({"tmw", "parseval on the span", [](Corpus& c) {
    const auto seq = make_sequence("harmonic", 10);
    const Vec gamma = c.random_coeffs(10);
    Vec f = Vec::Zero(c.m);
    for (std::size_t n = 1; n <= 10; ++n) f += gamma[Eigen::Index(n - 1)] * tmw_element(seq, n, c.m).function.samples();
    const double lhs = f.squaredNorm() / double(c.m);
    return within(std::abs(lhs - gamma.squaredNorm()) / gamma.squaredNorm(), 1e-7);
  }});
  list.push_back({"tmw", "functional norm closed form", [](Corpus& c) {
    const std::size_t top = resolvable_index(c.m);
    const auto seq = make_sequence("harmonic-shifted", top);
    double worst = 0;
    for (std::size_t n : {std::size_t(1), top / 4, top / 2, top}) {
      const auto fn = functional_norm(seq, std::max<std::size_t>(n, 1), c.m);
      worst = std::max(worst, std::abs(fn.quadrature - fn.closed_form) / fn.closed_form);
    }
    return within(worst, 1e-8);
  }});
  list.push_back({"tmw", "lacunary witness values", [](Corpus& c) {
    std::size_t kmax = 2;
    while (kmax * 2 <= std::min<std::size_t>(resolvable_index(c.m), 32)) kmax *= 2;
    const auto seq = make_sequence("harmonic-shifted", kmax);
    const auto w = lacunary_witness(seq, kmax, 0.25, lacunary_support("pow2", kmax), c.m);
    auto out = within(w.max_relative_error(), 1e-7);
    out.first = out.first && w.strictly_increasing();
    return out;
  }});

  list.push_back({"norms", "hardy norm monotone in p", [](Corpus& c) {
    bool holds = true;
    for (const auto& f : c.functions()) {
      double previous = 0;
      for (double p : {1.0, 1.5, 2.0, 3.0, 6.0}) {
        const double value = hardy_norm(f, p);
        holds = holds && value >= previous - 1e-10;
        previous = value;
      }
    }
    return Outcome{holds, holds ? "monotone" : "not monotone"};
  }});
  list.push_back({"norms", "embedding constant one", [](Corpus& c) {
    bool holds = true;
    for (const auto& f : c.functions()) {
      for (const auto& spec : {NormSpec::hardy(1), NormSpec::hardy(4), NormSpec::bergman(2, 0), NormSpec::bergman(3, -0.5)}) {
        holds = holds && embedding_check(f, spec).holds;
      }
    }
    return Outcome{holds, holds ? "all norms <= sup" : "embedding violated"};
  }});
  list.push_back({"norms", "kernel H2 norm", [](Corpus& c) {
    double worst = 0;
    for (double r : {0.0, 0.3, 0.8, 0.95}) {
      const DiskPointd lambda(std::polar(r, 1.0));
      worst = std::max(worst, std::abs(hardy_norm(cauchy_kernel(lambda, c.m), 2.0) - 1.0 / std::sqrt(1.0 - r * r)));
    }
    return within(worst, 1e-8);
  }});
  list.push_back({"norms", "bergman radial quadrature converged", [](Corpus& c) {
    const auto f = from_taylor<double>(c.random_coeffs(33), c.m, entire_radius<double>());
    double worst = 0;
    for (auto [p, alpha] : {std::pair{2.0, 0.0}, std::pair{2.0, 0.5}, std::pair{4.0, -0.5}}) {
      worst = std::max(worst, std::abs(bergman_norm(f, p, alpha, 64) - bergman_norm(f, p, alpha, 128)));
    }
    return within(worst, 1e-9);
  }});
  return list;
}

}  // namespace

std::vector<InvariantResult> run_selftest(Eigen::Index sample_count, std::string_view module_filter) {
  std::vector<InvariantResult> results;
  for (const auto& inv : invariants()) {
    if (!module_filter.empty() && module_filter != inv.module) continue;
    Corpus corpus(sample_count);
    InvariantResult r{inv.module, inv.name, false, {}};
    try {
      auto [passed, detail] = inv.check(corpus);
      r.passed = passed;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace blaschke
