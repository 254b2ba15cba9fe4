#pragma once

// Reference computations written without the library: direct sums, naive DFT,
// closed forms. Slow on purpose.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace oracle {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;

inline cd root(Eigen::Index j, Eigen::Index m) {
  return std::polar(1.0, 2 * std::numbers::pi * double(j) / double(m));
}

inline Vec grid(Eigen::Index m) {
  Vec z(m);
  for (Eigen::Index j = 0; j < m; ++j) z[j] = root(j, m);
  return z;
}

/// sum_k a_k z^k with explicit powers.
inline cd poly(const Vec& a, cd z) {
  cd out = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) out += a[k] * std::pow(z, double(k));
  return out;
}

inline cd factor(cd lambda, cd z) { return (lambda - z) / (1.0 - std::conj(lambda) * z); }

inline cd product(const std::vector<cd>& zeros, cd z) {
  cd out = 1;
  for (cd l : zeros) out *= factor(l, z);
  return out;
}

inline cd kernel(cd lambda, cd z) { return 1.0 / (1.0 - std::conj(lambda) * z); }

/// X_k = (1/M) sum_j x_j e^{-2 pi i jk / M}, O(M^2).
inline Vec naive_dft(const Vec& x) {
  const Eigen::Index m = x.size();
  Vec out = Vec::Zero(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index j = 0; j < m; ++j) out[k] += x[j] * std::conj(root((j * k) % m, m));
    out[k] /= double(m);
  }
  return out;
}

/// Nonnegative-frequency part of sampled boundary data, resampled on the grid.
inline Vec project(const Vec& samples) {
  const Eigen::Index m = samples.size();
  const Vec c = naive_dft(samples);
  Vec out = Vec::Zero(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m / 2; ++k) out[j] += c[k] * root((j * k) % m, m);
  }
  return out;
}

template <typename F>
Vec sample(F&& f, Eigen::Index m) {
  Vec out(m);
  for (Eigen::Index j = 0; j < m; ++j) out[j] = f(root(j, m));
  return out;
}

/// Midpoint rule for (mean |f|^p)^{1/p} on the circle of radius r.
template <typename F>
double circle_mean(F&& f, double p, double r, int n) {
  double acc = 0;
  for (int j = 0; j < n; ++j) acc += std::pow(std::abs(f(std::polar(r, 2 * std::numbers::pi * (j + 0.5) / n))), p);
  return std::pow(acc / n, 1.0 / p);
}

/// ||f||_{A^2_alpha}^2 = sum |a_k|^2 k! Gamma(alpha+2) / Gamma(k+alpha+2) for
/// the normalized weight (alpha+1)(1-|z|^2)^alpha dA/pi.
inline double bergman2_closed(const Vec& a, double alpha) {
  double acc = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double w = std::exp(std::lgamma(double(k) + 1) + std::lgamma(alpha + 2) - std::lgamma(double(k) + alpha + 2));
    acc += std::norm(a[k]) * w;
  }
  return std::sqrt(acc);
}

/// Cauchy product of coefficient lists.
inline Vec multiply(const Vec& a, const Vec& b) {
  Vec out = Vec::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  cd point(double radius) { return std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 2 * std::numbers::pi)); }
  Vec coeffs(Eigen::Index n) {
    std::normal_distribution<double> g;
    Vec c(n);
    for (auto& x : c) x = {g(engine), g(engine)};
    return c;
  }
  std::vector<cd> points(std::size_t n, double radius) {
    std::vector<cd> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(point(radius));
    return out;
  }
  std::mt19937_64 engine;
};

inline double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle
