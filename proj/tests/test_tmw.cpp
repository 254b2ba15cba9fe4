#include <doctest.h>

#include "blaschke/blaschke.hpp"
#include "oracles.hpp"

using namespace blaschke;
using oracle::cd;
using oracle::Vec;

TEST_SUITE("tmw") {

TEST_CASE("elements match the defining formula") {
  const auto seq = make_sequence<double>("harmonic", 6);
  std::vector<cd> zeros;
  for (const auto& p : seq.points) zeros.push_back(p.value());
  for (std::size_t n = 1; n <= 6; ++n) {
    const cd l = zeros[n - 1];
    const Vec expected = oracle::sample(
        [&](cd z) {
          return std::sqrt(1 - std::norm(l)) * oracle::product({zeros.begin(), zeros.begin() + long(n - 1)}, z) *
                 oracle::kernel(l, z);
        },
        1024);
    CHECK(oracle::max_abs(tmw_element(seq, n, 1024).function.samples() - expected) < 1e-12);
  }
}

TEST_CASE("gram matrix is the identity") {
  for (const char* spec : {"harmonic", "harmonic-shifted"}) {
    const auto seq = make_sequence<double>(spec, 12);
    const Eigen::MatrixXcd g = gram_matrix(seq, 12, 4096);
    CHECK((g - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("functional norm at a zero point is one") {
  const auto seq = make_sequence<double>("explicit:[0, 0.5]", 0);
  const auto fn = functional_norm(seq, 1, 64);
  CHECK(fn.quadrature == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fn.closed_form == 1.0);
}

TEST_CASE("functional norm matches the closed form") {
  const auto seq = make_sequence<double>("harmonic-shifted", 98);
  for (std::size_t n : {1, 10, 50, 98}) {
    const auto fn = functional_norm(seq, n, 8192);
    const double r = 1.0 - 1.0 / double(n + 2);
    CHECK(fn.closed_form == doctest::Approx(1 / std::sqrt(1 - r * r)).epsilon(1e-14));
    CHECK(std::abs(fn.quadrature - fn.closed_form) / fn.closed_form < 1e-8);
  }
}

TEST_CASE("lacunary supports") {
  CHECK(lacunary_support("pow2", 32) == std::vector<std::size_t>{2, 4, 8, 16, 32});
  CHECK(lacunary_support("pow2", 40) == std::vector<std::size_t>{2, 4, 8, 16, 32});
  CHECK(lacunary_support("list:3,5,9", 10) == std::vector<std::size_t>{3, 5, 9});
  CHECK_THROWS_AS(lacunary_support("list:3,12", 10), PreconditionError);
  CHECK(lacunary_support("list:5,3", 10) == std::vector<std::size_t>{3, 5});
  CHECK_THROWS_AS(lacunary_support("list:3,3", 10), PreconditionError);
  CHECK_THROWS_AS(lacunary_support("fibonacci", 10), PreconditionError);
}

TEST_CASE("witness values grow like c_N over the kernel norm") {
  const auto seq = make_sequence<double>("harmonic-shifted", 32);
  const auto support = lacunary_support("pow2", 32);
  const auto w = lacunary_witness(seq, 32, 0.25, support, 4096);
  REQUIRE(w.values.size() == 5);
  double l2 = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double n = double(support[i]);
    const double r = 1 - 1 / (n + 2);
    const double c = std::pow(n, -0.25);
    l2 += c * c;
    CHECK(w.values[i] == doctest::Approx(c / std::sqrt(1 - r * r)).epsilon(1e-7));
    CHECK(w.l2_partial_sums[i] == doctest::Approx(l2).epsilon(1e-14));
  }
  CHECK(w.strictly_increasing());
  CHECK(w.l2_partial_sums.back() <= 2.0);
  // f has unit-coefficient expansion in an orthonormal system: ||f||_2^2 = sum c^2.
  CHECK(hardy_norm(w.f, 2.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-10));
}

TEST_CASE("under-resolved witness reports degradation") {
  // B_31 has 31 poles clustered just outside the circle; 2048 samples cannot hold it.
  const auto seq = make_sequence<double>("harmonic-shifted", 32);
  CHECK_THROWS_AS(lacunary_witness(seq, 32, 0.25, lacunary_support("pow2", 32), 2048), AnalyticityError);
}

TEST_CASE("witness needs a sequence approaching the circle") {
  const auto ex = make_sequence<double>("explicit:[0.1,0.2,0.3,0.4]", 0);
  CHECK_THROWS_AS(lacunary_witness(ex, 4, 0.25, lacunary_support("pow2", 4), 256), PreconditionError);
  const auto geo = make_sequence<double>("geometric:0.5", 8);
  CHECK_THROWS_AS(lacunary_witness(geo, 8, 0.25, lacunary_support("pow2", 8), 256), PreconditionError);
}

}  // TEST_SUITE
