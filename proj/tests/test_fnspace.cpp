#include <doctest.h>

#include "blaschke/blaschke.hpp"
#include "oracles.hpp"

using namespace blaschke;
using oracle::cd;
using oracle::Vec;

TEST_SUITE("fnspace") {

TEST_CASE("sample count must be a power of two of at least 16") {
  CHECK_THROWS_AS(require_sample_count(8), PreconditionError);
  CHECK_THROWS_AS(require_sample_count(24), PreconditionError);
  CHECK_NOTHROW(require_sample_count(16));
  CHECK_NOTHROW(require_sample_count(4096));
}

TEST_CASE("disk points stay inside the guard") {
  CHECK_NOTHROW(DiskPointd(0.0));
  CHECK_NOTHROW(DiskPointd(cd(0.6, -0.7)));
  CHECK_THROWS_AS(DiskPointd(1.0), PreconditionError);
  CHECK_THROWS_AS(DiskPointd(cd(0.0, 1.0 - 1e-9)), PreconditionError);
  CHECK_THROWS_AS(DiskPointd(cd(std::nan(""), 0.0)), PreconditionError);
  CHECK(DiskPointd(0.3, 0.4).modulus() == doctest::Approx(0.5));
}

TEST_CASE("taylor synthesis matches direct evaluation on the grid") {
  oracle::Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const Vec a = rng.coeffs(17);
    const auto f = from_taylor<double>(a, 64, entire_radius<double>());
    const Vec expected = oracle::sample([&](cd z) { return oracle::poly(a, z); }, 64);
    CHECK(oracle::max_abs(f.samples() - expected) < 1e-12);
    CHECK(f.taylor().size() == 32);
    CHECK(f.coefficient_floor() == 0.0);
  }
}

TEST_CASE("spectrum agrees with a naive DFT") {
  oracle::Rng rng(2);
  const Vec x = rng.coeffs(64);
  CHECK(oracle::max_abs(detail::spectrum<double>(x) - oracle::naive_dft(x)) < 1e-13);
}

TEST_CASE("from_taylor rejects bad input") {
  const Vec empty(0);
  CHECK_THROWS_AS(from_taylor<double>(empty, 64, 2.0), PreconditionError);
  CHECK_THROWS_AS(from_taylor<double>(Vec::Ones(33), 64, 2.0), PreconditionError);
  CHECK_THROWS_AS(from_taylor<double>(Vec::Ones(3), 64, 0.5), PreconditionError);
  CHECK_THROWS_AS(from_taylor<double>(Vec::Ones(3), 48, 2.0), PreconditionError);
  CHECK_NOTHROW(from_taylor<double>(Vec::Ones(32), 64, 1.0));
}

TEST_CASE("samples round trip through the taylor representation") {
  oracle::Rng rng(3);
  const Vec a = rng.coeffs(20);
  const Vec s = oracle::sample([&](cd z) { return oracle::poly(a, z); }, 128);
  const auto f = from_samples<double>(s, 5.0);
  CHECK(oracle::max_abs(f.taylor().head(20) - a) < 1e-13);
  CHECK(oracle::max_abs(f.taylor().tail(44)) < 1e-13);
  CHECK(f.analytic_radius() == 5.0);
  CHECK(f.coefficient_floor() > 0.0);
}

TEST_CASE("conjugate-analytic samples are rejected") {
  const Vec s = oracle::sample([](cd z) { return z + std::conj(z); }, 64);
  try {
    (void)from_samples<double>(s, 1.0);
    FAIL("expected AnalyticityError");
  } catch (const AnalyticityError& e) {
    CHECK(e.negative_level() == doctest::Approx(1.0));
    CHECK(e.scale() == doctest::Approx(2.0));
  }
}

TEST_CASE("interior evaluation matches the power series") {
  oracle::Rng rng(4);
  const Vec a = rng.coeffs(12);
  const auto f = from_taylor<double>(a, 64, entire_radius<double>());
  for (int k = 0; k < 20; ++k) {
    const cd z = rng.point(0.95);
    CHECK(std::abs(f(DiskPointd(z)) - oracle::poly(a, z)) < 1e-12);
  }
}

TEST_CASE("riesz projection keeps the analytic part") {
  const Vec s = oracle::sample([](cd z) { return 2.0 * z * z + 3.0 / z + std::conj(z) * 0.5; }, 64);
  const auto p = riesz_project<double>(s);
  const Vec expected = oracle::sample([](cd z) { return 2.0 * z * z; }, 64);
  CHECK(oracle::max_abs(p.samples() - expected) < 1e-13);
  CHECK(oracle::max_abs(p.samples() - oracle::project(s)) < 1e-12);
}

TEST_CASE("riesz projection is idempotent and self-adjoint (random data)") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec u = rng.coeffs(128);
    const Vec v = rng.coeffs(128);
    const auto pu = riesz_project<double>(u);
    CHECK(oracle::max_abs(riesz_project<double>(pu.samples()).samples() - pu.samples()) < 1e-13 * oracle::max_abs(u) * 10);
    const auto pv = riesz_project<double>(v);
    CHECK(std::abs(inner_product(pu.samples(), v) - inner_product(u, pv.samples())) < 1e-12);
  }
}

TEST_CASE("dilation scales coefficients and the analytic radius") {
  Vec a(3);
  a << 1.0, 2.0, 3.0;
  const auto f = from_taylor<double>(a, 32, 4.0);
  const auto g = dilate(f, 2.0);
  CHECK(std::abs(g.taylor()[1] - cd(4.0)) < 1e-14);
  CHECK(std::abs(g.taylor()[2] - cd(12.0)) < 1e-14);
  CHECK(g.analytic_radius() == doctest::Approx(2.0));
  CHECK(dilate(f, 0.5).analytic_radius() == doctest::Approx(8.0));
  CHECK_THROWS_AS(dilate(f, 4.5), PreconditionError);
  CHECK_THROWS_AS(dilate(f, 0.0), PreconditionError);
  const auto e = from_taylor<double>(a, 32, entire_radius<double>());
  CHECK(dilate(e, 3.0).analytic_radius() == entire_radius<double>());
}

TEST_CASE("dilating a kernel moves its pole") {
  const DiskPointd l(cd(0.3, 0.2));
  const auto k = cauchy_kernel(l, 256);
  const auto kr = dilate(k, 1.5);
  const Vec expected = oracle::sample([&](cd z) { return oracle::kernel(l.value(), 1.5 * z); }, 256);
  CHECK(oracle::max_abs(kr.samples() - expected) < 1e-12);
}

TEST_CASE("dilation composes: (f_r)_s = f_{rs}") {
  oracle::Rng rng(6);
  const auto f = from_taylor<double>(rng.coeffs(10), 64, 10.0);
  const auto a = dilate(dilate(f, 1.5), 0.8);
  const auto b = dilate(f, 1.2);
  CHECK(oracle::max_abs(a.samples() - b.samples()) < 1e-11);
}

TEST_CASE("pointwise products and quotients") {
  Vec a(2), b(3);
  a << 1.0, 0.5;
  b << 2.0, cd(0, 1), -0.25;
  const auto f = from_taylor<double>(a, 64, entire_radius<double>());
  const auto g = from_taylor<double>(b, 64, entire_radius<double>());
  const auto fg = f * g;
  const Vec ab = oracle::multiply(a, b);
  CHECK(oracle::max_abs(fg.taylor().head(ab.size()) - ab) < 1e-14);
  CHECK(fg.analytic_radius() == entire_radius<double>());
  const auto q = pointwise_combine(fg, f, CombineOp::div, std::optional<double>(2.0));
  CHECK(oracle::max_abs(q.samples() - g.samples()) < 1e-13);
  CHECK(q.analytic_radius() == 2.0);
  Vec zero_on_circle(2);
  zero_on_circle << 1.0, 1.0;
  const auto h = from_taylor<double>(zero_on_circle, 64, entire_radius<double>());
  CHECK_THROWS_AS(pointwise_combine(f, h, CombineOp::div), PreconditionError);
  CHECK_THROWS_AS(f + from_taylor<double>(a, 32, 2.0), PreconditionError);
}

TEST_CASE("inner product reproduces point values") {
  oracle::Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const cd l = rng.point(0.8), mu = rng.point(0.8);
    const auto kl = cauchy_kernel(DiskPointd(l), 256);
    const auto km = cauchy_kernel(DiskPointd(mu), 256);
    CHECK(std::abs(inner_product(kl, km) - oracle::kernel(l, mu)) < 1e-12);
  }
}

}  // TEST_SUITE
