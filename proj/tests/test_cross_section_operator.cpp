#include <doctest.h>

#include <cmath>
#include <numbers>
#include <functional>
#include <random>

#include "cone_spectra/cross_section_operator.hpp"
#include "cone_spectra/error.hpp"
#include "test_support.hpp"

using namespace cone_spectra;
using cone_spectra::testing::kind_of;
using std::numbers::pi;

namespace {

CurvatureProfile constant_profile(double length, double kappa, std::size_t n) {
  return {length, std::vector<double>(n, kappa), ProfileSource::Synthetic};
}

CurvatureProfile random_profile(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CurvatureProfile p{3.0, std::vector<double>(n)};
  for (auto& k : p.kappa) k = 1.0 + g(rng);
  return p;
}

}  // namespace

TEST_CASE("assembly") {
  const auto p = constant_profile(2.0, 3.0, 64);
  const auto m = assemble(p);
  const double h = 2.0 / 64;
  CHECK(m.h == doctest::Approx(h));
  CHECK(m.offdiag == doctest::Approx(-1 / (h * h)));
  CHECK(m.diag[5] == doctest::Approx(2 / (h * h) - 9.0 / 4));
  CHECK(assemble(p, PotentialSign::Repulsive).diag[5] == doctest::Approx(2 / (h * h) + 9.0 / 4));
  const auto d = m.dense();
  CHECK(d(0, 63) == m.offdiag);
  CHECK(d(63, 0) == m.offdiag);
  CHECK((d - d.transpose()).norm() == 0.0);
  const Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(64, -1, 1);
  CHECK((d * v - m.apply(v)).norm() < 1e-9 * (d * v).norm());

  CHECK_THROWS_AS(assemble(constant_profile(1.0, 0.0, 96)), Error);
  CHECK_THROWS_AS(assemble(constant_profile(1.0, 0.0, 32)), Error);
  CHECK_THROWS_AS(assemble(constant_profile(1.0, NAN, 64)), Error);
}

TEST_CASE("block Sturm matches Jacobi on random profiles") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto m = assemble(random_profile(64, seed));
    const auto jac = jacobi_eigenvalues(m.dense());
    const auto bis = lowest_eigenvalues(m, 64);
    const double scale = 4 / (m.h * m.h);
    for (std::size_t k = 0; k < 64; ++k) CHECK(std::abs(jac[k] - bis[k]) < 1e-10 * scale);
    CHECK(count_eigenvalues_below(m, jac[10] + 1e-6) == 11);
  }
}

TEST_CASE("discrete circle spectrum is exact") {
  // Constant kappa: eigenvalues (4 / h^2) sin^2(pi k / n) - kappa^2 / 4.
  const std::size_t n = 256;
  const auto m = assemble(constant_profile(2.5, 1.7, n));
  std::vector<double> exact;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = std::sin(pi * k / n);
    exact.push_back(4 / (m.h * m.h) * s * s - 1.7 * 1.7 / 4);
  }
  std::sort(exact.begin(), exact.end());
  const auto ev = lowest_eigenvalues(m, 9);
  for (std::size_t k = 0; k < 9; ++k) CHECK(ev[k] == doctest::Approx(exact[k]).epsilon(1e-10));
}

TEST_CASE("constant curvature gives lambda1 = -kappa^2/4 exactly") {
  for (double kappa : {0.3, 1.0, 4.0}) {
    const auto s = eigenvalues(constant_profile(2.0, kappa, 512), constant_profile(2.0, kappa, 1024), 3);
    CHECK(std::abs(s.eigenvalues[0] + kappa * kappa / 4) < 1e-10);
  }
}

TEST_CASE("circle closed forms") {
  for (double theta : {pi / 6, pi / 4, pi / 3}) {
    const auto s = compute_spectrum([&](std::size_t n) { return geodesic_curvature(SphericalLoop::circle(theta), n); }, 1024);
    const double c2 = 1 / (std::tan(theta) * std::tan(theta));
    const double l2 = 1 / (std::sin(theta) * std::sin(theta)) - c2 / 4;
    CHECK(s.eigenvalues.size() == 2);
    CHECK(std::abs(s.eigenvalues[0] + c2 / 4) < 1e-10);
    CHECK(std::abs(s.eigenvalues[1] - l2) <= std::max(1e-8, 3 * s.richardson_error[1]));
    CHECK(s.richardson_error[1] < 1e-5);
    const auto ks = accumulation_constant(s);
    CHECK(ks.negative.size() == 1);
    CHECK(ks.k_S == doctest::Approx(std::sqrt(c2) / (4 * pi)).epsilon(1e-8));
    CHECK(ks.k_S >= isoperimetric_bound(s.length) - 1e-9);
  }
}

TEST_CASE("great circle has no accumulation") {
  const auto s = compute_spectrum([](std::size_t n) { return geodesic_curvature(SphericalLoop::circle(pi / 2), n); }, 256);
  const auto ks = accumulation_constant(s);
  CHECK(ks.vanishing_curvature);
  CHECK(ks.k_S == 0.0);
  CHECK(ks.negative.empty());
}

TEST_CASE("narrow windows trap one state each") {
  // Gaussian trial states centred on each window have disjoint effective
  // support, so lambda_5 is below the largest of their Rayleigh quotients.
  const SyntheticSpec spec{2 * pi, 0.2, 5, 0.02};
  const auto p = synthetic_profile(spec, 8192);
  const auto m = assemble(p);
  const double sigma = 3 * spec.eps;
  double worst = -1e300;
  for (int j = 0; j < 5; ++j) {
    const double c = spec.length * j / 5;
    Eigen::VectorXd v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      double x = std::remainder(p.node(i) - c, spec.length);
      v(static_cast<Eigen::Index>(i)) = std::abs(x) < 10 * sigma ? std::exp(-x * x / (2 * sigma * sigma)) : 0.0;
    }
    worst = std::max(worst, v.dot(m.apply(v)) / v.dot(v));
  }
  CHECK(worst < 0);
  const auto ev = lowest_eigenvalues(m, 6);
  CHECK(ev[4] <= worst);
}

TEST_CASE("min-max bound") {
  for (unsigned seed : {4u, 5u, 6u}) {
    const auto fine = random_profile(1024, seed);
    const auto s = eigenvalues(halve(fine), fine, 2);
    // The bound is the discrete Rayleigh quotient of the constant vector.
    CHECK(lowest_eigenvalues(assemble(fine), 1)[0] <= minmax_upper_bound(fine) + 1e-12);
    CHECK(s.eigenvalues.size() == 2);
  }
  const auto loop = SphericalLoop::fourier(pi / 3, {{0.05, 0.02}, {0.0, 0.03}});
  const auto s = compute_spectrum([&](std::size_t n) { return geodesic_curvature(loop, n); }, 1024);
  CHECK(s.eigenvalues[0] <= minmax_upper_bound(geodesic_curvature(loop, 2048)) + 1e-9);
}

TEST_CASE("second-order convergence") {
  const auto loop = SphericalLoop::fourier(pi / 4, {{0.04, 0.0}, {0.0, 0.02}});
  std::vector<double> l2;
  for (std::size_t n : {256u, 512u, 1024u}) l2.push_back(lowest_eigenvalues(assemble(geodesic_curvature(loop, n)), 2)[1]);
  const double ratio = (l2[0] - l2[1]) / (l2[1] - l2[2]);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("diagonal shift moves every eigenvalue") {
  auto m = assemble(random_profile(512, 9));
  const auto before = lowest_eigenvalues(m, 8);
  for (auto& d : m.diag) d += 0.75;
  const auto after = lowest_eigenvalues(m, 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(after[k] - before[k] - 0.75) < 1e-12 * (1 + std::abs(before[k])) * 100);
}

TEST_CASE("default eigenvalue count") {
  const auto s = compute_spectrum([](std::size_t n) { return constant_profile(2 * pi, 0.5, n); }, 256);
  // lambda_k = k^2 - 1/16: only k = 0 is below 1/4, so two are computed.
  CHECK(s.eigenvalues.size() == 2);
  CHECK(s.grid_sizes == std::vector<std::size_t>{256, 512});
  CHECK_THROWS_AS(compute_spectrum([](std::size_t n) { return constant_profile(1.0, 0.5, n); }, 64, 17), Error);
  CHECK_THROWS_AS(eigenvalues(constant_profile(1.0, 0.5, 64), constant_profile(2.0, 0.5, 128)), Error);
}

TEST_CASE("failure modes") {
  auto big = assemble(random_profile(64, 12)).dense();
  CHECK(kind_of([&] { jacobi_eigenvalues(big, 1); }) == ErrorKind::ConvergenceFailure);

  // kappa = 2 on length 2 pi: lambda_k = k^2 - 1 vanishes at k = 1.
  const auto zero = compute_spectrum([](std::size_t n) { return constant_profile(2 * pi, 2.0, n); }, 256, 3);
  CHECK(kind_of([&] { accumulation_constant(zero); }) == ErrorKind::NearZeroEigenvalue);

  SpectrumResult loose;
  loose.eigenvalues = {-1e-3, 2.0};
  loose.richardson_error = {5e-4, 1e-6};
  loose.max_abs_kappa = 1.0;
  CHECK(kind_of([&] { accumulation_constant(loose); }) == ErrorKind::Unconverged);

  CHECK(kind_of([] { isoperimetric_bound(7.0); }) == ErrorKind::InvalidInput);
}
