#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cone_spectra/error.hpp"
#include "test_support.hpp"
#include "cone_spectra/point_interaction.hpp"

using namespace cone_spectra;
using cone_spectra::testing::kind_of;
using BC = BoundaryCondition;

namespace {

double bisect(double (*f)(double), double a, double b) {
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    (f(a) * f(m) <= 0 ? b : a) = m;
  }
  return 0.5 * (a + b);
}

const double kLengths[] = {2.0, 3.0, 5.0, 7.5, 10.0, 15.0, 20.0};

}  // namespace

TEST_CASE("Dirichlet root against an independent bisection") {
  const double k = bisect([](double x) { return std::tanh(5 * x) - 2 * x; }, 0.3, 0.6);
  CHECK(k == doctest::Approx(0.4933).epsilon(1e-3));
  const auto s = solve_transcendental({5.0, BC::Dirichlet});
  CHECK(s.lambda1 == doctest::Approx(-k * k).epsilon(1e-12));
  CHECK(s.residual < 1e-10);
  CHECK(s.threshold_gap == doctest::Approx(0.25 - k * k).epsilon(1e-9));
}

TEST_CASE("Neumann root against an independent bisection") {
  const double k = bisect([](double x) { return 1 / std::tanh(5 * x) - 2 * x; }, 0.5, 1.0);
  CHECK(solve_transcendental({5.0, BC::Neumann}).lambda1 == doctest::Approx(-k * k).epsilon(1e-12));
}

TEST_CASE("both conditions approach -1/4 from opposite sides") {
  for (double L : kLengths) {
    const auto d = solve_transcendental({L, BC::Dirichlet});
    const auto n = solve_transcendental({L, BC::Neumann});
    CHECK(n.lambda1 < -0.25);
    CHECK(d.lambda1 > -0.25);
    CHECK(n.threshold_gap < 0);
    CHECK(d.threshold_gap > 0);
    CHECK(d.lambda2 >= 0);
    CHECK(n.lambda2 >= 0);
    CHECK(n.lambda2 <= d.lambda2);
  }
  CHECK(std::abs(solve_transcendental({20.0, BC::Dirichlet}).lambda1 + 0.25) < 1e-8);
  CHECK(std::abs(solve_transcendental({20.0, BC::Neumann}).lambda1 + 0.25) < 1e-8);
}

TEST_CASE("threshold gaps decay like exp(-L)") {
  for (BC bc : {BC::Dirichlet, BC::Neumann}) {
    const double g10 = std::abs(solve_transcendental({10.0, bc}).threshold_gap);
    const double g15 = std::abs(solve_transcendental({15.0, bc}).threshold_gap);
    CHECK(g10 / g15 == doctest::Approx(std::exp(5.0)).epsilon(0.01));
  }
}

TEST_CASE("ground state is monotone in L") {
  double prev_d = 1e9, prev_n = -1e9;
  for (double L : kLengths) {
    const double d = solve_transcendental({L, BC::Dirichlet}).lambda1;
    const double n = solve_transcendental({L, BC::Neumann}).lambda1;
    CHECK(d < prev_d);
    CHECK(n > prev_n);
    prev_d = d;
    prev_n = n;
  }
}

TEST_CASE("odd modes") {
  const double pi = std::numbers::pi;
  CHECK(solve_transcendental({20.0, BC::Dirichlet}).lambda2 <= (pi / 20) * (pi / 20) + 1e-14);
  CHECK(solve_transcendental({20.0, BC::Neumann}).lambda2 <= (pi / 40) * (pi / 40) + 1e-14);
}

TEST_CASE("finite elements agree with the matching condition") {
  for (BC bc : {BC::Dirichlet, BC::Neumann}) {
    for (double L : {2.0, 5.0, 10.0}) {
      const auto exact = solve_transcendental({L, bc});
      const auto fd = solve_finite_difference({L, bc});
      CHECK(fd.method == ModelMethod::FiniteDifference);
      CHECK(std::abs(fd.lambda1 - exact.lambda1) < 1e-8);
      CHECK(std::abs(fd.lambda2 - exact.lambda2) < 1e-7);
    }
  }
  // Single grids converge at second order.
  const IntervalDeltaSpec spec{5.0, BC::Neumann};
  const double exact = solve_transcendental(spec).lambda1;
  const double e1 = finite_difference_pair(spec, 512).first - exact;
  const double e2 = finite_difference_pair(spec, 1024).first - exact;
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("critical Dirichlet length") {
  const auto s = solve_transcendental({2.0, BC::Dirichlet});
  CHECK(std::abs(s.lambda1) < 1e-8);
  CHECK(kind_of([] { solve_transcendental({2.0, BC::Dirichlet}, true); }) == ErrorKind::NoNegativeRoot);
  CHECK(solve_transcendental({1.5, BC::Dirichlet}).lambda1 > 0);
  CHECK_NOTHROW(solve_transcendental({2.0, BC::Neumann}, true));
}

TEST_CASE("input validation") {
  CHECK(kind_of([] { solve_transcendental({0.5, BC::Dirichlet}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { solve_finite_difference({5.0, BC::Dirichlet}, 100); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { solve_finite_difference({5.0, BC::Dirichlet}, 257); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { solve_finite_difference({-1.0, BC::Dirichlet}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_boundary_condition("X"); }) == ErrorKind::InvalidInput);
  CHECK(parse_boundary_condition("N") == BC::Neumann);
  CHECK(to_string(BC::Dirichlet) == "D");
}
