#include "cone_spectra/periodic_spline.hpp"

#include <algorithm>
#include <cmath>

#include "cone_spectra/error.hpp"

namespace cone_spectra {

void solve_cyclic_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                              std::span<const double> upper, std::span<Eigen::Vector3d> rhs) {
  const std::size_t n = diag.size();
  if (n < 3 || lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw Error(ErrorKind::InvalidInput, "cyclic tridiagonal system needs n >= 3");
  }
  // Corner couplings: alpha = upper[n-1] (row n-1 -> x[0]), beta = lower[0] (row 0 -> x[n-1]).
  const double alpha = upper[n - 1];
  const double beta = lower[0];
  const double gamma = -diag[0];

  std::vector<double> b(diag.begin(), diag.end());
  b[0] = diag[0] - gamma;
  b[n - 1] = diag[n - 1] - alpha * beta / gamma;

  auto thomas = [&](std::vector<Eigen::Vector3d>& x) {
    std::vector<double> c(n);
    c[0] = upper[0] / b[0];
    x[0] /= b[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = b[i] - lower[i] * c[i - 1];
      c[i] = upper[i] / m;
      x[i] = (x[i] - lower[i] * x[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  };

  std::vector<Eigen::Vector3d> x(rhs.begin(), rhs.end());
  thomas(x);
  std::vector<Eigen::Vector3d> u(n, Eigen::Vector3d::Zero());
  u[0] = Eigen::Vector3d::Constant(gamma);
  u[n - 1] = Eigen::Vector3d::Constant(alpha);
  thomas(u);

  // Each coordinate is an independent scalar system.
  for (int k = 0; k < 3; ++k) {
    const double num = x[0][k] + beta * x[n - 1][k] / gamma;
    const double den = 1.0 + u[0][k] + beta * u[n - 1][k] / gamma;
    const double factor = num / den;
    for (std::size_t i = 0; i < n; ++i) rhs[i][k] = x[i][k] - factor * u[i][k];
  }
}

PeriodicCubicSpline3::PeriodicCubicSpline3(std::vector<double> knots,
                                           std::vector<Eigen::Vector3d> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n < 4 || knots_.size() != n + 1) {
    throw Error(ErrorKind::InvalidInput, "periodic spline needs >= 4 points and n+1 knots");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(knots_[i + 1] > knots_[i])) {
      throw Error(ErrorKind::InvalidInput, "spline knots must be strictly increasing");
    }
  }
  std::vector<double> lower(n), diag(n), upper(n);
  second_.assign(n, Eigen::Vector3d::Zero());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    const double h_prev = knots_[prev + 1] - knots_[prev];
    const double h = knots_[i + 1] - knots_[i];
    lower[i] = h_prev;
    diag[i] = 2.0 * (h_prev + h);
    upper[i] = h;
    second_[i] = 6.0 * ((values_[next] - values_[i]) / h - (values_[i] - values_[prev]) / h_prev);
  }
  solve_cyclic_tridiagonal(lower, diag, upper, second_);
}

PeriodicCubicSpline3::Jet PeriodicCubicSpline3::evaluate(double t) const {
  const double t0 = knots_.front();
  const double p = period();
  double u = std::fmod(t - t0, p);
  if (u < 0) u += p;
  u += t0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  std::size_t i = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  i = std::clamp<std::size_t>(i, 1, values_.size()) - 1;
  const std::size_t j = (i + 1) % values_.size();

  const double h = knots_[i + 1] - knots_[i];
  const double a = (knots_[i + 1] - u) / h;
  const double b = 1.0 - a;
  const Eigen::Vector3d& yi = values_[i];
  const Eigen::Vector3d& yj = values_[j];
  const Eigen::Vector3d& mi = second_[i];
  const Eigen::Vector3d& mj = second_[j];

  Jet jet;
  jet.value = a * yi + b * yj + ((a * a * a - a) * mi + (b * b * b - b) * mj) * (h * h / 6.0);
  jet.d1 = (yj - yi) / h - (3.0 * a * a - 1.0) / 6.0 * h * mi + (3.0 * b * b - 1.0) / 6.0 * h * mj;
  jet.d2 = a * mi + b * mj;
  return jet;
}

}  // namespace cone_spectra
