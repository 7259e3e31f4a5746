#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cone_spectra/sphere_curves.hpp"

namespace cone_spectra {

enum class PotentialSign {
  Attractive,  // -kappa^2 / 4, the physical operator
  Repulsive,   // +kappa^2 / 4, mutation hook for harness self-tests
};

/// Periodic second-order difference matrix of -d^2/ds^2 - kappa^2/4.
struct PeriodicOperatorMatrix {
  std::size_t n = 0;
  double h = 0.0;
  std::vector<double> diag;  // 2/h^2 - kappa_i^2/4
  double offdiag = 0.0;      // -1/h^2, also the (0, n-1) corner

  Eigen::MatrixXd dense() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
};

struct SpectrumResult {
  double length = 0.0;
  std::vector<double> eigenvalues;       // ascending, Richardson-extrapolated
  std::vector<double> richardson_error;  // |lambda_2n - lambda_n| / 3
  std::vector<std::size_t> grid_sizes;   // {n, 2n}
  double max_abs_kappa = 0.0;
};

struct AccumulationConstant {
  double k_S = 0.0;
  std::vector<double> negative;
  double threshold = -1e-10;
  double error = 0.0;            // largest Richardson error among computed eigenvalues
  bool vanishing_curvature = false;  // max |kappa| <= 1e-10: the loop is a great circle
};

PeriodicOperatorMatrix assemble(const CurvatureProfile& profile,
                                PotentialSign sign = PotentialSign::Attractive);

/// Number of eigenvalues strictly below x, by block Sturm inertia on the
/// zigzag reordering (node j paired with n-1-j) which is block tridiagonal.
std::size_t count_eigenvalues_below(const PeriodicOperatorMatrix& m, double x);

/// Lowest `count` eigenvalues by bisection on the block Sturm count.
std::vector<double> lowest_eigenvalues(const PeriodicOperatorMatrix& m, std::size_t count);

/// Cyclic Jacobi on the dense matrix. Slow; intended as a cross-check for
/// n <= 512. Throws ConvergenceFailure once `max_sweeps` is exhausted.
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& a, int max_sweeps = 60);

/// Pairs grids n and 2n and extrapolates (4 lambda_2n - lambda_n) / 3.
/// `count` defaults to (# eigenvalues below 1/4 on the fine grid) + 1, at least 2.
SpectrumResult eigenvalues(const CurvatureProfile& coarse, const CurvatureProfile& fine,
                           std::optional<std::size_t> count = std::nullopt,
                           PotentialSign sign = PotentialSign::Attractive);

using ProfileFactory = std::function<CurvatureProfile(std::size_t)>;

/// Builds profiles at n and 2n from `factory` and calls eigenvalues().
SpectrumResult compute_spectrum(const ProfileFactory& factory, std::size_t n = 2048,
                                std::optional<std::size_t> count = std::nullopt,
                                PotentialSign sign = PotentialSign::Attractive);

/// Every other node of a fine profile; used when only one grid is available.
CurvatureProfile halve(const CurvatureProfile& profile);

/// Profiles with max |kappa| <= 1e-10 give k_S = 0 with `vanishing_curvature`
/// set. Otherwise throws NearZeroEigenvalue when a computed eigenvalue sits within its
/// error bar (or 1e-10) of zero, Unconverged when lambda_1 < 0 is not
/// resolved to 10%.
AccumulationConstant accumulation_constant(const SpectrumResult& spectrum);

/// Rayleigh quotient of the constant function: -(1 / 4l) * integral kappa^2.
double minmax_upper_bound(const CurvatureProfile& profile);

/// Lower bound on k_S for loops of length at most 2 pi.
double isoperimetric_bound(double length);

}  // namespace cone_spectra
