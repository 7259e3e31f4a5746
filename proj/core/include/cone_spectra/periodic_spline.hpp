#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace cone_spectra {

/// Interpolating periodic cubic spline through points in R^3 with
/// non-uniform knots. Second derivative is continuous across the seam.
class PeriodicCubicSpline3 {
 public:
  struct Jet {
    Eigen::Vector3d value;
    Eigen::Vector3d d1;
    Eigen::Vector3d d2;
  };

  /// `knots` holds n+1 strictly increasing parameters; the last one closes the
  /// loop back onto values[0].
  PeriodicCubicSpline3(std::vector<double> knots, std::vector<Eigen::Vector3d> values);

  Jet evaluate(double t) const;

  double period() const { return knots_.back() - knots_.front(); }
  std::span<const double> knots() const { return knots_; }

 private:
  std::vector<double> knots_;
  std::vector<Eigen::Vector3d> values_;
  std::vector<Eigen::Vector3d> second_;
};

/// Solves a symmetric-pattern cyclic tridiagonal system in place
/// (Sherman-Morrison on top of the Thomas algorithm). Row i reads
/// lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i], indices mod n.
void solve_cyclic_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                              std::span<const double> upper, std::span<Eigen::Vector3d> rhs);

}  // namespace cone_spectra
