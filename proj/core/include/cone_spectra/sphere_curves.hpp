#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace cone_spectra {

using Vec3 = Eigen::Vector3d;

/// Geodesic circle of geodesic radius `theta` around the north pole.
struct CircleLoop {
  double theta = 0.0;
};

/// One Fourier mode of the colatitude perturbation: a cos(k phi) + b sin(k phi).
struct FourierTerm {
  double a = 0.0;
  double b = 0.0;
};

/// Colatitude graph theta(phi) = theta0 + sum_k (a_k cos k phi + b_k sin k phi).
struct FourierLoop {
  double theta0 = 0.0;
  std::vector<FourierTerm> coeffs;  // coeffs[k-1] multiplies the k-th harmonic
};

/// Closed polygon of unit vectors; interpolated by a periodic cubic spline in
/// cumulative chord length and projected back onto the sphere.
struct SampledLoop {
  std::vector<Vec3> points;
};

/// Value and first two derivatives of the raw parametrization P(t) with
/// respect to the raw parameter t (not arc length).
struct RawJet {
  Vec3 point;
  Vec3 d1;
  Vec3 d2;
};

class PeriodicCubicSpline3;

/// Closed C^2 (analytic for the closed-form families) loop on the unit sphere.
///
/// The circle and Fourier families are traversed with phi = -t, i.e. clockwise
/// when seen from above the north pole, so that n = Gamma x Gamma' points away
/// from the pole and a circle of radius theta has kappa = +cot(theta).
class SphericalLoop {
 public:
  using Kind = std::variant<CircleLoop, FourierLoop, SampledLoop>;

  static SphericalLoop circle(double theta);
  static SphericalLoop fourier(double theta0, std::vector<FourierTerm> coeffs);
  static SphericalLoop samples(std::vector<Vec3> points);

  const Kind& kind() const { return kind_; }
  bool is_circle() const { return std::holds_alternative<CircleLoop>(kind_); }

  /// Length of the raw parameter interval (2 pi for the closed forms).
  double period() const { return period_; }

  RawJet jet(double t) const;

  /// Breakpoints of the raw parametrization: quadrature panels never straddle
  /// them (spline knots for sampled loops, a uniform grid otherwise).
  std::span<const double> breakpoints() const { return breakpoints_; }

  /// Natural viewpoint for star-shapedness (north pole for the closed forms).
  std::optional<Vec3> natural_pole() const;

 private:
  explicit SphericalLoop(Kind kind);

  Kind kind_;
  double period_ = 0.0;
  std::vector<double> breakpoints_;
  std::shared_ptr<const PeriodicCubicSpline3> spline_;
};

/// Cumulative arc length s(t) of a loop, with its inverse t(s).
class ArcLengthMap {
 public:
  explicit ArcLengthMap(const SphericalLoop& loop);

  const SphericalLoop& loop() const { return loop_; }
  double length() const { return length_; }

  /// Arc length from t = 0 to t, for t in [0, period].
  double arc_length_at(double t) const;

  /// Raw parameter reaching arc length s; s is reduced modulo the length.
  double parameter_at(double s) const;

  std::span<const double> parameter_table() const { return params_; }
  std::span<const double> length_table() const { return lengths_; }

 private:
  double speed(double t) const;
  double panel_integral(double a, double b) const;

  SphericalLoop loop_;
  std::vector<double> params_;
  std::vector<double> lengths_;
  std::vector<double> speeds_;
  double length_ = 0.0;
};

/// Arc-length Frenet-type frame on the sphere.
struct Frame {
  Vec3 point;     // Gamma
  Vec3 tangent;   // Gamma'
  Vec3 accel;     // Gamma''
  Vec3 normal;    // n = Gamma x Gamma'
  double kappa;   // (Gamma x Gamma'') . Gamma'
};

enum class ProfileSource { FromCurve, Synthetic };

/// Geodesic curvature sampled on the uniform arc-length grid s_i = i l / N.
struct CurvatureProfile {
  double length = 0.0;
  std::vector<double> kappa;
  ProfileSource source = ProfileSource::FromCurve;

  std::size_t size() const { return kappa.size(); }
  double step() const { return length / static_cast<double>(kappa.size()); }
  double node(std::size_t i) const { return step() * static_cast<double>(i); }
};

/// Windows of constant curvature cot(eps) on m arcs of half-width eps centred
/// at j l / m, joined to `baseline` by a quintic smoothstep over eps / 2.
struct SyntheticSpec {
  double length = 0.0;
  double baseline = 0.0;
  int windows = 1;
  double eps = 0.0;
};

/// Loop plus its arc-length map; the unit that the profile and area
/// computations work on.
class CurveGeometry {
 public:
  explicit CurveGeometry(SphericalLoop loop);

  const SphericalLoop& loop() const { return map_.loop(); }
  const ArcLengthMap& arc_length() const { return map_; }
  double length() const { return map_.length(); }

  Frame frame(double s) const;

  /// Runs the invariant checks: pairwise injectivity on a grid of at least
  /// 512 points, and closure of the spline/analytic parametrization.
  void validate() const;

  /// Throws FrameIdentityViolated when max_i |n'(s_i) - kappa Gamma'(s_i)|
  /// exceeds 1e-6 (1 + max|kappa|), with n' from central differences of n.
  CurvatureProfile curvature_profile(std::size_t n) const;

  double frame_identity_residual(std::size_t n) const;

  /// Area of the side that -n points into. `pole` must see the loop as
  /// star-shaped; defaults to the normalized centroid.
  double enclosed_area(std::optional<Vec3> pole = std::nullopt) const;

 private:
  std::optional<double> fan_area(const Vec3& pole, std::size_t n) const;

  ArcLengthMap map_;
};

Frame evaluate_frame(const CurveGeometry& geometry, double s);
CurvatureProfile geodesic_curvature(const SphericalLoop& loop, std::size_t n);
double enclosed_area(const SphericalLoop& loop);
CurvatureProfile synthetic_profile(const SyntheticSpec& spec, std::size_t n);

/// Trapezoid rule on the periodic grid.
double integrate_kappa(const CurvatureProfile& profile);
double integrate_kappa_squared(const CurvatureProfile& profile);

bool is_power_of_two(std::size_t n);

}  // namespace cone_spectra
