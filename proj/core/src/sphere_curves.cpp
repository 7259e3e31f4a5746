#include "cone_spectra/sphere_curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Geometry>

#include "cone_spectra/error.hpp"
#include "cone_spectra/periodic_spline.hpp"

namespace cone_spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kClosedFormPanels = 2048;
constexpr std::size_t kAreaGrid = 4096;
constexpr double kMinSpeed = 1e-8;

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGaussNodes = {0.1834346424956498, 0.5255324099163290,
                                               0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGaussWeights = {0.3626837833783620, 0.3137066458778873,
                                                 0.2223810344533745, 0.1012285362903763};

RawJet colatitude_jet(double theta, double dtheta, double ddtheta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  const Vec3 e_r(st * cp, st * sp, ct);
  const Vec3 e_theta(ct * cp, ct * sp, -st);
  const Vec3 e_phi(-sp, cp, 0.0);

  RawJet jet;
  jet.point = e_r;
  jet.d1 = dtheta * e_theta + st * e_phi;
  jet.d2 = (ddtheta - st * ct) * e_theta + 2.0 * dtheta * ct * e_phi -
           (dtheta * dtheta + st * st) * e_r;
  return jet;
}

std::vector<double> uniform_breakpoints(double period, std::size_t panels) {
  std::vector<double> b(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    b[i] = period * static_cast<double>(i) / static_cast<double>(panels);
  }
  return b;
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  const double d1 = cross2(q2 - q1, p1 - q1);
  const double d2 = cross2(q2 - q1, p2 - q1);
  const double d3 = cross2(p2 - p1, q1 - p1);
  const double d4 = cross2(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  auto on_segment = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                       const Eigen::Vector2d& c) {
    return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
  };
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

// Orthonormal e1, e2 completing `pole` to a right-handed basis.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& pole) {
  const Vec3 helper = std::abs(pole.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (helper - helper.dot(pole) * pole).normalized();
  const Vec3 e2 = pole.cross(e1);
  return {e1, e2};
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// ---------------------------------------------------------------------------
// SphericalLoop

SphericalLoop::SphericalLoop(Kind kind) : kind_(std::move(kind)) {}

SphericalLoop SphericalLoop::circle(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorKind::InvalidInput, "circle radius must lie in (0, pi)");
  }
  SphericalLoop loop(CircleLoop{theta});
  loop.period_ = kTwoPi;
  loop.breakpoints_ = uniform_breakpoints(kTwoPi, kClosedFormPanels);
  return loop;
}

SphericalLoop SphericalLoop::fourier(double theta0, std::vector<FourierTerm> coeffs) {
  if (!(theta0 > 0.0 && theta0 < std::numbers::pi)) {
    throw Error(ErrorKind::InvalidInput, "theta0 must lie in (0, pi)");
  }
  SphericalLoop loop(FourierLoop{theta0, std::move(coeffs)});
  loop.period_ = kTwoPi;
  loop.breakpoints_ = uniform_breakpoints(kTwoPi, kClosedFormPanels);
  // theta(phi) must stay strictly inside (0, pi) or the graph runs through a pole.
  const auto& f = std::get<FourierLoop>(loop.kind_);
  for (std::size_t i = 0; i < 4096; ++i) {
    const double phi = kTwoPi * static_cast<double>(i) / 4096.0;
    double theta = f.theta0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
      const double kk = static_cast<double>(k + 1);
      theta += f.coeffs[k].a * std::cos(kk * phi) + f.coeffs[k].b * std::sin(kk * phi);
    }
    if (theta < 1e-6 || theta > std::numbers::pi - 1e-6) {
      throw Error(ErrorKind::NonRegularCurve, "Fourier colatitude leaves (0, pi)");
    }
  }
  return loop;
}

SphericalLoop SphericalLoop::samples(std::vector<Vec3> points) {
  if (points.size() >= 2 && (points.front() - points.back()).norm() < 1e-12) {
    points.pop_back();
  }
  if (points.size() < 4) {
    throw Error(ErrorKind::InvalidInput, "sampled loop needs at least 4 distinct points");
  }
  for (auto& p : points) {
    const double r = p.norm();
    if (!std::isfinite(r) || std::abs(r - 1.0) > 1e-6) {
      throw Error(ErrorKind::InvalidInput, "sample points must lie on the unit sphere");
    }
    p /= r;
  }
  {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(points[a].data(), points[a].data() + 3,
                                          points[b].data(), points[b].data() + 3);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if ((points[order[i]] - points[order[i - 1]]).norm() < 1e-12) {
        throw Error(ErrorKind::NonInjectiveCurve,
                    "repeated sample point at index " + std::to_string(order[i]));
      }
    }
  }

  const std::size_t n = points.size();
  std::vector<double> knots(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    knots[i + 1] = knots[i] + (points[(i + 1) % n] - points[i]).norm();
  }
  auto spline = std::make_shared<PeriodicCubicSpline3>(knots, points);

  SphericalLoop loop(SampledLoop{std::move(points)});
  loop.period_ = knots.back();
  const std::size_t per_knot = std::max<std::size_t>(1, (kClosedFormPanels + n - 1) / n);
  loop.breakpoints_.reserve(n * per_knot + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < per_knot; ++q) {
      loop.breakpoints_.push_back(knots[i] + (knots[i + 1] - knots[i]) * static_cast<double>(q) /
                                                 static_cast<double>(per_knot));
    }
  }
  loop.breakpoints_.push_back(knots.back());
  loop.spline_ = std::move(spline);
  return loop;
}

RawJet SphericalLoop::jet(double t) const {
  if (const auto* c = std::get_if<CircleLoop>(&kind_)) {
    RawJet j = colatitude_jet(c->theta, 0.0, 0.0, -t);
    j.d1 = -j.d1;
    return j;
  }
  if (const auto* f = std::get_if<FourierLoop>(&kind_)) {
    const double phi = -t;
    double theta = f->theta0, d1 = 0.0, d2 = 0.0;
    for (std::size_t i = 0; i < f->coeffs.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      const double ck = std::cos(k * phi), sk = std::sin(k * phi);
      const auto& c = f->coeffs[i];
      theta += c.a * ck + c.b * sk;
      d1 += k * (-c.a * sk + c.b * ck);
      d2 += -k * k * (c.a * ck + c.b * sk);
    }
    RawJet j = colatitude_jet(theta, d1, d2, phi);
    j.d1 = -j.d1;
    return j;
  }
  // Spline in R^3 projected radially: P = S / |S|.
  const auto s = spline_->evaluate(t);
  const double r = s.value.norm();
  const Vec3 p = s.value / r;
  const double dr = p.dot(s.d1);
  const double ddr = (s.d1.squaredNorm() + s.value.dot(s.d2)) / r - dr * dr / r;
  RawJet j;
  j.point = p;
  j.d1 = (s.d1 - dr * p) / r;
  j.d2 = (s.d2 - ddr * p - 2.0 * dr * j.d1) / r;
  return j;
}

std::optional<Vec3> SphericalLoop::natural_pole() const {
  if (std::holds_alternative<SampledLoop>(kind_)) return std::nullopt;
  return Vec3::UnitZ();
}

// ---------------------------------------------------------------------------
// ArcLengthMap

ArcLengthMap::ArcLengthMap(const SphericalLoop& loop) : loop_(loop) {
  const auto bp = loop_.breakpoints();
  params_.assign(bp.begin(), bp.end());
  lengths_.assign(params_.size(), 0.0);
  speeds_.assign(params_.size(), 0.0);
  for (std::size_t i = 0; i < params_.size(); ++i) {
    speeds_[i] = speed(params_[i]);
    if (!(speeds_[i] >= kMinSpeed)) {
      throw Error(ErrorKind::NonRegularCurve,
                  "|dP/dt| < 1e-8 at t = " + std::to_string(params_[i]));
    }
  }
  for (std::size_t i = 1; i < params_.size(); ++i) {
    lengths_[i] = lengths_[i - 1] + panel_integral(params_[i - 1], params_[i]);
    if (!(lengths_[i] > lengths_[i - 1])) {
      throw Error(ErrorKind::NonRegularCurve, "cumulative length is not increasing");
    }
  }
  length_ = lengths_.back();
}

double ArcLengthMap::speed(double t) const { return loop_.jet(t).d1.norm(); }

double ArcLengthMap::panel_integral(double a, double b) const {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
    sum += kGaussWeights[k] * (speed(mid - half * kGaussNodes[k]) + speed(mid + half * kGaussNodes[k]));
  }
  return sum * half;
}

double ArcLengthMap::arc_length_at(double t) const {
  const double period = loop_.period();
  t = std::clamp(t, 0.0, period);
  auto it = std::upper_bound(params_.begin(), params_.end(), t);
  std::size_t i = static_cast<std::size_t>(std::distance(params_.begin(), it));
  i = std::clamp<std::size_t>(i, 1, params_.size() - 1) - 1;
  return lengths_[i] + panel_integral(params_[i], t);
}

double ArcLengthMap::parameter_at(double s) const {
  s = std::fmod(s, length_);
  if (s < 0) s += length_;
  auto it = std::upper_bound(lengths_.begin(), lengths_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(lengths_.begin(), it));
  i = std::clamp<std::size_t>(i, 1, lengths_.size() - 1) - 1;

  // Cubic Hermite in s with exact slopes dt/ds = 1/|P'|, then Newton on s(t).
  const double s0 = lengths_[i], s1 = lengths_[i + 1];
  const double t0 = params_[i], t1 = params_[i + 1];
  const double ds = s1 - s0;
  const double u = (s - s0) / ds;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
  double t = h00 * t0 + h10 * ds / speeds_[i] + h01 * t1 + h11 * ds / speeds_[i + 1];
  t = std::clamp(t, t0, t1);

  for (int iter = 0; iter < 8; ++iter) {
    const double f = s0 + panel_integral(t0, t) - s;
    const double step = f / speed(t);
    t = std::clamp(t - step, t0, t1);
    if (std::abs(step) <= 1e-16 * loop_.period()) break;
  }
  return t;
}

// ---------------------------------------------------------------------------
// CurveGeometry

CurveGeometry::CurveGeometry(SphericalLoop loop) : map_(loop) {}

Frame CurveGeometry::frame(double s) const {
  const double t = map_.parameter_at(s);
  const RawJet j = loop().jet(t);
  const double sigma = j.d1.norm();
  const double dsigma = j.d1.dot(j.d2) / sigma;

  Frame f;
  f.point = j.point;
  f.tangent = j.d1 / sigma;
  f.accel = (j.d2 - (dsigma / sigma) * j.d1) / (sigma * sigma);
  f.normal = f.point.cross(f.tangent);
  f.kappa = f.point.cross(f.accel).dot(f.tangent);
  return f;
}

void CurveGeometry::validate() const {
  const RawJet a = loop().jet(0.0);
  const RawJet b = loop().jet(loop().period());
  if ((a.point - b.point).norm() > 1e-10 || (a.d1 - b.d1).norm() > 1e-8 * (1 + a.d1.norm()) ||
      (a.d2 - b.d2).norm() > 1e-6 * (1 + a.d2.norm())) {
    throw Error(ErrorKind::InvalidInput, "loop is not closed");
  }

  std::size_t m = 512;
  if (const auto* s = std::get_if<SampledLoop>(&loop().kind())) {
    m = std::max<std::size_t>(m, 4 * s->points.size());
  }
  std::vector<Vec3> pts(m);
  Vec3 centroid = Vec3::Zero();
  for (std::size_t i = 0; i < m; ++i) {
    pts[i] = frame(length() * static_cast<double>(i) / static_cast<double>(m)).point;
    if (std::abs(pts[i].norm() - 1.0) > 1e-12) {
      throw Error(ErrorKind::NonRegularCurve, "evaluated point leaves the unit sphere");
    }
    centroid += pts[i];
  }

  // Stereographic projection from the direction farthest from the samples.
  std::vector<Vec3> candidates = {Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                                  -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ()};
  if (centroid.norm() > 1e-9) candidates.insert(candidates.begin(), -centroid.normalized());
  Vec3 proj = candidates.front();
  double best = 2.0;
  for (const auto& q : candidates) {
    double worst = -1.0;
    for (const auto& p : pts) worst = std::max(worst, p.dot(q));
    if (worst < best) {
      best = worst;
      proj = q;
    }
  }
  const auto [e1, e2] = tangent_basis(proj);
  std::vector<Eigen::Vector2d> plane(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double denom = 1.0 - pts[i].dot(proj);
    plane[i] = Eigen::Vector2d(pts[i].dot(e1), pts[i].dot(e2)) / denom;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (segments_intersect(plane[i], plane[(i + 1) % m], plane[j], plane[(j + 1) % m])) {
        throw Error(ErrorKind::NonInjectiveCurve,
                    "loop self-intersects near samples " + std::to_string(i) + " and " +
                        std::to_string(j));
      }
    }
  }
}

double CurveGeometry::frame_identity_residual(std::size_t n) const {
  const double h = length() / static_cast<double>(n);
  const bool sampled = std::holds_alternative<SampledLoop>(loop().kind());
  // Knots make n'' discontinuous for splines, so use a tiny second-order step there.
  const double delta = sampled ? 1e-6 * length() : 1e-3 * length() / kTwoPi;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = h * static_cast<double>(i);
    const Frame f = frame(s);
    Vec3 dn;
    if (sampled) {
      dn = (frame(s + delta).normal - frame(s - delta).normal) / (2.0 * delta);
    } else {
      dn = (8.0 * (frame(s + delta).normal - frame(s - delta).normal) -
            (frame(s + 2 * delta).normal - frame(s - 2 * delta).normal)) /
           (12.0 * delta);
    }
    worst = std::max(worst, (dn - f.kappa * f.tangent).norm());
  }
  return worst;
}

CurvatureProfile CurveGeometry::curvature_profile(std::size_t n) const {
  if (n < 64 || !is_power_of_two(n)) {
    throw Error(ErrorKind::InvalidInput, "profile grid must be a power of two >= 64");
  }
  CurvatureProfile profile;
  profile.length = length();
  profile.source = ProfileSource::FromCurve;
  profile.kappa.resize(n);
  double max_kappa = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Frame f = frame(profile.node(i));
    if (std::abs(f.point.norm() - 1.0) > 1e-10 || std::abs(f.tangent.norm() - 1.0) > 1e-10) {
      throw Error(ErrorKind::NonRegularCurve, "frame is not unit length");
    }
    profile.kappa[i] = f.kappa;
    max_kappa = std::max(max_kappa, std::abs(f.kappa));
  }
  const double residual = frame_identity_residual(n);
  if (!(residual <= 1e-6 * (1.0 + max_kappa))) {
    throw Error(ErrorKind::FrameIdentityViolated,
                "max |n' - kappa Gamma'| = " + std::to_string(residual));
  }
  return profile;
}

std::optional<double> CurveGeometry::fan_area(const Vec3& pole, std::size_t n) const {
  const auto [e1, e2] = tangent_basis(pole);
  const double h = length() / static_cast<double>(n);
  double sum = 0.0;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Frame f = frame(h * static_cast<double>(i));
    const double x = f.point.dot(e1), y = f.point.dot(e2), z = f.point.dot(pole);
    const double dx = f.tangent.dot(e1), dy = f.tangent.dot(e2);
    const double sweep = x * dy - y * dx;
    if (1.0 + z < 1e-8) return std::nullopt;
    const int s = sweep > 0 ? 1 : (sweep < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return std::nullopt;
    sign = s;
    sum += sweep / (1.0 + z);
  }
  return sum * h;
}

double CurveGeometry::enclosed_area(std::optional<Vec3> pole) const {
  std::vector<Vec3> poles;
  if (pole) {
    poles.push_back(pole->normalized());
  } else {
    Vec3 centroid = Vec3::Zero();
    for (std::size_t i = 0; i < kAreaGrid; ++i) {
      centroid += frame(length() * static_cast<double>(i) / kAreaGrid).point;
    }
    if (centroid.norm() > 1e-9) poles.push_back(centroid.normalized());
    if (auto natural = loop().natural_pole()) poles.push_back(*natural);
  }
  for (const auto& p : poles) {
    if (auto fan = fan_area(p, kAreaGrid)) {
      // Counter-clockwise about the pole means n points towards it.
      return *fan > 0 ? 4.0 * std::numbers::pi - *fan : -*fan;
    }
  }
  throw Error(ErrorKind::OrientationAmbiguous,
              "loop is not star-shaped about the available poles; supply a viewpoint");
}

Frame evaluate_frame(const CurveGeometry& geometry, double s) { return geometry.frame(s); }

CurvatureProfile geodesic_curvature(const SphericalLoop& loop, std::size_t n) {
  return CurveGeometry(loop).curvature_profile(n);
}

double enclosed_area(const SphericalLoop& loop) { return CurveGeometry(loop).enclosed_area(); }

// ---------------------------------------------------------------------------
// Synthetic profiles

CurvatureProfile synthetic_profile(const SyntheticSpec& spec, std::size_t n) {
  if (n < 64 || !is_power_of_two(n)) {
    throw Error(ErrorKind::InvalidInput, "profile grid must be a power of two >= 64");
  }
  if (!(spec.length > 0.0) || spec.windows < 1 || !(spec.eps > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "synthetic profile needs length > 0, m >= 1, eps > 0");
  }
  const double m = static_cast<double>(spec.windows);
  if (!(spec.eps < spec.length / (4.0 * m))) {
    throw Error(ErrorKind::WindowOverlap, "eps must be below length / (4 m)");
  }
  const double plateau = 1.0 / std::tan(spec.eps);
  const double ramp = 0.5 * spec.eps;

  CurvatureProfile profile;
  profile.length = spec.length;
  profile.source = ProfileSource::Synthetic;
  profile.kappa.assign(n, spec.baseline);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = profile.node(i);
    for (int j = 1; j <= spec.windows; ++j) {
      const double centre = spec.length * static_cast<double>(j) / m;
      double d = std::fmod(std::abs(s - centre), spec.length);
      d = std::min(d, spec.length - d);
      if (d <= spec.eps) {
        profile.kappa[i] = plateau;
      } else if (d < spec.eps + ramp) {
        const double x = (d - spec.eps) / ramp;
        const double smooth = x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
        profile.kappa[i] = spec.baseline + (plateau - spec.baseline) * (1.0 - smooth);
      }
    }
  }
  return profile;
}

double integrate_kappa(const CurvatureProfile& profile) {
  double sum = 0.0;
  for (double k : profile.kappa) sum += k;
  return sum * profile.step();
}

double integrate_kappa_squared(const CurvatureProfile& profile) {
  double sum = 0.0;
  for (double k : profile.kappa) sum += k * k;
  return sum * profile.step();
}

}  // namespace cone_spectra
