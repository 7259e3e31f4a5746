#include "cone_spectra/radial_counting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "cone_spectra/error.hpp"
#include "cone_spectra/parallel.hpp"
#include "cone_spectra/sturm.hpp"

namespace cone_spectra {

namespace odeint = boost::numeric::odeint;

std::string_view to_string(CountUncertainty u) noexcept {
  return u == CountUncertainty::Exact ? "exact" : "pm1";
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMeshRatio = 1.01;

void check_spec(const HalfLineOperatorSpec& spec, double E) {
  if (!(spec.x0 > 0.0) || !std::isfinite(spec.x0)) throw Error(ErrorKind::InvalidInput, "x0 must be positive");
  if (!std::isfinite(spec.a) || !std::isfinite(spec.b)) {
    throw Error(ErrorKind::InvalidInput, "potential coefficients must be finite");
  }
  if (!(E > 0.0) || !std::isfinite(E)) throw Error(ErrorKind::InvalidInput, "E must be positive");
}

// w'' + P(tau) w = 0 after u = rho^(1/2) w, tau = ln rho.
struct PhaseEquation {
  double c, b, E, k;
  double P(double tau) const { return -c - b * std::exp(-tau) - E * std::exp(2.0 * tau); }
  void operator()(const std::array<double, 1>& x, std::array<double, 1>& dxdt, double tau) const {
    const double s = std::sin(x[0]), co = std::cos(x[0]);
    dxdt[0] = k * co * co + (P(tau) / k) * s * s;
  }
};

// Largest tau in [lo, hi] where P changes sign from positive to negative.
std::optional<double> outer_turning_point(const PhaseEquation& eq, double lo, double hi) {
  const double step = 0.02;
  double upper = hi;
  if (eq.P(upper) > 0.0) return hi;
  for (double tau = hi - step; tau > lo - step; tau -= step) {
    const double t = std::max(tau, lo);
    if (eq.P(t) > 0.0) {
      double a = t, b = upper;
      for (int i = 0; i < 100 && b - a > 1e-13; ++i) {
        const double m = 0.5 * (a + b);
        (eq.P(m) > 0.0 ? a : b) = m;
      }
      return 0.5 * (a + b);
    }
    upper = t;
    if (t == lo) break;
  }
  return std::nullopt;
}

void integrate_phase(const PhaseEquation& eq, std::array<double, 1>& x, double from, double to) {
  if (!(to > from)) return;
  auto stepper = odeint::make_controlled(1e-11, 1e-11, odeint::runge_kutta_dopri5<std::array<double, 1>>());
  double t = from, dt = std::min(0.05, to - from);
  long steps = 0;
  while (t < to) {
    dt = std::min({dt, to - t, 0.25});
    if (stepper.try_step(eq, x, t, dt) == odeint::fail) {
      if (dt < 1e-12) {
        throw Error(ErrorKind::StiffIntegration,
                    "step size underflow at rho = " + std::to_string(std::exp(t)) + "; b too large for x0?");
      }
    }
    if (++steps > 5'000'000) throw Error(ErrorKind::StiffIntegration, "step budget exhausted");
  }
}

long matrix_count_at(const HalfLineOperatorSpec& spec, double E, double wall) {
  const std::size_t cells =
      static_cast<std::size_t>(std::ceil(std::log(wall / spec.x0) / std::log(kMeshRatio)));
  const double ratio = std::pow(wall / spec.x0, 1.0 / static_cast<double>(cells));
  std::vector<long double> rho(cells + 1);
  rho[0] = spec.x0;
  for (std::size_t i = 1; i <= cells; ++i) rho[i] = rho[i - 1] * ratio;
  rho[cells] = wall;

  // Nodes 0..cells-1; node `cells` is the Dirichlet wall.
  std::vector<long double> diag(cells, 0.0L), off(cells > 0 ? cells - 1 : 0, 0.0L);
  for (std::size_t i = 0; i < cells; ++i) {
    const long double left = i > 0 ? rho[i] - rho[i - 1] : 0.0L;
    const long double right = rho[i + 1] - rho[i];
    const long double mass = 0.5L * (left + right);
    const long double r = rho[i];
    const long double V = spec.a / (r * r) + spec.b / (r * r * r);
    diag[i] = (left > 0 ? 1.0L / left : 0.0L) + 1.0L / right + (V + E) * mass;
    if (i + 1 < cells) off[i] = -1.0L / right;
  }
  Tridiagonal t;
  if (spec.bc == BoundaryCondition::Dirichlet) {
    t.diag.assign(diag.begin() + 1, diag.end());
    t.off.assign(off.begin() + (off.empty() ? 0 : 1), off.end());
  } else {
    t.diag = std::move(diag);
    t.off = std::move(off);
  }
  return static_cast<long>(sturm_count(t, 0.0L));
}

std::vector<HalfLineOperatorSpec> modes_from(const SpectrumResult& spectrum, double shift,
                                             BoundaryCondition bc, double b, double x0) {
  std::vector<HalfLineOperatorSpec> modes;
  for (double lambda : spectrum.eigenvalues) {
    const double a = lambda - shift;
    if (a < -0.25 - 1e-10) modes.push_back({x0, bc, a, b});
  }
  return modes;
}

}  // namespace

double truncation_radius(const HalfLineOperatorSpec& spec, double E) {
  return 4.0 * std::max(spec.x0, std::sqrt(std::max(-spec.a - 0.25 + 1.0, 0.0)) / std::sqrt(E));
}

double log_slope(double a) { return std::sqrt(std::max(-a - 0.25, 0.0)) / (2.0 * kPi); }

OscillationCount count_below(const HalfLineOperatorSpec& spec, double E) {
  check_spec(spec, E);
  PhaseEquation eq{0.25 + spec.a, spec.b, E, std::max(std::sqrt(std::abs(spec.a + 0.25)), 0.5)};

  OscillationCount out;
  out.x_max = truncation_radius(spec, E);
  const double tau0 = std::log(spec.x0);
  const double tau1 = std::log(out.x_max);
  const double tau2 = tau1 + std::log(2.0);

  // Dirichlet: w = 0. Neumann: u' = 0 means w' = -w/2.
  std::array<double, 1> x{spec.bc == BoundaryCondition::Dirichlet ? 0.0 : std::atan2(1.0, -0.5 / eq.k)};
  double tau = tau0;
  out.phase = x[0] / kPi;
  if (const auto turn = outer_turning_point(eq, tau0, tau2)) {
    integrate_phase(eq, x, tau, *turn);
    tau = std::max(tau, *turn);
    out.phase = x[0] / kPi;
  }
  if (tau < tau1) {
    integrate_phase(eq, x, tau, tau1);
    tau = tau1;
  }
  out.count = static_cast<long>(std::floor(x[0] / kPi));
  integrate_phase(eq, x, tau, tau2);
  out.count_doubled = static_cast<long>(std::floor(x[0] / kPi));
  out.uncertainty = CountUncertainty::PlusMinusOne;
  return out;
}

long count_below_matrix(const HalfLineOperatorSpec& spec, double E, double X_wall) {
  check_spec(spec, E);
  if (!(X_wall > spec.x0)) throw Error(ErrorKind::InvalidInput, "X_wall must exceed x0");
  const long near = matrix_count_at(spec, E, X_wall);
  const long far = matrix_count_at(spec, E, 2.0 * X_wall);
  if (near != far) {
    throw Error(ErrorKind::WallTooClose, "count moves from " + std::to_string(near) + " to " +
                                             std::to_string(far) + " when X_wall doubles");
  }
  return near;
}

MatrixCount count_below_matrix_auto(const HalfLineOperatorSpec& spec, double E, int max_doublings) {
  check_spec(spec, E);
  MatrixCount out;
  double wall = 2.0 * truncation_radius(spec, E);
  long current = matrix_count_at(spec, E, wall);
  for (int i = 0; i < max_doublings; ++i) {
    const long next = matrix_count_at(spec, E, 2.0 * wall);
    out.max_doubling_change = std::max(out.max_doubling_change, std::abs(next - current));
    if (next == current) {
      out.count = current;
      out.x_wall = wall;
      return out;
    }
    current = next;
    wall *= 2.0;
  }
  throw Error(ErrorKind::WallTooClose, "matrix count did not stabilise after wall doubling");
}

std::vector<double> log_energy_grid(double emin, double emax, int per_decade) {
  if (!(emin > 0.0) || !(emax > emin) || per_decade < 1) {
    throw Error(ErrorKind::InvalidInput, "energy grid needs 0 < emin < emax and per-decade >= 1");
  }
  const double lo = std::log10(emin), hi = std::log10(emax);
  const auto steps = static_cast<long>(std::llround(std::ceil((hi - lo) * per_decade - 1e-9)));
  std::vector<double> grid;
  for (long i = 0; i <= steps; ++i) {
    const double e = std::min(hi, lo + static_cast<double>(i) / per_decade);
    grid.push_back(std::pow(10.0, e));
  }
  grid.back() = emax;
  grid.front() = emin;
  return grid;
}

SlopeFit fit_log_slope(std::span<const CountingRow> rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "no rows to fit");
  double emax = 0.0;
  for (const auto& r : rows) emax = std::max(emax, r.E);
  std::vector<const CountingRow*> used;
  for (const auto& r : rows) {
    if (r.E <= emax / 10.0 * (1.0 + 1e-9)) used.push_back(&r);
  }
  if (used.size() < 2) throw Error(ErrorKind::InvalidInput, "slope fit needs at least two rows below emax/10");

  const double n = static_cast<double>(used.size());
  double sx = 0, sy = 0, sn = 0;
  for (const auto* r : used) {
    sx += -std::log(r->E);
    sy += r->phase;
    sn += static_cast<double>(r->N);
  }
  const double mx = sx / n, my = sy / n, mn = sn / n;
  double sxx = 0, sxy = 0, sxn = 0;
  for (const auto* r : used) {
    const double dx = -std::log(r->E) - mx;
    sxx += dx * dx;
    sxy += dx * (r->phase - my);
    sxn += dx * (static_cast<double>(r->N) - mn);
  }
  SlopeFit fit;
  fit.points = used.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.integer_slope = sxn / sxx;
  if (used.size() > 2) {
    double ssr = 0;
    for (const auto* r : used) {
      const double e = r->phase - (fit.intercept + fit.slope * -std::log(r->E));
      ssr += e * e;
    }
    fit.residual = std::sqrt(ssr / (n - 2.0) / sxx);
  }
  return fit;
}

CountingCurve counting_curve(std::span<const HalfLineOperatorSpec> modes, std::span<const double> E_grid) {
  std::vector<double> grid(E_grid.begin(), E_grid.end());
  std::sort(grid.begin(), grid.end());
  CountingCurve curve;
  curve.modes = modes.size();
  curve.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    CountingRow row;
    row.E = grid[i];
    row.uncertainty = modes.empty() ? CountUncertainty::Exact : CountUncertainty::PlusMinusOne;
    for (const auto& m : modes) {
      const auto c = count_below(m, row.E);
      row.N += c.count;
      row.phase += c.phase;
    }
    curve.rows[i] = row;
  });
  // N is non-increasing in E; absorb +-1 wobble from the largest E downwards.
  for (std::size_t i = curve.rows.size(); i-- > 1;) {
    curve.rows[i - 1].N = std::max(curve.rows[i - 1].N, curve.rows[i].N);
  }
  if (curve.rows.size() >= 2 && grid.back() / grid.front() > 10.0 * (1.0 + 1e-9)) {
    curve.fit = fit_log_slope(curve.rows);
  }
  return curve;
}

std::vector<HalfLineOperatorSpec> layer_modes(const SpectrumResult& spectrum, BoundaryCondition bc, double b,
                                              double x0) {
  return modes_from(spectrum, 0.25, bc, b, x0);
}

std::vector<HalfLineOperatorSpec> delta_modes(const SpectrumResult& spectrum, double delta) {
  if (!(delta >= 0.0 && delta <= 0.1)) throw Error(ErrorKind::InvalidInput, "delta must lie in [0, 0.1]");
  return modes_from(spectrum, (1.0 - delta) / 4.0, BoundaryCondition::Dirichlet, 0.0, 1.0);
}

std::pair<CountingCurve, CountingCurve> predict_layer_counting(const SpectrumResult& spectrum, double b_D,
                                                               double b_N, double x0,
                                                               std::span<const double> E_grid) {
  const auto d = layer_modes(spectrum, BoundaryCondition::Dirichlet, b_D, x0);
  const auto n = layer_modes(spectrum, BoundaryCondition::Neumann, -b_N, x0);
  return {counting_curve(d, E_grid), counting_curve(n, E_grid)};
}

CountingCurve predict_delta_counting(const SpectrumResult& spectrum, double delta, std::span<const double> E_grid) {
  return counting_curve(delta_modes(spectrum, delta), E_grid);
}

}  // namespace cone_spectra
