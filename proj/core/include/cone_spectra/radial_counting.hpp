#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cone_spectra/cross_section_operator.hpp"
#include "cone_spectra/point_interaction.hpp"

namespace cone_spectra {

/// -u'' + (a/rho^2 + b/rho^3) u on (x0, infinity) with a boundary condition at x0.
struct HalfLineOperatorSpec {
  double x0 = 1.0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  double a = 0.0;
  double b = 0.0;
};

enum class CountUncertainty { Exact, PlusMinusOne };
std::string_view to_string(CountUncertainty u) noexcept;  // "exact" or "pm1"

struct OscillationCount {
  long count = 0;            // zeros on (x0, X_max)
  long count_doubled = 0;    // zeros on (x0, 2 X_max)
  double phase = 0.0;        // Pruefer phase / pi at the outer turning point
  double x_max = 0.0;
  CountUncertainty uncertainty = CountUncertainty::PlusMinusOne;
};

/// Number of eigenvalues below -E by zero counting of the solution that
/// satisfies the boundary condition at x0. Integrates the scaled Pruefer
/// phase in tau = ln(rho), where u = rho^(1/2) w turns a/rho^2 into a
/// constant coefficient. Throws StiffIntegration if the step size collapses.
OscillationCount count_below(const HalfLineOperatorSpec& spec, double E);

/// Negative inertia of the shifted finite-element matrix on (x0, X_wall)
/// with a Dirichlet wall. Throws WallTooClose if doubling X_wall changes it.
long count_below_matrix(const HalfLineOperatorSpec& spec, double E, double X_wall);

/// Matrix count starting at X_wall = 2 X_max and doubling until stable.
struct MatrixCount {
  long count = 0;
  double x_wall = 0.0;
  long max_doubling_change = 0;  // largest change seen between successive walls
};
MatrixCount count_below_matrix_auto(const HalfLineOperatorSpec& spec, double E, int max_doublings = 8);

/// X_max = 4 max(x0, sqrt(max(-a - 1/4 + 1, 0)) / sqrt(E)).
double truncation_radius(const HalfLineOperatorSpec& spec, double E);

/// Leading coefficient (1/2pi) sqrt((-a - 1/4)_+).
double log_slope(double a);

struct CountingRow {
  double E = 0.0;
  long N = 0;
  CountUncertainty uncertainty = CountUncertainty::Exact;
  double phase = 0.0;  // continuous counterpart of N, summed over modes
};

/// Least squares of the summed Pruefer phase against |ln E|. `residual` is
/// the standard error of the slope; `integer_slope` fits the integer N.
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  double integer_slope = 0.0;
  std::size_t points = 0;
};

struct CountingCurve {
  std::vector<CountingRow> rows;  // ascending in E
  SlopeFit fit;
  std::size_t modes = 0;
};

/// Logarithmic grid of `per_decade` points per decade from emin to emax inclusive.
std::vector<double> log_energy_grid(double emin, double emax, int per_decade);

/// Drops rows with E above emax/10 (the largest decade) then fits.
SlopeFit fit_log_slope(std::span<const CountingRow> rows);

/// Sums count_below over the modes at each E. Rows run in parallel and are
/// merged in grid order.
CountingCurve counting_curve(std::span<const HalfLineOperatorSpec> modes, std::span<const double> E_grid);

/// Separated layer models: Dirichlet with b = +b_D and Neumann with b = -b_N,
/// a = lambda_m - 1/4 for each lambda_m < 0.
std::pair<CountingCurve, CountingCurve> predict_layer_counting(const SpectrumResult& spectrum, double b_D,
                                                               double b_N, double x0,
                                                               std::span<const double> E_grid);

/// Point-interaction model: a = lambda_m - (1 - delta)/4, b = 0, Dirichlet at 1.
CountingCurve predict_delta_counting(const SpectrumResult& spectrum, double delta,
                                     std::span<const double> E_grid);

std::vector<HalfLineOperatorSpec> layer_modes(const SpectrumResult& spectrum, BoundaryCondition bc, double b,
                                              double x0);
std::vector<HalfLineOperatorSpec> delta_modes(const SpectrumResult& spectrum, double delta);

}  // namespace cone_spectra
