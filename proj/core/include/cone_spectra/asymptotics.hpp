#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cone_spectra/cross_section_operator.hpp"
#include "cone_spectra/sphere_curves.hpp"

namespace cone_spectra {

enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };
std::string_view to_string(CheckStatus s) noexcept;

/// One numeric claim: `value` compared with `reference` at `tolerance`.
/// `error` is the numerical error bar of `value` (0 when exact).
struct Measurement {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  double error = 0.0;
  CheckStatus status = CheckStatus::Pass;
};

struct ValidationReport {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Measurement> measured;
  std::vector<std::string> notes;
};

struct SuiteOptions {
  std::size_t n = 2048;        // coarse grid of the K_S Richardson pair
  bool quick = false;          // fewer loops and E points
  std::uint64_t seed = 7;
  PotentialSign potential = PotentialSign::Attractive;  // Repulsive = mutation self-test
};

/// Fourier loops with theta0 ~ U[pi/6, pi/2], four harmonics with N(0, 0.03)
/// coefficients truncated to |c| <= 0.1, theta0 shrunk by 3% until l <= 2 pi.
std::vector<SphericalLoop> random_fourier_loops(std::size_t count, std::uint64_t seed);

/// k_S >= sqrt(4 pi^2 - l^2) / (4 pi l) for every loop with l <= 2 pi,
/// equality for circles, strict beyond the error bar otherwise.
ValidationReport check_isoperimetric(const std::vector<SphericalLoop>& loops, const SuiteOptions& options = {});

/// Synthetic profiles with m plateaus of half-width eps on a loop of length 2 pi:
/// k_S must grow strictly along the (decreasing) eps list and at least m
/// eigenvalues must be negative for eps <= `must_hold_at`.
ValidationReport check_multiplicity_growth(int m, const std::vector<double>& eps_list,
                                           const SuiteOptions& options = {},
                                           double must_hold_at = 0.0);

/// Loops of the isoperimetric check: three circles, one loop longer than
/// 2 pi (skipped), then 100 random Fourier loops (20 with `quick`).
std::vector<SphericalLoop> isoperimetric_test_loops(const SuiteOptions& options);

/// Both reports from one pass over the loops (profiles are shared).
std::pair<ValidationReport, ValidationReport> check_isoperimetric_and_gauss_bonnet(
    const std::vector<SphericalLoop>& loops, const SuiteOptions& options = {});

ValidationReport check_circle_closed_forms(const SuiteOptions& options = {});
ValidationReport check_minmax_bound(const std::vector<SphericalLoop>& loops, const SuiteOptions& options = {});
ValidationReport check_gauss_bonnet(const std::vector<SphericalLoop>& loops, const SuiteOptions& options = {});
ValidationReport check_interval_models(const SuiteOptions& options = {});
ValidationReport check_log_slope_law(const SuiteOptions& options = {});
ValidationReport check_reduced_model_slopes(const SuiteOptions& options = {});
ValidationReport check_oracle_consistency(const SuiteOptions& options = {});

/// Checks c01..c09 in fixed order. Deterministic for fixed options.
std::vector<ValidationReport> run_validation_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<ValidationReport>& reports);

}  // namespace cone_spectra
