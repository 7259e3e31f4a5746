#pragma once

#include <cstddef>
#include <string_view>

namespace cone_spectra {

enum class BoundaryCondition { Dirichlet, Neumann };

std::string_view to_string(BoundaryCondition bc) noexcept;  // "D" or "N"
BoundaryCondition parse_boundary_condition(std::string_view text);

/// -u'' on (-L, L) with u'(0+) - u'(0-) = -u(0) and bc at both ends.
struct IntervalDeltaSpec {
  double L = 0.0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
};

enum class ModelMethod { Transcendental, FiniteDifference };

struct ModelSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  ModelMethod method = ModelMethod::Transcendental;
  double residual = 0.0;  // matching-condition defect, or Richardson error estimate for FD
  double threshold_gap = 0.0;  // lambda1 + 1/4, computed without cancellation
};

/// Even modes solve S(L) - 2 S'(L) = 0 (Dirichlet) or C(L) - 2 C'(L) = 0
/// (Neumann), where S, C are the sine/cosine-type solutions of -u'' = lambda u
/// from the end point; for lambda = -k^2 these read tanh(kL) = 2k and
/// coth(kL) = 2k. Odd modes ignore the point interaction. With
/// `require_negative`, NoNegativeRoot is raised when lambda1 >= 0
/// (Dirichlet with L <= 2).
ModelSpectrum solve_transcendental(const IntervalDeltaSpec& spec, bool require_negative = false);

/// Linear finite elements with lumped mass on n intervals (n even, a node at
/// 0), Richardson-extrapolated over n and 2n.
ModelSpectrum solve_finite_difference(const IntervalDeltaSpec& spec, std::size_t n = 4096);

/// Single-grid FD eigenvalues (lambda1, lambda2) without extrapolation.
std::pair<double, double> finite_difference_pair(const IntervalDeltaSpec& spec, std::size_t n);

}  // namespace cone_spectra
