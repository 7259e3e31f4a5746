#include "cone_spectra/point_interaction.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cone_spectra/error.hpp"
#include "cone_spectra/sturm.hpp"

namespace cone_spectra {

std::string_view to_string(BoundaryCondition bc) noexcept {
  return bc == BoundaryCondition::Dirichlet ? "D" : "N";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "D" || text == "d" || text == "dirichlet" || text == "Dirichlet") {
    return BoundaryCondition::Dirichlet;
  }
  if (text == "N" || text == "n" || text == "neumann" || text == "Neumann") {
    return BoundaryCondition::Neumann;
  }
  throw Error(ErrorKind::InvalidInput, "boundary condition must be D or N, got '" + std::string(text) + "'");
}

namespace {

using ld = long double;

// Signed spectral variable: lambda = q |q|, so q < 0 is the bound-state branch.
ld lambda_of(ld q) { return q * std::fabs(q); }

// Even-mode matching defect divided by the norm of (value, derivative) at the
// end point. Continuous in q, and its zeros are exactly the even eigenvalues.
ld even_defect(ld q, ld L, BoundaryCondition bc) {
  ld v, dv;
  const ld k = std::fabs(q);
  if (bc == BoundaryCondition::Dirichlet) {
    if (q < 0) {
      v = std::sinh(k * L) / k;
      dv = std::cosh(k * L);
    } else if (q > 0) {
      v = std::sin(k * L) / k;
      dv = std::cos(k * L);
    } else {
      v = L;
      dv = 1;
    }
  } else {
    if (q < 0) {
      v = std::cosh(k * L);
      dv = k * std::sinh(k * L);
    } else if (q > 0) {
      v = std::cos(k * L);
      dv = -k * std::sin(k * L);
    } else {
      v = 1;
      dv = 0;
    }
  }
  return (v - 2 * dv) / std::sqrt(v * v + dv * dv);
}

ld bisect(ld a, ld b, ld L, BoundaryCondition bc) {
  ld fa = even_defect(a, L, bc);
  for (int iter = 0; iter < 200; ++iter) {
    const ld mid = 0.5L * (a + b);
    if (mid <= a || mid >= b) break;
    const ld fm = even_defect(mid, L, bc);
    if (fm == 0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5L * (a + b);
}

}  // namespace

ModelSpectrum solve_transcendental(const IntervalDeltaSpec& spec, bool require_negative) {
  if (!(spec.L >= 1.0)) throw Error(ErrorKind::InvalidInput, "transcendental solver needs L >= 1");
  const ld L = spec.L;
  const ld pi = std::numbers::pi_v<ld>;
  const ld odd = spec.bc == BoundaryCondition::Dirichlet ? (pi / L) * (pi / L)
                                                         : (pi / (2 * L)) * (pi / (2 * L));
  const ld q_end = std::sqrt(odd);

  // Scan q in steps of 1e-3 from -2 (lambda = -4) up to the first odd mode.
  std::vector<ld> roots;
  ld prev_q = -2.0L;
  ld prev_f = even_defect(prev_q, L, spec.bc);
  for (long i = 1; roots.size() < 2; ++i) {
    ld q = static_cast<ld>(i - 2000) / 1000.0L;
    if (q > q_end) q = q_end;
    const ld f = even_defect(q, L, spec.bc);
    if (f == 0) {
      roots.push_back(q);
    } else if (prev_f != 0 && (f < 0) != (prev_f < 0)) {
      roots.push_back(bisect(prev_q, q, L, spec.bc));
    }
    prev_q = q;
    prev_f = f;
    if (q >= q_end) break;
  }
  if (roots.empty()) {
    throw Error(ErrorKind::ConvergenceFailure, "no even mode below the first odd mode");
  }

  ModelSpectrum out;
  out.method = ModelMethod::Transcendental;
  const ld q1 = roots.front();
  out.lambda1 = static_cast<double>(lambda_of(q1));
  out.lambda2 = static_cast<double>(roots.size() > 1 ? std::min(lambda_of(roots[1]), odd) : odd);
  out.residual = static_cast<double>(std::fabs(even_defect(q1, L, spec.bc)));
  out.threshold_gap = q1 < 0 ? static_cast<double>((0.5L + q1) * (0.5L - q1))
                             : static_cast<double>(lambda_of(q1) + 0.25L);
  if (require_negative && !(out.lambda1 < 0.0)) {
    throw Error(ErrorKind::NoNegativeRoot,
                "tanh(kL) = 2k has no root k > 0 for L = " + std::to_string(spec.L) + " <= 2");
  }
  return out;
}

std::pair<double, double> finite_difference_pair(const IntervalDeltaSpec& spec, std::size_t n) {
  if (!(spec.L > 0.0)) throw Error(ErrorKind::InvalidInput, "L must be positive");
  if (n < 256 || n % 2 != 0) throw Error(ErrorKind::InvalidInput, "FD grid needs an even n >= 256");
  const ld h = 2.0L * spec.L / static_cast<ld>(n);
  const ld inv_h2 = 1.0L / (h * h);
  const std::size_t mid = n / 2;

  Tridiagonal t;
  if (spec.bc == BoundaryCondition::Dirichlet) {
    t.diag.assign(n - 1, 2.0L * inv_h2);
    t.off.assign(n - 2, -inv_h2);
    t.diag[mid - 1] -= 1.0L / h;
  } else {
    // Lumped mass h/2 at the end nodes gives the sqrt(2) couplings.
    t.diag.assign(n + 1, 2.0L * inv_h2);
    t.off.assign(n, -inv_h2);
    t.off.front() = t.off.back() = -std::sqrt(2.0L) * inv_h2;
    t.diag[mid] -= 1.0L / h;
  }
  return {static_cast<double>(kth_eigenvalue(t, 0)), static_cast<double>(kth_eigenvalue(t, 1))};
}

ModelSpectrum solve_finite_difference(const IntervalDeltaSpec& spec, std::size_t n) {
  const auto coarse = finite_difference_pair(spec, n);
  const auto fine = finite_difference_pair(spec, 2 * n);
  ModelSpectrum out;
  out.method = ModelMethod::FiniteDifference;
  out.lambda1 = (4.0 * fine.first - coarse.first) / 3.0;
  out.lambda2 = (4.0 * fine.second - coarse.second) / 3.0;
  out.residual = std::abs(fine.first - coarse.first) / 3.0;
  out.threshold_gap = out.lambda1 + 0.25;
  return out;
}

}  // namespace cone_spectra
