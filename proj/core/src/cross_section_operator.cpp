#include "cone_spectra/cross_section_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cone_spectra/error.hpp"

namespace cone_spectra {

namespace {

struct Block {
  long double a, b, c;  // [[a, b], [b, c]]
};

// Negative eigenvalues of a symmetric 2x2 block.
int block_negatives(const Block& u) {
  const long double det = u.a * u.c - u.b * u.b;
  if (det < 0.0L) return 1;
  return (u.a + u.c) < 0.0L ? 2 : 0;
}

void check_profile(const CurvatureProfile& p) {
  if (p.size() < 64 || !is_power_of_two(p.size()) || !(p.length > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "profile grid must be a power of two >= 64 with length > 0");
  }
  for (double k : p.kappa) {
    if (!std::isfinite(k)) throw Error(ErrorKind::InvalidInput, "non-finite curvature value");
  }
}

constexpr double kVanishingCurvature = 1e-10;

}  // namespace

Eigen::MatrixXd PeriodicOperatorMatrix::dense() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const auto next = static_cast<Eigen::Index>((i + 1) % n);
    a(r, r) = diag[i];
    a(r, next) += offdiag;
    a(next, r) += offdiag;
  }
  return a;
}

Eigen::VectorXd PeriodicOperatorMatrix::apply(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(v.size());
  const auto m = static_cast<Eigen::Index>(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    out(i) = diag[static_cast<std::size_t>(i)] * v(i) +
             offdiag * (v((i + 1) % m) + v((i + m - 1) % m));
  }
  return out;
}

PeriodicOperatorMatrix assemble(const CurvatureProfile& profile, PotentialSign sign) {
  check_profile(profile);
  PeriodicOperatorMatrix m;
  m.n = profile.size();
  m.h = profile.step();
  const double kinetic = 2.0 / (m.h * m.h);
  const double s = sign == PotentialSign::Attractive ? -0.25 : 0.25;
  m.diag.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    m.diag[i] = kinetic + s * profile.kappa[i] * profile.kappa[i];
  }
  m.offdiag = -1.0 / (m.h * m.h);
  return m;
}

std::size_t count_eigenvalues_below(const PeriodicOperatorMatrix& m, double x) {
  const std::size_t n = m.n;
  const std::size_t blocks = n / 2;
  const long double h2 = static_cast<long double>(m.h) * m.h;
  const long double tiny = 1e-300L;
  // Scaled by h^2 so the coupling blocks are exactly -I.
  auto d = [&](std::size_t i) { return h2 * (static_cast<long double>(m.diag[i]) - x); };

  std::size_t count = 0;
  Block prev{};
  for (std::size_t j = 0; j < blocks; ++j) {
    Block u{d(j), 0.0L, d(n - 1 - j)};
    if (j == 0) u.b -= 1.0L;
    if (j + 1 == blocks) u.b -= 1.0L;
    if (j > 0) {
      long double det = prev.a * prev.c - prev.b * prev.b;
      if (det == 0.0L) det = tiny;
      u.a -= prev.c / det;
      u.c -= prev.a / det;
      u.b += prev.b / det;
    }
    count += static_cast<std::size_t>(block_negatives(u));
    prev = u;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const PeriodicOperatorMatrix& m, std::size_t count) {
  if (count > m.n) throw Error(ErrorKind::InvalidInput, "more eigenvalues requested than grid nodes");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double d : m.diag) {
    lo = std::min(lo, d - 2.0 * std::abs(m.offdiag));
    hi = std::max(hi, d + 2.0 * std::abs(m.offdiag));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::ConvergenceFailure, "non-finite operator entries");
  }
  std::vector<double> out(count);
  double floor = lo;
  for (std::size_t k = 0; k < count; ++k) {
    double a = floor, b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_eigenvalues_below(m, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[k] = 0.5 * (a + b);
    floor = a;  // eigenvalue k+1 is not below eigenvalue k
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& input, int max_sweeps) {
  Eigen::MatrixXd a = input;
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale) {
      std::vector<double> ev(static_cast<std::size_t>(n));
      for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
}

SpectrumResult eigenvalues(const CurvatureProfile& coarse, const CurvatureProfile& fine,
                           std::optional<std::size_t> count, PotentialSign sign) {
  if (fine.size() != 2 * coarse.size() || std::abs(fine.length - coarse.length) > 1e-12 * fine.length) {
    throw Error(ErrorKind::InvalidInput, "Richardson pair must share the length and double the grid");
  }
  const PeriodicOperatorMatrix mc = assemble(coarse, sign);
  const PeriodicOperatorMatrix mf = assemble(fine, sign);
  const std::size_t want = count.value_or(std::max<std::size_t>(2, count_eigenvalues_below(mf, 0.25) + 1));
  if (want == 0 || want > coarse.size() / 4) {
    throw Error(ErrorKind::InvalidInput, "eigenvalue count must lie in [1, n/4]");
  }
  const auto lc = lowest_eigenvalues(mc, want);
  const auto lf = lowest_eigenvalues(mf, want);

  SpectrumResult r;
  r.length = fine.length;
  r.grid_sizes = {coarse.size(), fine.size()};
  r.eigenvalues.resize(want);
  r.richardson_error.resize(want);
  for (std::size_t j = 0; j < want; ++j) {
    r.eigenvalues[j] = (4.0 * lf[j] - lc[j]) / 3.0;
    r.richardson_error[j] = std::abs(lf[j] - lc[j]) / 3.0;
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  for (double k : fine.kappa) r.max_abs_kappa = std::max(r.max_abs_kappa, std::abs(k));
  return r;
}

SpectrumResult compute_spectrum(const ProfileFactory& factory, std::size_t n,
                                std::optional<std::size_t> count, PotentialSign sign) {
  return eigenvalues(factory(n), factory(2 * n), count, sign);
}

CurvatureProfile halve(const CurvatureProfile& profile) {
  CurvatureProfile out;
  out.length = profile.length;
  out.source = profile.source;
  out.kappa.reserve(profile.size() / 2);
  for (std::size_t i = 0; i < profile.size(); i += 2) out.kappa.push_back(profile.kappa[i]);
  return out;
}

AccumulationConstant accumulation_constant(const SpectrumResult& spectrum) {
  AccumulationConstant ac;
  for (double e : spectrum.richardson_error) ac.error = std::max(ac.error, e);
  // Analytic great circles come out at ~1e-16, not exactly zero.
  if (spectrum.max_abs_kappa <= kVanishingCurvature) {
    ac.vanishing_curvature = true;
    return ac;
  }
  if (spectrum.eigenvalues.empty()) throw Error(ErrorKind::InvalidInput, "empty spectrum");

  const double l1 = spectrum.eigenvalues.front();
  if (l1 < 0.0 && !(spectrum.richardson_error.front() < 0.1 * std::abs(l1))) {
    throw Error(ErrorKind::Unconverged, "lambda_1 error bar exceeds 10% of |lambda_1|");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
    const double l = spectrum.eigenvalues[j];
    if (std::abs(l) < std::max(1e-10, spectrum.richardson_error[j])) {
      throw Error(ErrorKind::NearZeroEigenvalue,
                  "lambda_" + std::to_string(j + 1) + " = " + std::to_string(l) +
                      " is within its error bar of zero");
    }
    if (l < ac.threshold) {
      ac.negative.push_back(l);
      sum += std::sqrt(-l);
    }
  }
  ac.k_S = sum / (2.0 * std::numbers::pi);
  return ac;
}

double minmax_upper_bound(const CurvatureProfile& profile) {
  return -integrate_kappa_squared(profile) / (4.0 * profile.length);
}

double isoperimetric_bound(double length) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(length > 0.0) || length > two_pi) {
    throw Error(ErrorKind::InvalidInput, "isoperimetric bound needs 0 < length <= 2 pi");
  }
  return std::sqrt(two_pi * two_pi - length * length) / (2.0 * two_pi * length);
}

}  // namespace cone_spectra
