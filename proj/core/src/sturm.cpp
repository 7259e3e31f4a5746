#include "cone_spectra/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cone_spectra/error.hpp"

namespace cone_spectra {

std::size_t sturm_count(const Tridiagonal& t, long double x) {
  const std::size_t n = t.size();
  const long double tiny = std::numeric_limits<long double>::min() * 1e4L;
  std::size_t count = 0;
  long double q = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double e2 = i == 0 ? 0.0L : t.off[i - 1] * t.off[i - 1];
    q = (t.diag[i] - x) - (i == 0 ? 0.0L : e2 / q);
    if (q == 0.0L) q = -tiny;
    if (q < 0.0L) ++count;
  }
  return count;
}

std::pair<long double, long double> gershgorin_bounds(const Tridiagonal& t) {
  long double lo = std::numeric_limits<long double>::infinity();
  long double hi = -lo;
  for (std::size_t i = 0; i < t.size(); ++i) {
    long double r = 0.0L;
    if (i > 0) r += std::fabs(t.off[i - 1]);
    if (i + 1 < t.size()) r += std::fabs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

long double kth_eigenvalue(const Tridiagonal& t, std::size_t k) {
  if (k >= t.size()) throw Error(ErrorKind::InvalidInput, "eigenvalue index out of range");
  auto [lo, hi] = gershgorin_bounds(t);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::ConvergenceFailure, "non-finite matrix entries");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace cone_spectra
