#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cone_spectra {

/// Symmetric tridiagonal matrix held in extended precision.
struct Tridiagonal {
  std::vector<long double> diag;
  std::vector<long double> off;  // off[i] couples i and i+1; size n-1

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sylvester inertia of T - x I).
std::size_t sturm_count(const Tridiagonal& t, long double x);

/// Gershgorin interval containing the whole spectrum.
std::pair<long double, long double> gershgorin_bounds(const Tridiagonal& t);

/// The k-th smallest eigenvalue (k = 0 is the lowest) by bisection on the
/// Sturm count, to the resolution of long double.
long double kth_eigenvalue(const Tridiagonal& t, std::size_t k);

}  // namespace cone_spectra
