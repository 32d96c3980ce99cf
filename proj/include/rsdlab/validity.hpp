#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "rsdlab/scalar_cf.hpp"
#include "rsdlab/series.hpp"

namespace rsdlab {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

// Outcome of one validity check. A fail always carries concrete evidence
// (the offending eigenvalue, coefficient, or difference order); a pass
// records the resolution it was established at. A finite grid cannot prove
// positive definiteness, so marginal eigenvalue failures come back
// Inconclusive rather than Fail.
struct ValidityReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string check;
  std::string detail;
  double evidence = std::numeric_limits<double>::quiet_NaN();
  std::optional<std::size_t> index;    // coefficient / grid index
  std::optional<int> order;            // finite-difference order
  std::optional<double> location;      // offending t or s
  double tolerance = 0.0;
  std::size_t resolution = 0;          // matrix dimension or grid size

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

// Eigenvalue floor below which a curve is definitely not positive
// semidefinite at the tested resolution; between -tol and this floor the
// verdict is Inconclusive.
inline constexpr double kBochnerDefiniteFail = 1e-6;

// Positive-definiteness test of CF values sampled on a uniform symmetric
// grid with 2m+1 points: builds the (m+1)x(m+1) Hermitian Toeplitz matrix
// M[j][k] = f((j-k) h), whose differences all land on the grid, and checks
// its smallest eigenvalue along with f(0)=1 and Hermitian symmetry.
// psd_tol <= 0 selects the default 1e-8 * (m+1).
ValidityReport bochner_test(const Curve& curve, double psd_tol = 0.0);

// Fails iff |f| < zero_tol anywhere on the grid.
ValidityReport no_real_zero_scan(const Curve& curve, double zero_tol = 1e-12);

struct CmTestConfig {
  double s_min = 1e-2;
  double s_max = 1e2;
  std::size_t points = 40;     // log-spaced
  int max_order = 8;
  double rel_tol = 1e-8;       // relative to the alternating sum's magnitude
  double step_fraction = 0.1;  // h = step_fraction * s
};

// Complete-monotonicity probe: forward differences of orders 1..max_order
// must carry sign (-1)^n at every grid point, up to rel_tol.
ValidityReport complete_monotone_test(const std::function<double(double)>& g,
                                      const CmTestConfig& cfg = {});

// Adapter from the series-engine nonnegativity report.
ValidityReport coeff_nonneg_report(const NonnegReport& r, std::size_t order);

}  // namespace rsdlab
