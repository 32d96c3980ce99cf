#include "rsdlab/validity.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

ValidityReport bochner_test(const Curve& curve, double psd_tol) {
  const EvalGrid& grid = curve.grid;
  if (grid.kind() != GridKind::SymmetricAboutZero || !grid.uniform() ||
      grid.size() < 3 || grid.size() % 2 == 0) {
    throw std::invalid_argument(
        "bochner_test: values must be sampled on a uniform symmetric grid");
  }
  if (curve.values.size() != grid.size()) {
    throw std::invalid_argument("bochner_test: curve size mismatch");
  }

  const std::size_t mid = grid.size() / 2;
  const std::size_t dim = mid + 1;
  const double tol = psd_tol > 0.0 ? psd_tol : 1e-8 * static_cast<double>(dim);

  ValidityReport report;
  report.check = "bochner";
  report.tolerance = tol;
  report.resolution = dim;

  const std::complex<double> f0 = curve.values[mid];
  if (std::abs(f0 - 1.0) > 1e-9) {
    report.verdict = Verdict::Fail;
    report.evidence = std::abs(f0 - 1.0);
    report.index = mid;
    report.location = 0.0;
    report.detail = detail::strf("f(0) = %.12g%+.12gi differs from 1", f0.real(), f0.imag());
    return report;
  }
  for (std::size_t j = 1; j <= mid; ++j) {
    const double gap = std::abs(curve.values[mid + j] - std::conj(curve.values[mid - j]));
    if (gap > 1e-9) {
      report.verdict = Verdict::Fail;
      report.evidence = gap;
      report.index = mid + j;
      report.location = grid[mid + j];
      report.detail = detail::strf(
          "Hermitian symmetry violated at t=%.9g: |f(t) - conj(f(-t))| = %.3e",
          grid[mid + j], gap);
      return report;
    }
  }

  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      // t_j - t_k = (j - k) h lands on the grid at index mid + (j - k).
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          curve.values[mid + j - k];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();

  report.evidence = min_eig;
  if (min_eig >= -tol) {
    report.verdict = Verdict::Pass;
    report.detail = detail::strf(
        "PSD at resolution %zu: min eigenvalue %.3e >= -%.1e", dim, min_eig, tol);
  } else if (min_eig < -std::max(tol, kBochnerDefiniteFail)) {
    report.verdict = Verdict::Fail;
    report.detail = detail::strf(
        "not positive semidefinite: min eigenvalue %.6e < -%.1e", min_eig,
        std::max(tol, kBochnerDefiniteFail));
  } else {
    report.verdict = Verdict::Inconclusive;
    report.detail = detail::strf(
        "min eigenvalue %.3e within the noise band (-%.1e, -%.1e); refine the grid",
        min_eig, std::max(tol, kBochnerDefiniteFail), tol);
  }
  return report;
}

ValidityReport no_real_zero_scan(const Curve& curve, double zero_tol) {
  ValidityReport report;
  report.check = "no-real-zero";
  report.tolerance = zero_tol;
  report.resolution = curve.grid.size();
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const double mag = std::abs(curve.values[i]);
    if (mag < zero_tol) {
      report.verdict = Verdict::Fail;
      report.evidence = mag;
      report.index = i;
      report.location = curve.grid[i];
      report.detail = detail::strf("|f(t)| = %.3e < %.1e at t=%.9g", mag, zero_tol,
                                   curve.grid[i]);
      return report;
    }
  }
  report.verdict = Verdict::Pass;
  report.detail = "no zeros on the scanned grid";
  return report;
}

ValidityReport complete_monotone_test(const std::function<double(double)>& g,
                                      const CmTestConfig& cfg) {
  if (!(cfg.s_min > 0.0) || !(cfg.s_max > cfg.s_min) || cfg.points < 2 ||
      cfg.max_order < 1) {
    throw std::invalid_argument("complete_monotone_test: bad configuration");
  }
  ValidityReport report;
  report.check = "complete-monotone";
  report.tolerance = cfg.rel_tol;
  report.resolution = cfg.points;

  const double log_lo = std::log(cfg.s_min);
  const double log_hi = std::log(cfg.s_max);
  std::vector<double> stencil(static_cast<std::size_t>(cfg.max_order) + 1);

  for (int n = 1; n <= cfg.max_order; ++n) {
    for (std::size_t ip = 0; ip < cfg.points; ++ip) {
      const double frac = static_cast<double>(ip) / static_cast<double>(cfg.points - 1);
      const double s = std::exp(log_lo + frac * (log_hi - log_lo));
      const double h = cfg.step_fraction * s;
      for (int i = 0; i <= n; ++i) {
        stencil[static_cast<std::size_t>(i)] = g(s + static_cast<double>(i) * h);
      }
      // Forward differences in place; magnitude tracks the alternating sum's
      // terms so the sign test is relative.
      double magnitude = 0.0;
      for (int i = 0; i <= n; ++i) magnitude += std::abs(stencil[static_cast<std::size_t>(i)]);
      for (int level = 0; level < n; ++level) {
        for (int i = 0; i < n - level; ++i) {
          stencil[static_cast<std::size_t>(i)] =
              stencil[static_cast<std::size_t>(i) + 1] - stencil[static_cast<std::size_t>(i)];
        }
      }
      const double signed_diff = (n % 2 == 0 ? 1.0 : -1.0) * stencil[0];
      if (signed_diff < -cfg.rel_tol * std::max(magnitude, 1e-300)) {
        report.verdict = Verdict::Fail;
        report.evidence = signed_diff;
        report.order = n;
        report.location = s;
        report.detail = detail::strf(
            "sign violation at order %d, s=%.6g: (-1)^n diff^n g = %.6e", n, s,
            signed_diff);
        return report;
      }
    }
  }
  report.verdict = Verdict::Pass;
  report.order = cfg.max_order;
  report.detail = detail::strf(
      "differences alternate in sign through order %d on [%g, %g]", cfg.max_order,
      cfg.s_min, cfg.s_max);
  return report;
}

ValidityReport coeff_nonneg_report(const NonnegReport& r, std::size_t order) {
  ValidityReport report;
  report.check = "coeff-nonneg";
  report.tolerance = r.tolerance;
  report.resolution = order;
  report.evidence = r.min_coefficient;
  if (r.pass) {
    report.verdict = Verdict::Pass;
    report.detail = detail::strf("first %zu coefficients >= -%.1e (min %.3e)", order,
                                 r.tolerance, r.min_coefficient);
  } else {
    report.verdict = Verdict::Fail;
    report.index = r.first_violation_index;
    report.detail = detail::strf("coefficient %zu = %.9g below -%.1e",
                                 r.first_violation_index, r.violating_value,
                                 r.tolerance);
  }
  return report;
}

}  // namespace rsdlab
