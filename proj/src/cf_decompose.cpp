#include "rsdlab/cf_decompose.hpp"

#include <cmath>
#include <stdexcept>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

namespace {

constexpr double kZeroDivisorTol = 1e-14;
constexpr double kImagTol = 1e-12;

void check_c(double c, const char* what) {
  if (!(c > 0.0) || !(c <= 1.0)) {
    throw std::domain_error(detail::strf("%s: c=%g outside (0,1]", what, c));
  }
}

void check_theta(double theta, const char* what) {
  if (!(theta >= 0.0) || !(theta < 1.0)) {
    throw std::domain_error(detail::strf("%s: theta=%g outside [0,1)", what, theta));
  }
}

// Real value in (0,1] of an admissible CF, or a domain error naming t.
double real_unit_value(std::complex<double> v, double t, const char* what) {
  if (std::abs(v.imag()) > kImagTol) {
    throw std::domain_error(detail::strf(
        "%s: f(t) has nonzero imaginary part %.3e at t=%.17g; phi^{-1} is applied "
        "to real values in (0,1] only",
        what, v.imag(), t));
  }
  const double re = v.real();
  if (!(re > 0.0) || re > 1.0 + kImagTol) {
    throw std::domain_error(detail::strf(
        "%s: f(t)=%.17g outside (0,1] at t=%.17g", what, re, t));
  }
  return std::min(re, 1.0);
}

}  // namespace

Curve sd_component(const ScalarCF& f, double c, const EvalGrid& grid) {
  check_c(c, "sd_component");
  Curve out{grid, {}};
  out.values.reserve(grid.size());
  for (double t : grid.points()) {
    const std::complex<double> den = f(c * t);
    if (std::abs(den) < kZeroDivisorTol) {
      throw std::domain_error(detail::strf(
          "sd_component: |f(ct)| = %.3e below the zero-divisor threshold %.0e "
          "at t=%.17g (c=%g); input is not admissible",
          std::abs(den), kZeroDivisorTol, t, c));
    }
    out.values.push_back(f(t) / den);
  }
  return out;
}

Curve n_component(const ScalarCF& f, const LTFamily& phi, double theta,
                  const EvalGrid& grid) {
  check_theta(theta, "n_component");
  Curve out{grid, {}};
  out.values.reserve(grid.size());
  for (double t : grid.points()) {
    const double re = real_unit_value(f(t), t, "n_component");
    out.values.emplace_back(phi(theta * phi.inverse(re)), 0.0);
  }
  return out;
}

bool DecompositionReport::all_valid() const {
  return f_valid.passed() && f_c_valid.passed() && f_theta_valid.passed() &&
         composite_valid.passed() && zero_scan.passed();
}

DecompositionReport rsd_composite(const ScalarCF& f, const LTFamily& phi, double c,
                                  double theta, const EvalGrid& grid) {
  check_c(c, "rsd_composite");
  check_theta(theta, "rsd_composite");

  Curve fv = eval_curve(f, grid);
  Curve f_c = sd_component(f, c, grid);
  Curve f_theta = n_component(f, phi, theta, grid);

  const Curve f_theta_ct = n_component(f, phi, theta, grid.scaled(c));
  Curve composite{grid, std::vector<std::complex<double>>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    composite.values[i] = f_c.values[i] * f_theta_ct.values[i];
  }

  ValidityReport f_valid = bochner_test(fv);
  ValidityReport f_c_valid = bochner_test(f_c);
  ValidityReport f_theta_valid = bochner_test(f_theta);
  ValidityReport composite_valid = bochner_test(composite);
  ValidityReport zero_scan = no_real_zero_scan(fv);

  return DecompositionReport{c,
                             theta,
                             f.describe(),
                             phi.describe(),
                             std::move(fv),
                             std::move(f_c),
                             std::move(f_theta),
                             std::move(composite),
                             std::move(f_valid),
                             std::move(f_c_valid),
                             std::move(f_theta_valid),
                             std::move(composite_valid),
                             std::move(zero_scan)};
}

ScalarCF nid_construct(const LTFamily& phi, const ScalarCF& h, const EvalGrid& grid) {
  for (double t : grid.points()) {
    const std::complex<double> hv = h(t);
    if (std::abs(hv.imag()) > kImagTol || !(hv.real() > 0.0)) {
      throw std::domain_error(detail::strf(
          "nid_construct: h not real-positive at t=%.17g", t));
    }
  }
  if (h.family() == CfFamily::Stable) {
    const auto p = h.params();  // {alpha, lambda}
    return ScalarCF::generalized_linnik(p[0], p[1], phi.alpha());
  }
  return ScalarCF::lt_compose(phi.alpha(), h);
}

double nid_inversion_residual(const ScalarCF& f, const LTFamily& phi, double theta,
                              const EvalGrid& grid) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error(
        detail::strf("nid_inversion_residual: theta=%g outside (0,1)", theta));
  }
  const Curve f_theta = n_component(f, phi, theta, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ft = real_unit_value(f(grid[i]), grid[i], "nid_inversion_residual");
    const double reconstructed = phi(phi.inverse(f_theta.values[i].real()) / theta);
    worst = std::max(worst, std::abs(ft - reconstructed));
  }
  return worst;
}

StableFactorizationReport nstable_factorization(const LTFamily& phi, double alpha,
                                                double lambda, double c,
                                                const EvalGrid& grid) {
  check_c(c, "nstable_factorization");
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw std::domain_error(
        detail::strf("nstable_factorization: alpha=%g outside (0,2]", alpha));
  }
  if (!(lambda > 0.0)) {
    throw std::domain_error(
        detail::strf("nstable_factorization: lambda=%g must be positive", lambda));
  }

  StableFactorizationReport report;
  report.alpha = alpha;
  report.lambda = lambda;
  report.c = c;

  for (double t : grid.points()) {
    const double s = lambda * std::pow(std::abs(t), alpha);
    const double quotient = phi(s) / phi(c * s);
    const double gap = std::abs(phi(s) - phi(c * s) * quotient);
    report.max_pointwise_gap = std::max(report.max_pointwise_gap, gap);
  }

  report.quotient_cm =
      complete_monotone_test([&phi, c](double s) { return phi(s) / phi(c * s); });
  if (report.quotient_cm.failed()) {
    report.quotient_cm.detail = detail::strf(
        "phi not SD at order %d: %s", report.quotient_cm.order.value_or(0),
        report.quotient_cm.detail.c_str());
  }
  return report;
}

Curve phi_component_experimental(const ScalarCF& f, const LTFamily& phi, double theta,
                                 const EvalGrid& grid) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error(
        detail::strf("phi_component_experimental: theta=%g outside (0,1)", theta));
  }
  Curve out{grid, {}};
  out.values.reserve(grid.size());
  for (double t : grid.points()) {
    const double re = real_unit_value(f(t), t, "phi_component_experimental");
    out.values.emplace_back(1.0 - theta * phi.inverse(re), 0.0);
  }
  return out;
}

}  // namespace rsdlab
