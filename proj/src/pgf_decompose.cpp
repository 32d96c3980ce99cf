#include "rsdlab/pgf_decompose.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

namespace {

constexpr double kRangeSlack = 1e-12;

void check_unit_arg(double s, const char* what) {
  if (!(s >= 0.0) || !(s <= 1.0 + kRangeSlack)) {
    throw std::domain_error(detail::strf("%s: s=%.17g outside [0,1]", what, s));
  }
}

// Range-checked P(s); the component transforms apply phi^{-1} to real
// values in (0,1] only.
double pgf_unit_value(const PgfSeries& p, double s, const char* what) {
  check_unit_arg(s, what);
  const double v = p(s);
  if (!(v > 0.0) || v > 1.0 + kRangeSlack) {
    throw std::domain_error(detail::strf(
        "%s: P(s)=%.17g outside (0,1] at s=%.17g", what, v, s));
  }
  return std::min(v, 1.0);
}

}  // namespace

const char* to_string(PgfSupport support) {
  return support == PgfSupport::StartsAtZero ? "starts-at-0" : "starts-at-1";
}

PgfSeries::PgfSeries(std::string descriptor, std::function<double(double)> closed_form,
                     TruncSeries coeffs, PgfSupport support)
    : descriptor_(std::move(descriptor)),
      closed_form_(std::move(closed_form)),
      coeffs_(std::move(coeffs)),
      support_(support) {
  if (!closed_form_) {
    throw std::invalid_argument("PgfSeries: missing closed form");
  }
}

PgfSeries geometric_pgf(double lambda, std::size_t order) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error(detail::strf("geometric_pgf: lambda=%g must be positive", lambda));
  }
  const double q = 1.0 / (1.0 + lambda);
  const double ratio = lambda / (1.0 + lambda);
  TruncSeries coeffs(order);
  double term = q;
  for (std::size_t m = 0; m < order; ++m) {
    coeffs[m] = term;
    term *= ratio;
  }
  return PgfSeries(detail::strf("geometric(lambda=%g)", lambda),
                   [lambda](double s) { return 1.0 / (1.0 + lambda * (1.0 - s)); },
                   std::move(coeffs), PgfSupport::StartsAtZero);
}

PgfSeries geometric_pgf_from_q(double q, std::size_t order) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::domain_error(detail::strf("geometric_pgf_from_q: q=%g outside (0,1)", q));
  }
  return geometric_pgf((1.0 - q) / q, order);
}

PgfSeries poisson_pgf(double lambda, std::size_t order) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error(detail::strf("poisson_pgf: lambda=%g must be >= 0", lambda));
  }
  TruncSeries coeffs(order);
  double term = std::exp(-lambda);
  for (std::size_t m = 0; m < order; ++m) {
    coeffs[m] = term;
    term *= lambda / static_cast<double>(m + 1);
  }
  return PgfSeries(detail::strf("poisson(lambda=%g)", lambda),
                   [lambda](double s) { return std::exp(-lambda * (1.0 - s)); },
                   std::move(coeffs), PgfSupport::StartsAtZero);
}

PgfSeries bernoulli_pgf(double p, std::size_t order) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::domain_error(detail::strf("bernoulli_pgf: p=%g outside [0,1]", p));
  }
  TruncSeries coeffs(order);
  coeffs[0] = 1.0 - p;
  if (order > 1) coeffs[1] = p;
  return PgfSeries(detail::strf("bernoulli(p=%g)", p),
                   [p](double s) { return 1.0 - p + p * s; }, std::move(coeffs),
                   PgfSupport::StartsAtZero);
}

PgfSeries index_pgf_as_series(const IndexPGF& index, std::size_t order) {
  return PgfSeries(index.describe(), [index](double s) { return index(s); },
                   index.series(order), PgfSupport::StartsAtOne);
}

PgfSeries thin(const PgfSeries& p, double c) {
  if (!(c > 0.0) || !(c <= 1.0)) {
    throw std::domain_error(detail::strf("thin: c=%g outside (0,1]", c));
  }
  if (c == 1.0) return p;
  TruncSeries thinned = series_compose(
      p.coeffs(), TruncSeries::affine(1.0 - c, c, p.order()));
  return PgfSeries(detail::strf("thinned(c=%g)[%s]", c, p.describe().c_str()),
                   [p, c](double s) { return p(1.0 - c + c * s); },
                   std::move(thinned), PgfSupport::StartsAtZero);
}

PgfCandidate dsd_component(const PgfSeries& p, double c, double tol) {
  if (!(c > 0.0) || !(c <= 1.0)) {
    throw std::domain_error(detail::strf("dsd_component: c=%g outside (0,1]", c));
  }
  const PgfSeries denominator = thin(p, c);
  if (denominator.coeffs()[0] == 0.0) {
    throw std::domain_error(
        "dsd_component: P(1-c+cs) has zero constant term; quotient series undefined");
  }
  TruncSeries quotient = series_div(p.coeffs(), denominator.coeffs());
  const NonnegReport nn = coeff_nonneg(quotient, tol);
  PgfSeries candidate(
      detail::strf("dsd[%s](c=%g)", p.describe().c_str(), c),
      [p, denominator](double s) {
        const double den = denominator(s);
        if (std::abs(den) < 1e-14) {
          throw std::domain_error(detail::strf(
              "dsd_component: P(1-c+cs) = %.3e vanishes at s=%.17g", den, s));
        }
        return p(s) / den;
      },
      std::move(quotient), PgfSupport::StartsAtZero);
  return PgfCandidate{std::move(candidate), coeff_nonneg_report(nn, p.order())};
}

PgfCandidate dnid_component(const PgfSeries& p, const LTFamily& phi, double theta,
                            double tol) {
  if (!(theta >= 0.0) || !(theta < 1.0)) {
    throw std::domain_error(detail::strf("dnid_component: theta=%g outside [0,1)", theta));
  }
  if (!(p.coeffs()[0] > 0.0)) {
    throw std::domain_error(
        "dnid_component: P(0) must be positive (law on {0,1,...} with mass at 0)");
  }
  const double alpha = phi.alpha();
  // phi(theta phi^{-1}(P)) = ((1-theta) + theta P^{-1/alpha})^{-alpha}
  TruncSeries inner = series_real_pow(p.coeffs(), -1.0 / alpha);
  TruncSeries mix = series_add(TruncSeries::constant(1.0 - theta, p.order()),
                               series_scale(inner, theta));
  TruncSeries q = series_real_pow(mix, -alpha);
  const NonnegReport nn = coeff_nonneg(q, tol);
  PgfSeries candidate(
      detail::strf("dnid[%s](%s,theta=%g)", p.describe().c_str(),
                   phi.describe().c_str(), theta),
      [p, phi, theta](double s) {
        const double v = pgf_unit_value(p, s, "dnid_component");
        return phi(theta * phi.inverse(v));
      },
      std::move(q), PgfSupport::StartsAtZero);
  return PgfCandidate{std::move(candidate), coeff_nonneg_report(nn, p.order())};
}

PgfCandidate dphi_component(const PgfSeries& p, const LTFamily& phi, double theta,
                            double tol) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error(detail::strf("dphi_component: theta=%g outside (0,1)", theta));
  }
  if (!(p.coeffs()[0] > 0.0)) {
    throw std::domain_error(
        "dphi_component: P(0) must be positive (law on {0,1,...} with mass at 0)");
  }
  const double alpha = phi.alpha();
  // 1 - theta (P^{-1/alpha} - 1) = (1+theta) - theta P^{-1/alpha}
  TruncSeries inner = series_real_pow(p.coeffs(), -1.0 / alpha);
  TruncSeries q = series_sub(TruncSeries::constant(1.0 + theta, p.order()),
                             series_scale(inner, theta));
  const NonnegReport nn = coeff_nonneg(q, tol);
  ValidityReport validity = coeff_nonneg_report(nn, p.order());
  if (!nn.pass && nn.first_violation_index == 0) {
    validity.detail = detail::strf(
        "invalid candidate: mass at 0 would be %.9g (theta phi^{-1}(P(0)) > 1); %s",
        nn.violating_value, validity.detail.c_str());
  }
  PgfSeries candidate(
      detail::strf("dphi[%s](%s,theta=%g)", p.describe().c_str(),
                   phi.describe().c_str(), theta),
      [p, phi, theta](double s) {
        const double v = pgf_unit_value(p, s, "dphi_component");
        return 1.0 - theta * phi.inverse(v);
      },
      std::move(q), PgfSupport::StartsAtZero);
  return PgfCandidate{std::move(candidate), std::move(validity)};
}

namespace {

PgfCandidate composite_candidate(const std::string& mode, const PgfSeries& p_c,
                                 const PgfSeries& q_theta, double c, double theta,
                                 double tol) {
  TruncSeries thinned_q = series_compose(
      q_theta.coeffs(), TruncSeries::affine(1.0 - c, c, q_theta.order()));
  TruncSeries comp = series_mul(p_c.coeffs(), thinned_q);
  const NonnegReport nn = coeff_nonneg(comp, tol);
  PgfSeries candidate(
      detail::strf("%s-composite(c=%g,theta=%g)", mode.c_str(), c, theta),
      [p_c, q_theta, c](double s) { return p_c(s) * q_theta(1.0 - c + c * s); },
      std::move(comp), PgfSupport::StartsAtZero);
  return PgfCandidate{std::move(candidate), coeff_nonneg_report(nn, p_c.order())};
}

}  // namespace

DiscreteDecompositionReport dnrsd_composite(const PgfSeries& p, const LTFamily& phi,
                                            double c, double theta, double tol) {
  if (!(c > 0.0) || !(c <= 1.0)) {
    throw std::domain_error(detail::strf("dnrsd_composite: c=%g outside (0,1]", c));
  }
  PgfCandidate p_component = dsd_component(p, c, tol);
  PgfCandidate q_component = dnid_component(p, phi, theta, tol);
  PgfCandidate composite = composite_candidate("dnrsd", p_component.candidate,
                                               q_component.candidate, c, theta, tol);
  return DiscreteDecompositionReport{"dnrsd",
                                     c,
                                     theta,
                                     std::move(p_component),
                                     std::move(q_component),
                                     std::move(composite),
                                     std::nullopt};
}

DiscreteDecompositionReport dphirsd_composite(const PgfSeries& p, const LTFamily& phi,
                                              double c, double theta,
                                              const DphiConfig& cfg) {
  if (!(c > cfg.c_lower) || !(c < 1.0)) {
    throw std::domain_error(detail::strf(
        "dphirsd_composite: c=%g outside (%g,1)", c, cfg.c_lower));
  }
  PgfCandidate p_component = dsd_component(p, c, cfg.tol);
  PgfCandidate q_component = dphi_component(p, phi, theta, cfg.tol);
  PgfCandidate composite = composite_candidate("dphirsd", p_component.candidate,
                                               q_component.candidate, c, theta,
                                               cfg.tol);

  std::optional<double> theta_bound;
  if (cfg.estimate_theta_bound) {
    const auto valid_at = [&](double th) {
      const PgfCandidate q = dphi_component(p, phi, th, cfg.tol);
      TruncSeries thinned = series_compose(
          q.candidate.coeffs(), TruncSeries::affine(1.0 - c, c, q.candidate.order()));
      return coeff_nonneg(series_mul(p_component.candidate.coeffs(), thinned), cfg.tol)
          .pass;
    };
    double lo = 0.0;
    double hi = 1.0 - 1e-9;
    if (valid_at(hi)) {
      theta_bound = 1.0;
    } else {
      for (int i = 0; i < cfg.bisection_steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        (valid_at(mid) ? lo : hi) = mid;
      }
      theta_bound = lo;
    }
  }
  return DiscreteDecompositionReport{"dphirsd",
                                     c,
                                     theta,
                                     std::move(p_component),
                                     std::move(q_component),
                                     std::move(composite),
                                     theta_bound};
}

double dnid_representation_check(const PgfSeries& p, const LTFamily& phi,
                                 const PgfSeries& r, const EvalGrid& unit_grid) {
  double worst = 0.0;
  for (double s : unit_grid.points()) {
    check_unit_arg(s, "dnid_representation_check");
    const double rv = r(s);
    if (!(rv > 0.0)) {
      throw std::domain_error(detail::strf(
          "dnid_representation_check: R(s)=%.17g not positive at s=%.17g", rv, s));
    }
    const double composed = phi(-std::log(std::min(rv, 1.0)));
    worst = std::max(worst, std::abs(p(s) - composed));
  }
  return worst;
}

double dnid_representation_check(std::span<const double> p_values, const LTFamily& phi,
                                 std::span<const double> r_values) {
  if (p_values.size() != r_values.size()) {
    throw std::invalid_argument("dnid_representation_check: size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    const double rv = r_values[i];
    if (!(rv > 0.0)) {
      throw std::domain_error(detail::strf(
          "dnid_representation_check: R value %.17g not positive at index %zu", rv, i));
    }
    const double composed = phi(-std::log(std::min(rv, 1.0)));
    worst = std::max(worst, std::abs(p_values[i] - composed));
  }
  return worst;
}

bool PhiIdLimit::all_converged() const {
  for (bool flag : converged) {
    if (!flag) return false;
  }
  return true;
}

std::vector<double> default_theta_sequence() {
  std::vector<double> seq;
  seq.reserve(20);
  for (int i = 1; i <= 20; ++i) seq.push_back(std::ldexp(1.0, -i));
  return seq;
}

PhiIdLimit dphi_id_limit(const std::function<PgfSeries(double)>& q_family,
                         const LTFamily& phi, const std::vector<double>& theta_seq,
                         const EvalGrid& unit_grid, double cauchy_tol) {
  if (theta_seq.empty()) {
    throw std::invalid_argument("dphi_id_limit: empty theta sequence");
  }
  for (std::size_t i = 0; i < theta_seq.size(); ++i) {
    if (!(theta_seq[i] > 0.0) || (i > 0 && !(theta_seq[i] < theta_seq[i - 1]))) {
      throw std::invalid_argument(
          "dphi_id_limit: theta sequence must be strictly decreasing and positive");
    }
  }
  for (double s : unit_grid.points()) check_unit_arg(s, "dphi_id_limit");

  const std::size_t n = unit_grid.size();
  PhiIdLimit out{unit_grid,
                 std::vector<double>(n, 0.0),
                 std::vector<double>(n, 0.0),
                 std::vector<double>(n, 0.0),
                 std::vector<bool>(n, false),
                 std::vector<double>(n, 0.0)};
  std::vector<double> prev(n, std::numeric_limits<double>::quiet_NaN());

  for (double theta : theta_seq) {
    const PgfSeries q = q_family(theta);
    bool any_open = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (out.converged[j]) continue;
      const double s = unit_grid[j];
      const double x = std::max((1.0 - q(s)) / theta, 0.0);
      const double v = phi(x);
      out.p_values[j] = v;
      out.neg_log_r[j] = x;
      out.r_values[j] = std::exp(-x);
      out.theta_at_convergence[j] = theta;
      if (!std::isnan(prev[j]) && std::abs(v - prev[j]) < cauchy_tol) {
        out.converged[j] = true;
      } else {
        prev[j] = v;
        any_open = true;
      }
    }
    if (!any_open) break;
  }
  return out;
}

}  // namespace rsdlab
