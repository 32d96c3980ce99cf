#include "rsdlab/lt_family.hpp"

#include <cmath>
#include <stdexcept>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

LTFamily::LTFamily(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error(
        detail::strf("LTFamily: alpha=%g must be positive", alpha));
  }
}

LTFamily LTFamily::exponential_mixture(double alpha) { return LTFamily(alpha); }

LTFamily LTFamily::harris_generator(int k) {
  if (k < 1) {
    throw std::domain_error("LTFamily::harris_generator: k must be >= 1");
  }
  return LTFamily(1.0 / static_cast<double>(k));
}

double LTFamily::operator()(double s) const {
  if (!(s >= 0.0)) {
    throw std::domain_error(detail::strf("LTFamily: phi evaluated at s=%g < 0", s));
  }
  return std::pow(1.0 + s, -alpha_);
}

double LTFamily::inverse(double u) const {
  if (!(u > 0.0) || !(u <= 1.0)) {
    throw std::domain_error(
        detail::strf("lt_inverse: u=%.17g outside (0,1]", u));
  }
  return std::pow(u, -1.0 / alpha_) - 1.0;
}

int LTFamily::reciprocal_integer() const {
  const double inv = 1.0 / alpha_;
  const long long k = std::llround(inv);
  if (k >= 1 && std::abs(alpha_ * static_cast<double>(k) - 1.0) <= 1e-9) {
    return static_cast<int>(k);
  }
  return 0;
}

std::string LTFamily::describe() const {
  return detail::strf("exp-mixture(alpha=%g)", alpha_);
}

double lt_inverse(const LTFamily& phi, double u) { return phi.inverse(u); }

IndexPGF::IndexPGF(const LTFamily& phi, double theta)
    : theta_(theta), k_(phi.reciprocal_integer()), alpha_(phi.alpha()) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error(
        detail::strf("index_pgf: theta=%g outside (0,1)", theta));
  }
  if (k_ == 0) {
    throw std::domain_error(detail::strf(
        "index_pgf: alpha=%g is not 1/k for an integer k; the composed "
        "phi(phi^{-1}(s)/theta) is not a PGF for this family",
        phi.alpha()));
  }
}

double IndexPGF::operator()(double s) const {
  if (!(std::abs(s) <= 1.0)) {
    throw std::domain_error(detail::strf("IndexPGF: |s|=%g exceeds 1", std::abs(s)));
  }
  const double kk = static_cast<double>(k_);
  const double sk = std::pow(s, k_);
  return std::pow(theta_, 1.0 / kk) * s * std::pow(1.0 - (1.0 - theta_) * sk, -1.0 / kk);
}

std::complex<double> IndexPGF::operator()(std::complex<double> s) const {
  if (!(std::abs(s) <= 1.0 + 1e-12)) {
    throw std::domain_error("IndexPGF: |s| exceeds 1");
  }
  const double kk = static_cast<double>(k_);
  std::complex<double> sk(1.0, 0.0);
  for (int i = 0; i < k_; ++i) sk *= s;
  return std::pow(theta_, 1.0 / kk) * s *
         std::pow(std::complex<double>(1.0, 0.0) - (1.0 - theta_) * sk, -1.0 / kk);
}

double IndexPGF::compose_numeric(double s) const {
  if (s == 0.0) return 0.0;  // phi^{-1}(u) -> inf as u -> 0+, and phi(inf) = 0
  if (!(s > 0.0) || !(s <= 1.0)) {
    throw std::domain_error(detail::strf("IndexPGF: s=%g outside [0,1]", s));
  }
  const LTFamily phi = LTFamily::exponential_mixture(alpha_);
  return phi(phi.inverse(s) / theta_);
}

TruncSeries IndexPGF::series(std::size_t order) const {
  // theta^{1/k} * s * (1 - (1-theta) s^k)^{-1/k}; the shift keeps the
  // Harris lattice (support on 1 + kZ+) exact.
  TruncSeries base(order);
  base[0] = 1.0;
  if (static_cast<std::size_t>(k_) < order) {
    base[static_cast<std::size_t>(k_)] = -(1.0 - theta_);
  }
  const double kk = static_cast<double>(k_);
  TruncSeries powed = series_real_pow(base, -1.0 / kk);
  return series_scale(series_shift(powed, 1), std::pow(theta_, 1.0 / kk));
}

double IndexPGF::mean() const { return 1.0 / theta_; }

std::string IndexPGF::describe() const {
  if (k_ == 1) return detail::strf("geometric-index(theta=%g)", theta_);
  return detail::strf("harris-index(k=%d,theta=%g)", k_, theta_);
}

IndexPGF index_pgf(const LTFamily& phi, double theta) { return IndexPGF(phi, theta); }

double poincare_residual(const LTFamily& phi, double theta, const EvalGrid& grid) {
  if (grid.points().front() < 0.0) {
    throw std::invalid_argument("poincare_residual: grid must be nonnegative");
  }
  const IndexPGF p(phi, theta);
  double worst = 0.0;
  for (double t : grid.points()) {
    const double lhs = phi(t);
    const double rhs = p(phi(theta * t));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace rsdlab
