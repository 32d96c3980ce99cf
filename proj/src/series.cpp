#include "rsdlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

namespace {

std::size_t checked_order(std::size_t order) {
  if (order == 0) {
    throw std::invalid_argument("TruncSeries: order must be >= 1");
  }
  if (order > kMaxSeriesOrder) {
    throw std::invalid_argument(detail::strf(
        "TruncSeries: order %zu exceeds the configurable maximum %zu", order,
        kMaxSeriesOrder));
  }
  return order;
}

std::size_t common_order(const TruncSeries& a, const TruncSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(checked_order(order), 0.0) {}

TruncSeries::TruncSeries(std::initializer_list<double> coeffs) : coeffs_(coeffs) {
  checked_order(coeffs_.size());
}

TruncSeries TruncSeries::constant(double value, std::size_t order) {
  TruncSeries s(order);
  s[0] = value;
  return s;
}

TruncSeries TruncSeries::affine(double a0, double a1, std::size_t order) {
  TruncSeries s(order);
  s[0] = a0;
  if (order > 1) {
    s[1] = a1;
  } else if (a1 != 0.0) {
    throw std::invalid_argument("TruncSeries::affine: order 1 cannot hold a linear term");
  }
  return s;
}

double TruncSeries::eval(double s) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * s + coeffs_[i];
  }
  return acc;
}

double TruncSeries::sum() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c;
  return acc;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(common_order(a, b));
  for (std::size_t i = 0; i < out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(common_order(a, b));
  for (std::size_t i = 0; i < out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncSeries series_scale(const TruncSeries& a, double factor) {
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < out.order(); ++i) out[i] = factor * a[i];
  return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  TruncSeries out(n);
  for (std::size_t m = 0; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= m; ++j) acc += a[j] * b[m - j];
    out[m] = acc;
  }
  return out;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  if (b[0] == 0.0) {
    throw std::domain_error("series_div: division by a series with zero constant term");
  }
  TruncSeries out(n);
  for (std::size_t m = 0; m < n; ++m) {
    double acc = a[m];
    for (std::size_t j = 1; j <= m; ++j) acc -= b[j] * out[m - j];
    out[m] = acc / b[0];
  }
  return out;
}

TruncSeries series_compose(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = common_order(a, b);
  if (!(std::abs(b[0]) < 1.0)) {
    throw std::domain_error(detail::strf(
        "series_compose: composition center b(0)=%.17g outside (-1,1)", b[0]));
  }
  // Horner over the outer coefficients; each step is one truncated multiply.
  TruncSeries acc = TruncSeries::constant(a[n - 1], n);
  TruncSeries inner(n);
  for (std::size_t i = 0; i < n; ++i) inner[i] = b[i];
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += a[i];
  }
  return acc;
}

TruncSeries series_shift(const TruncSeries& a, std::size_t by) {
  TruncSeries out(a.order());
  for (std::size_t i = by; i < a.order(); ++i) out[i] = a[i - by];
  return out;
}

TruncSeries series_real_pow(const TruncSeries& a, double exponent) {
  if (!(a[0] > 0.0)) {
    throw std::domain_error(detail::strf(
        "series_real_pow: constant term %.17g must be positive", a[0]));
  }
  const std::size_t n = a.order();
  TruncSeries out(n);
  out[0] = std::pow(a[0], exponent);
  for (std::size_t m = 1; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
      acc += ((exponent + 1.0) * static_cast<double>(j) - static_cast<double>(m)) *
             a[j] * out[m - j];
    }
    out[m] = acc / (static_cast<double>(m) * a[0]);
  }
  return out;
}

NonnegReport coeff_nonneg(const TruncSeries& a, double tol) {
  NonnegReport report;
  report.tolerance = tol;
  report.pass = true;
  report.min_coefficient = a[0];
  for (std::size_t i = 0; i < a.order(); ++i) {
    report.min_coefficient = std::min(report.min_coefficient, a[i]);
    if (report.pass && a[i] < -tol) {
      report.pass = false;
      report.first_violation_index = i;
      report.violating_value = a[i];
    }
  }
  return report;
}

}  // namespace rsdlab
