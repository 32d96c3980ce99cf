#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rsdlab {

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr std::size_t kValiditySeriesOrder = 200;
inline constexpr std::size_t kMaxSeriesOrder = 512;

// Formal power series truncated at a fixed order. Every operation is the
// exact truncation of the corresponding ring operation; there is no hidden
// renormalization.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::initializer_list<double> coeffs);

  static TruncSeries constant(double value, std::size_t order);
  static TruncSeries affine(double a0, double a1, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double eval(double s) const;  // Horner on the truncation
  double sum() const;           // sum of coefficients, i.e. eval(1)

 private:
  std::vector<double> coeffs_;
};

// Binary operations truncate to the shorter operand's order.
TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, double factor);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// Requires b[0] != 0.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

// Coefficients of a(b(s)). The composition center b(0) must satisfy
// |b(0)| < 1 so the tail of a truncated a stays controlled.
TruncSeries series_compose(const TruncSeries& a, const TruncSeries& b);

// Multiplication by s^by (coefficients shifted up, exact).
TruncSeries series_shift(const TruncSeries& a, std::size_t by);

// a^r = exp(r log a) for real r, via the first-order recurrence
// a * (a^r)' = r * a' * a^r. Requires a[0] > 0.
TruncSeries series_real_pow(const TruncSeries& a, double exponent);

struct NonnegReport {
  bool pass = false;
  std::size_t first_violation_index = 0;  // valid only when !pass
  double violating_value = 0.0;           // valid only when !pass
  double min_coefficient = 0.0;
  double tolerance = 0.0;
};

// pass iff every coefficient >= -tol.
NonnegReport coeff_nonneg(const TruncSeries& a, double tol = 1e-12);

}  // namespace rsdlab
