#pragma once

#include <complex>
#include <string>

#include "rsdlab/grid.hpp"
#include "rsdlab/series.hpp"

namespace rsdlab {

// Laplace transform phi(s) = (1+s)^(-alpha) on s >= 0, the exponential
// gamma-mixture family. It solves the Poincare equation
// phi(t) = P_theta(phi(theta t)) exactly when alpha = 1/k for an integer k,
// and only then does the induced index family P_theta exist.
class LTFamily {
 public:
  static LTFamily exponential_mixture(double alpha);
  // alpha = 1/k shorthand.
  static LTFamily harris_generator(int k);

  double alpha() const { return alpha_; }
  double operator()(double s) const;  // phi(s), s >= 0
  double inverse(double u) const;     // phi^{-1}(u), u in (0,1]

  // Returns k >= 1 when alpha is 1/k for an integer k, 0 otherwise.
  int reciprocal_integer() const;

  std::string describe() const;

 private:
  explicit LTFamily(double alpha);
  double alpha_;
};

double lt_inverse(const LTFamily& phi, double u);

// Index PGF P_theta(s) = phi(phi^{-1}(s)/theta) of the random index N_theta:
// geometric on {1,2,...} for k=1, the Harris law on 1+kZ+ for k>=2.
// Closed form theta^(1/k) * s * (1-(1-theta) s^k)^(-1/k); the numeric
// phi/phi^{-1} composition is kept alongside as an oracle.
class IndexPGF {
 public:
  IndexPGF(const LTFamily& phi, double theta);

  double theta() const { return theta_; }
  int k() const { return k_; }

  double operator()(double s) const;
  std::complex<double> operator()(std::complex<double> s) const;
  // phi(phi^{-1}(s)/theta); agrees with the closed form on (0,1].
  double compose_numeric(double s) const;

  TruncSeries series(std::size_t order = kValiditySeriesOrder) const;
  double mean() const;  // P'(1) = 1/theta for this family

  std::string describe() const;

 private:
  double theta_;
  int k_;
  double alpha_;
};

IndexPGF index_pgf(const LTFamily& phi, double theta);

// sup over the grid of |phi(t) - P_theta(phi(theta t))|; the defining
// residual of the Poincare equation. Grid points must be nonnegative.
double poincare_residual(const LTFamily& phi, double theta, const EvalGrid& grid);

}  // namespace rsdlab
