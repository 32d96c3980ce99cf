#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "rsdlab/grid.hpp"
#include "rsdlab/sample_batch.hpp"

namespace rsdlab {

enum class CfFamily {
  Laplace,                 // 1 / (1 + b^2 t^2)
  Linnik,                  // 1 / (1 + lambda |t|^alpha)
  SymmetricGammaMixture,   // (1 + t^2)^(-1/k)
  Degenerate,              // e^{i a t}
  Stable,                  // e^{-lambda |t|^alpha}, symmetric
  GeneralizedLinnik,       // (1 + lambda |t|^alpha)^(-beta)
  LtCompose,               // phi(-log h(t)) for a positive CF h
  Product,
  Mixture,
  Empirical,
};

const char* to_string(CfFamily family);

// A characteristic function as an immutable value: either one of the
// closed-form families above, a product/mixture of CFs, or the empirical
// CF of a sample batch. Copies share the underlying node.
class ScalarCF {
 public:
  static ScalarCF laplace(double scale);
  static ScalarCF linnik(double alpha, double lambda);
  static ScalarCF symmetric_gamma_mixture(int k);
  static ScalarCF degenerate(double point = 0.0);
  static ScalarCF stable(double alpha, double lambda);
  static ScalarCF generalized_linnik(double alpha, double lambda, double beta);
  // phi(-log h(t)) with phi(s) = (1+s)^(-phi_alpha); h must stay real-positive.
  static ScalarCF lt_compose(double phi_alpha, ScalarCF h);
  static ScalarCF product_of(ScalarCF lhs, ScalarCF rhs);
  static ScalarCF mixture_of(std::vector<double> weights, std::vector<ScalarCF> parts);
  static ScalarCF empirical(SampleBatch samples);

  std::complex<double> operator()(double t) const;

  CfFamily family() const;
  // Family parameters in declaration order (empty for product/mixture/empirical).
  std::vector<double> params() const;
  // Scale the default grid extent is based on.
  double natural_scale() const;
  std::string describe() const;

 private:
  struct Node;
  explicit ScalarCF(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Pointwise evaluation; deterministic for closed forms.
std::vector<std::complex<double>> eval_cf(const ScalarCF& f, const EvalGrid& grid);

// Pointwise product, i.e. independent convolution.
ScalarCF cf_product(const ScalarCF& f, const ScalarCF& g);

// 129 equally spaced points on [-10 b, 10 b] with b the family scale.
EvalGrid default_grid(const ScalarCF& f);

// A CF (or candidate) evaluated on a grid.
struct Curve {
  EvalGrid grid;
  std::vector<std::complex<double>> values;
};

Curve eval_curve(const ScalarCF& f, const EvalGrid& grid);

// Empirical CF of a batch on a fixed grid: the sample mean of e^{itX},
// kept as cached cosine/sine sums. The estimate at t=0 is exactly 1.
class EmpiricalCF {
 public:
  EmpiricalCF(SampleBatch samples, EvalGrid grid);

  const EvalGrid& grid() const { return grid_; }
  const SampleBatch& samples() const { return *samples_; }
  const std::vector<double>& cos_sums() const { return cos_sums_; }
  const std::vector<double>& sin_sums() const { return sin_sums_; }

  std::complex<double> value(std::size_t i) const;
  std::vector<std::complex<double>> values() const;
  Curve curve() const;

 private:
  std::shared_ptr<const SampleBatch> samples_;
  EvalGrid grid_;
  std::vector<double> cos_sums_;
  std::vector<double> sin_sums_;
};

EmpiricalCF empirical_cf(SampleBatch samples, const EvalGrid& grid);

}  // namespace rsdlab
