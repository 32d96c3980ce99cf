#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "rsdlab/cf_decompose.hpp"
#include "rsdlab/grid.hpp"
#include "rsdlab/sample_batch.hpp"

namespace rsdlab {

// Deterministic stream splitting (splitmix64 of seed and stream index),
// so each batch in a multi-batch test owns an independent generator.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

enum class SampleFamily {
  Laplace,                // scale * (E1 - E2)
  GeometricIndex,         // {1,2,...}, inverse transform
  HarrisIndex,            // 1 + k M, M negative binomial via Poisson-Gamma
  SymmetricGammaMixture,  // k=2: Z sqrt(V), V chi-square(1); scaled by `scale`
  SdRemainder,            // Laplace f_c law: 0 w.p. c^2, Laplace(1) otherwise
};

const char* to_string(SampleFamily family);
SampleFamily sample_family_from_string(const std::string& name);

struct SampleParams {
  double scale = 1.0;  // Laplace / symmetric-gamma multiplier
  double theta = 0.5;  // index success parameter
  double c = 0.5;      // SD remainder parameter
  int k = 2;           // Harris / symmetric-gamma order
};

SampleBatch sample(SampleFamily family, const SampleParams& params, std::size_t n,
                   std::uint64_t seed);

// Per index draw N, the sum of N fresh i.i.d. summands. Index values must
// be positive integers.
SampleBatch compound_sum(const SampleBatch& index, SampleFamily summand,
                         const SampleParams& params, std::uint64_t seed);

struct TestResult {
  std::string check;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  std::string note;
};

// Asymptotic two-sided critical coefficient sqrt(-ln(alpha/2)/2);
// c(0.01) ~= 1.628.
double ks_critical(double alpha);

// Two-sample Kolmogorov-Smirnov test against the asymptotic critical value
// c(alpha) sqrt((n_a+n_b)/(n_a n_b)). Both samples need n >= 100.
TestResult ks_two_sample(const SampleBatch& a, const SampleBatch& b,
                         double alpha = 0.01);

// Distributional identities of the Laplace bundle, each confirmed by an
// independent KS comparison of two seeded sampling routes.

// Geometric(theta) compound of Laplace(sqrt(theta)) against Laplace(1).
TestResult compound_geometric_identity(double theta, std::size_t n,
                                       std::uint64_t seed, double alpha = 0.01);
// Harris(k=2) compound of sqrt(theta)-scaled symmetric-gamma summands
// against the symmetric gamma mixture law.
TestResult compound_harris_identity(double theta, std::size_t n, std::uint64_t seed,
                                    double alpha = 0.01);
// c X' + eps_c against X for the Laplace bundle.
TestResult sd_identity_test(double c, std::size_t n, std::uint64_t seed,
                            double alpha = 0.01);
// c X' + eps_c + c V against X + c V': the two factorizations of
// f(ct) f_{c,theta}(t) = f(t) f_theta(ct).
TestResult convolution_identity_test(double c, double theta, std::size_t n,
                                     std::uint64_t seed, double alpha = 0.01);
// Same test driven by a decomposition report; only the laplace(b=1) bundle
// has samplers for all four component laws.
TestResult convolution_identity_test(const DecompositionReport& report, std::size_t n,
                                     std::uint64_t seed, double alpha = 0.01);

// Secondary diagnostic: sup gap between the empirical CF of a batch and a
// target CF on a grid.
double empirical_cf_sup_gap(const SampleBatch& batch,
                            const std::function<std::complex<double>(double)>& target,
                            const EvalGrid& grid);

}  // namespace rsdlab
