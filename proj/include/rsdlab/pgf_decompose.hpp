#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsdlab/grid.hpp"
#include "rsdlab/lt_family.hpp"
#include "rsdlab/series.hpp"
#include "rsdlab/validity.hpp"

namespace rsdlab {

enum class PgfSupport { StartsAtZero, StartsAtOne };

const char* to_string(PgfSupport support);

// A probability generating function carried two ways: a closed-form
// callable on [0,1] and its truncated coefficient expansion. The support
// tag distinguishes laws on {0,1,...} from index laws on {1,2,...}.
class PgfSeries {
 public:
  PgfSeries(std::string descriptor, std::function<double(double)> closed_form,
            TruncSeries coeffs, PgfSupport support);

  double operator()(double s) const { return closed_form_(s); }
  const TruncSeries& coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.order(); }
  PgfSupport support() const { return support_; }
  const std::string& describe() const { return descriptor_; }

 private:
  std::string descriptor_;
  std::function<double(double)> closed_form_;
  TruncSeries coeffs_;
  PgfSupport support_;
};

// Bundled families on {0,1,...}.
PgfSeries geometric_pgf(double lambda, std::size_t order = kValiditySeriesOrder);
PgfSeries geometric_pgf_from_q(double q, std::size_t order = kValiditySeriesOrder);
PgfSeries poisson_pgf(double lambda, std::size_t order = kValiditySeriesOrder);
PgfSeries bernoulli_pgf(double p, std::size_t order = kValiditySeriesOrder);
// Adapter for the random-index laws of the Poincare families.
PgfSeries index_pgf_as_series(const IndexPGF& index,
                              std::size_t order = kValiditySeriesOrder);

// Binomial thinning: s -> P(1 - c + c s), c in (0,1]. c = 1 returns P
// unchanged; thinning is a semigroup action in c.
PgfSeries thin(const PgfSeries& p, double c);

// A transform output whose PGF-hood is decided, not assumed.
struct PgfCandidate {
  PgfSeries candidate;
  ValidityReport validity;

  bool valid() const { return validity.passed(); }
};

// Discrete SD component P_c(s) = P(s) / P(1-c+cs).
PgfCandidate dsd_component(const PgfSeries& p, double c, double tol = 1e-12);

// Discrete N-component Q_theta(s) = phi(theta phi^{-1}(P(s))), theta in [0,1).
// Requires P(s) in (0,1] on [0,1]; in particular P(0) > 0.
PgfCandidate dnid_component(const PgfSeries& p, const LTFamily& phi, double theta,
                            double tol = 1e-12);

// Discrete phi-component Q_theta(s) = 1 - theta phi^{-1}(P(s)). An invalid
// candidate (e.g. negative mass at 0 once theta phi^{-1}(P(0)) > 1) comes
// back with a fail verdict rather than an exception; the admissible theta
// range is the whole point of the transform.
PgfCandidate dphi_component(const PgfSeries& p, const LTFamily& phi, double theta,
                            double tol = 1e-12);

struct DiscreteDecompositionReport {
  std::string mode;  // "dnrsd" or "dphirsd"
  double c = 1.0;
  double theta = 0.0;
  PgfCandidate p_component;  // P_c
  PgfCandidate q_component;  // Q_theta (untransformed argument)
  PgfCandidate composite;    // P_c(s) * Q_theta(1-c+cs)
  // Empirically bisected upper bound of the valid theta region (dphirsd).
  std::optional<double> theta_validity_bound;

  bool all_valid() const {
    return p_component.valid() && q_component.valid() && composite.valid();
  }
};

// P_{c,theta}(s) = P_c(s) * Q_theta(1-c+cs) with the dnid component.
// c = 1 degenerates to the Q_theta part and theta = 0 to the P_c part,
// bitwise on the coefficient vectors.
DiscreteDecompositionReport dnrsd_composite(const PgfSeries& p, const LTFamily& phi,
                                            double c, double theta,
                                            double tol = 1e-12);

struct DphiConfig {
  double c_lower = 0.5;  // admissible c range is (c_lower, 1)
  double tol = 1e-12;
  bool estimate_theta_bound = true;
  int bisection_steps = 30;
};

// Same composite with the dphi component; c restricted to (c_lower, 1) and
// theta to (0,1). The report carries the bisected onset of coefficient
// negativity as the empirical theta bound.
DiscreteDecompositionReport dphirsd_composite(const PgfSeries& p, const LTFamily& phi,
                                              double c, double theta,
                                              const DphiConfig& cfg = {});

// sup over the grid of |P(s) - phi(-log R(s))| for s in [0,1]; R must stay
// positive.
double dnid_representation_check(const PgfSeries& p, const LTFamily& phi,
                                 const PgfSeries& r, const EvalGrid& unit_grid);
double dnid_representation_check(std::span<const double> p_values, const LTFamily& phi,
                                 std::span<const double> r_values);

struct PhiIdLimit {
  EvalGrid grid;
  std::vector<double> p_values;    // limit of phi((1 - Q_theta(s)) / theta)
  std::vector<double> neg_log_r;   // limit of (1 - Q_theta(s)) / theta
  std::vector<double> r_values;    // exp(-neg_log_r)
  std::vector<bool> converged;
  std::vector<double> theta_at_convergence;

  bool all_converged() const;
};

std::vector<double> default_theta_sequence();  // 2^-1 .. 2^-20

// Pointwise Cauchy limit of phi((1-Q_theta(s))/theta) along theta_seq,
// with the divisible law R extracted from the inner limit. Points whose
// successive gaps never drop below cauchy_tol are flagged unconverged.
PhiIdLimit dphi_id_limit(const std::function<PgfSeries(double)>& q_family,
                         const LTFamily& phi, const std::vector<double>& theta_seq,
                         const EvalGrid& unit_grid, double cauchy_tol = 1e-8);

}  // namespace rsdlab
