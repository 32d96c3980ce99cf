#pragma once

#include <string>

#include "rsdlab/grid.hpp"
#include "rsdlab/lt_family.hpp"
#include "rsdlab/scalar_cf.hpp"
#include "rsdlab/validity.hpp"

namespace rsdlab {

// Self-decomposition component f_c(t) = f(t) / f(ct), c in (0,1].
// Throws when |f(ct)| falls below the zero-divisor threshold 1e-14;
// admissible inputs have no real zeros.
Curve sd_component(const ScalarCF& f, double c, const EvalGrid& grid);

// Random-index component f_theta(t) = phi(theta phi^{-1}(f(t))),
// theta in [0,1). phi^{-1} is applied to real values in (0,1] only; curves
// with complex or nonpositive values are rejected pointwise.
Curve n_component(const ScalarCF& f, const LTFamily& phi, double theta,
                  const EvalGrid& grid);

// The mixed component transform f_{c,theta}(t) = f_c(t) * f_theta(ct)
// together with its ingredients and their validity verdicts.
struct DecompositionReport {
  double c = 1.0;
  double theta = 0.0;
  std::string family;
  std::string phi;
  Curve f;
  Curve f_c;
  Curve f_theta;
  Curve composite;  // f_c(t) * f_theta(c t)
  ValidityReport f_valid;
  ValidityReport f_c_valid;
  ValidityReport f_theta_valid;
  ValidityReport composite_valid;
  ValidityReport zero_scan;  // no-real-zero scan of f

  bool all_valid() const;
};

// c = 1 degenerates to the pure n-component, theta = 0 to the pure
// sd-component, bitwise on the evaluated grid.
DecompositionReport rsd_composite(const ScalarCF& f, const LTFamily& phi, double c,
                                  double theta, const EvalGrid& grid);

// f(t) = phi(-log h(t)) for an infinitely divisible h that is real-positive
// on the grid. A symmetric-stable h yields the closed form
// (1 + lambda |t|^alpha)^(-phi_alpha).
ScalarCF nid_construct(const LTFamily& phi, const ScalarCF& h, const EvalGrid& grid);

// sup over the grid of |f(t) - phi(phi^{-1}(f_theta(t)) / theta)|.
double nid_inversion_residual(const ScalarCF& f, const LTFamily& phi, double theta,
                              const EvalGrid& grid);

struct StableFactorizationReport {
  double alpha = 0.0;
  double lambda = 0.0;
  double c = 1.0;
  // sup |phi(lambda|t|^a) - phi(c lambda|t|^a) phi_c(lambda|t|^a)| on the grid
  double max_pointwise_gap = 0.0;
  ValidityReport quotient_cm;  // complete monotonicity of phi_c(s) = phi(s)/phi(cs)

  bool pass(double gap_tol = 1e-14) const {
    return max_pointwise_gap <= gap_tol && !quotient_cm.failed();
  }
};

// Factorization of the stable construction phi(lambda |t|^alpha) into
// phi(c lambda |t|^alpha) times the quotient transform, with a
// complete-monotonicity verdict for the quotient.
StableFactorizationReport nstable_factorization(const LTFamily& phi, double alpha,
                                                double lambda, double c,
                                                const EvalGrid& grid);

// Experimental continuous mirror of the discrete phi-component:
// t -> 1 - theta phi^{-1}(f(t)). There is no closed-form theory behind this
// transform; it is exposed for exploration only and is not used by any
// verdict machinery.
Curve phi_component_experimental(const ScalarCF& f, const LTFamily& phi, double theta,
                                 const EvalGrid& grid);

}  // namespace rsdlab
