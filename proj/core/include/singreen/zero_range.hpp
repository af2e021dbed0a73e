// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_ZERO_RANGE_HPP
#define SINGREEN_ZERO_RANGE_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "singreen/greens3d.hpp"
#include "singreen/potential.hpp"
#include "singreen/radial.hpp"

namespace singreen::zero_range {

using complex = std::complex<double>;

/// Assembled state of the contact-interaction construction:
///   phi = phi0 - lambda G+(r, 0) beta,  beta = phi0(0)/(1 + lambda B),
/// with B the finite constant of the Green's function at the origin and
/// alpha = -lambda beta the singular amplitude.
struct ZeroRangeState {
  double lambda = 0.0;
  complex beta{};
  complex phi0_at_zero{};
  complex B{};
  potentials::SingularityClass cls{};

  complex alpha() const { return -lambda * beta; }
};

/// Scattering solution phi0 of the potential alone, evaluated on the beam
/// axis (r measured along the incident direction).  Partial waves are built
/// from regular radial solutions matched to outgoing waves.
class Phi0Evaluator {
 public:
  Phi0Evaluator(potentials::PotentialSpec spec, double k, double r_lo, double r_hi,
                int ell_max = 10, radial::SolveOptions options = {});

  complex value(double r) const;

  /// Exact r -> 0 limit: only the s-wave survives,
  ///   phi0(0) = -N_u / W(u_0, h+).
  complex at_origin() const;

  double k() const { return k_; }

 private:
  double k_;
  int ell_max_;
  std::vector<radial::RadialSolutionPair> pairs_;
  std::vector<complex> amplitudes_;  ///< -k / W(u_l, h+) per partial wave
};

enum class Phi0Method { Limit, Extrapolate };

/// phi0(0, k).  `Extrapolate` Richardson-extrapolates value(r) over a
/// shrinking radius sequence instead of using the closed limit; the two
/// agree to the solver tolerance and cross-check each other.
complex phi0_at_origin(const potentials::PotentialSpec& spec, double k,
                       Phi0Method method = Phi0Method::Limit);

/// Fixed point beta = phi0(0) / (1 + lambda B).  Throws SingularConfigError
/// when 1 + lambda B vanishes (contact-interaction resonance).
complex solve_beta(double lambda, complex phi0_at_zero, complex B);

/// Full solution phi(r) = phi0(r) - lambda G+(r, 0, k^2) beta on the beam
/// axis, using shared evaluators for repeated calls.
class PhiFullEvaluator {
 public:
  PhiFullEvaluator(ZeroRangeState state, potentials::PotentialSpec spec, double k, double r_lo,
                   double r_hi);
  complex value(double r);
  const ZeroRangeState& state() const { return state_; }

 private:
  ZeroRangeState state_;
  greens3d::Evaluator green_;
  Phi0Evaluator phi0_;
};

/// Regularizing radial variable per class:
///   1/omega = 1/r + A0 r^{1-rho}   (super-Coulomb)
///   1/omega = 1/r + V0 log r       (Coulomb)
///   omega   = r                    (sub-Coulomb).
/// Throws std::domain_error outside the window where 1/omega > 0, reporting
/// the critical radius.
double omega(potentials::SingularityClass cls, double v0, double rho, double r);

/// Slope extraction  lim d/d omega [omega phi] = beta  from samples
/// (r, phi): transform to omega, fit the linear trend of omega*phi over the
/// smallest-omega third.  `ok` is false when the trend is visibly nonlinear
/// (samples outside the asymptotic window or a wrong-class omega).
struct RegularizeResult {
  complex beta{};
  complex intercept{};  ///< alpha / (4 pi)
  double nonlinearity = 0.0;
  bool ok = false;
};
RegularizeResult regularize(std::span<const std::pair<double, complex>> phi_samples,
                            potentials::SingularityClass cls, double v0, double rho);

}  // namespace singreen::zero_range

#endif
