// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_ASYMPTOTICS_HPP
#define SINGREEN_ASYMPTOTICS_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "singreen/potential.hpp"

namespace singreen::asymptotics {

using complex = std::complex<double>;

/// One basis function r^{exponent} (log r)^{log_power}.
struct BasisTerm {
  double exponent = 0.0;
  int log_power = 0;
};

/// Result of the short-range least-squares fit against
///   {1/r, f(r), 1, corrections...}
/// where f = r^{1-rho} (super-Coulomb), log r (Coulomb), absent (sub-Coulomb).
/// Raw basis coefficients are returned; comparisons against 1/(4 pi) scaled
/// expectations happen at the call site.
struct AsymptoteFit {
  double pole_coeff = 0.0;           ///< coefficient of 1/r (real part)
  double extra_coeff = 0.0;          ///< coefficient of f(r); 0 for sub-Coulomb
  complex const_term{};              ///< coefficient of 1
  double pole_sigma = 0.0;           ///< formal standard errors from the residual
  double extra_sigma = 0.0;
  double residual_rms = 0.0;
  double condition_number = 0.0;
  double r_min = 0.0, r_max = 0.0;
  potentials::SingularityClass cls{};
  bool accepted = false;             ///< residual below threshold
  bool ill_conditioned = false;      ///< condition number above 1e8; never silently accepted
  std::vector<double> correction_coeffs;  ///< coefficients of the extra terms (real part)
};

struct FitOptions {
  /// Extra basis terms appended after {1/r, f, 1}.  The known higher orders
  /// of the expansion; without them the window remainder biases the three
  /// leading coefficients.
  std::vector<BasisTerm> corrections;
  double residual_threshold = 1e-6;  ///< accepted when rms < threshold * scale
  /// Sample weights are (r/r_max)^weight_exponent; the default equalizes the
  /// dynamic range of the 1/r column.
  double weight_exponent = 1.0;
  /// r^{1-rho} and log r become numerically collinear as rho -> 1+; refuse
  /// the super-Coulomb basis inside this band unless overridden.
  bool allow_near_coulomb = false;
};

/// Constant term of the pure-Coulomb short-range expansion:
///   ik/4pi + (V0/4pi) [log(-2ik) + psi(1 + i eta) + 2 gamma - 1],
/// eta = V0/(2k), principal branch: log(-2ik) = log(2k) - i pi/2 for k > 0.
complex coulomb_C(double k, double v0);

/// Singular-term ratio for 1 < rho < 2:  A0 = V0 / ((2-rho)(1-rho)).
/// Throws std::domain_error for rho outside (1, 2).
double a0(double v0, double rho);

/// Weighted least squares (weights proportional to r) of samples (r, G)
/// against the class basis.  Throws on a rank-deficient design matrix and on
/// the rho -> 1+ collinearity band (see FitOptions.allow_near_coulomb).
AsymptoteFit fit_short_range(std::span<const std::pair<double, complex>> samples,
                             potentials::SingularityClass cls, double rho,
                             const FitOptions& options = {});

/// Correction terms appropriate for each class: the next orders generated by
/// the smooth part of the potential and by the second iteration of the
/// integral equation (exponent ladder n(2-rho) - 1, plus marginal log terms).
std::vector<BasisTerm> default_corrections(potentials::SingularityClass cls, double rho);

/// Log-spaced sample radii for a fit window.
std::vector<double> fit_window(double r_min, double r_max, int n);

}  // namespace singreen::asymptotics

#endif
