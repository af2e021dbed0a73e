// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_SCREENED_HPP
#define SINGREEN_SCREENED_HPP

#include <complex>

namespace singreen::screened {

using complex = std::complex<double>;

/// Coefficients joining the interior Coulomb solutions to the free exterior
/// ones across the sharp screening radius R, plus the amplitude chi of the
/// extra F x F term in the interior partial Green's function.
///
/// u = F(eta, kr) inside, a1 j + b1 n outside;
/// v = a2 F + b2 G inside, h+ outside; value and slope continuous at R.
struct MatchingData {
  complex a1, b1, a2, b2;
  complex chi;
  int ell;
  double eta, k, R;
};

/// Wronskian convention used throughout: W(f, g) = f g' - f' g with d/dr
/// derivatives evaluated at R.  The special-function kernel differentiates
/// in x = kr, so every derivative picks up a factor k before use; the /k in
/// the coefficient formulas is applied after that conversion.
MatchingData match(int ell, double eta, double k, double R);

/// chi alone: -W(h+, H+) / W(h+, F) at R.  Throws SingularConfigError when
/// the denominator Wronskian vanishes (resonant matching configuration).
complex chi(int ell, double eta, double k, double R);

/// Large-R form  i eta e^{2 i theta_l} / (kR),
/// theta_l = kR - eta log(2kR) - pi l/2 + sigma_l.
/// `valid` is false when kR is not well above l(l+1) + eta^2.
struct ChiAsymptote {
  complex value;
  bool valid;
};
ChiAsymptote chi_asymptotic(int ell, double eta, double k, double R);

/// Interior partial Green's function for r, r' < R:
///   (1/k) F(kr_<) H+(kr_>) + (chi/k) F(kr) F(kr').
/// Throws std::domain_error when either radius reaches R (the representation
/// only holds inside the screening radius).
complex screened_partial_green(int ell, double eta, double k, double R, double r, double rprime);

/// Legendre series of the chi-correction to the 3D Green's function.
struct QTermResult {
  complex value;
  double tail_estimate;
  bool converged;
  int ell_used;
};

/// Q(r, r', cos) = (1/4 pi k) sum (2l+1) chi_l F_l(kr) F_l(kr') P_l(cos)/(r r').
/// r or r' equal to zero are allowed and evaluated as the exact limit.
/// Truncates once three consecutive terms fall below 1e-12 of the running
/// sum, or flags non-convergence at ell_max.
QTermResult q_term(double eta, double k, double R, double r, double rprime, double cos_angle,
                   int ell_max = 64);

/// max over l <= ell_max of |chi_l|; `conclusive` is false unless the last
/// three terms of the sweep are decreasing.
struct KernelNorm {
  double value;
  int argmax_ell;
  bool conclusive;
};
KernelNorm z_kernel_norm(double eta, double k, double R, int ell_max);

}  // namespace singreen::screened

#endif
