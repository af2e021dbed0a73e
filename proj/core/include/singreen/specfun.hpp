// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_SPECFUN_HPP
#define SINGREEN_SPECFUN_HPP

#include <complex>

namespace singreen::specfun {

/// Regular and irregular Coulomb wave functions at one point.
///
/// All derivatives are with respect to the dimensionless argument x = kr.
/// Callers working in r apply the chain-rule factor k themselves.
///
/// Normalization: F'G - FG' = 1, F(eta=0, x) equals the Riccati-Bessel
/// function and G(eta=0, x) equals the Riccati-Neumann function with the
/// sign convention of RiccatiTriple below.
struct CoulombPair {
  double F;   ///< regular solution F_l(eta, x)
  double dF;  ///< dF/dx
  double G;   ///< irregular solution G_l(eta, x)
  double dG;  ///< dG/dx
  int ell;
  double eta;
  double x;

  /// Outgoing combination H+ = G + iF.
  std::complex<double> H() const { return {G, F}; }
  std::complex<double> dH() const { return {dG, dF}; }
};

/// Riccati-Bessel family at one point, derivatives with respect to x.
///
/// Sign conventions are pinned here once for the whole library:
///   j0(x) = sin x,  n0(x) = cos x,  h+ = n + i j  ->  e^{i(x - pi l/2)}.
/// With these, j' n - j n' = +1 at every x.
struct RiccatiTriple {
  double j;   ///< Riccati-Bessel
  double dj;
  double n;   ///< Riccati-Neumann
  double dn;
  int ell;
  double x;

  std::complex<double> h() const { return {n, j}; }
  std::complex<double> dh() const { return {dn, dj}; }
};

/// Coulomb wave functions F_l(eta, x), G_l(eta, x) and x-derivatives.
///
/// Throws std::domain_error for x <= 0 or ell < 0, and AccuracyError if the
/// evaluation cannot be completed at full accuracy (extreme parameters,
/// overflow of the irregular solution).
CoulombPair coulomb_fg(int ell, double eta, double x);

/// Riccati-Bessel, -Neumann and -Hankel functions at (ell, x).
///
/// Throws std::domain_error for x <= 0 and AccuracyError when the
/// Riccati-Neumann value overflows (large ell with tiny x).
RiccatiTriple riccati(int ell, double x);

/// Normalization coefficient C_l(eta) of the regular Coulomb function,
/// F_l(eta, x) ~ C_l(eta) x^{l+1} as x -> 0.  C_0(0) = 1.
double coulomb_norm(int ell, double eta);

/// Coulomb phase shift sigma_l = arg Gamma(l+1 + i eta), continuous in eta
/// and anchored by sigma_l(eta=0) = 0.  Built from the principal value at
/// l = 0 and the exact recurrence sigma_{l+1} = sigma_l + atan(eta/(l+1)).
double coulomb_phase(int ell, double eta);

/// Digamma function for complex argument.  Throws std::domain_error at the
/// poles (z a nonpositive integer).
std::complex<double> digamma(std::complex<double> z);

}  // namespace singreen::specfun

#endif
