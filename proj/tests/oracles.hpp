// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by tests.  Every routine
// here deliberately avoids the code paths of the library it checks: Coulomb
// functions come from a power-series start propagated by a hand-rolled RK4
// (plus an inward sweep from the far-field series for the irregular one),
// gamma-related quantities from a Lanczos kernel, digamma from the plain
// partial-fraction series.

#ifndef SINGREEN_TEST_ORACLES_HPP
#define SINGREEN_TEST_ORACLES_HPP

#include <complex>
#include <utility>

namespace oracles {

using complex = std::complex<double>;

/// Lanczos log-gamma, principal branch (reflection below Re z = 1/2).
complex log_gamma(complex z);

/// C_l(eta) from the closed product
///   2^l e^{-pi eta/2} sqrt(pi eta/sinh(pi eta)) prod_{s<=l} sqrt(s^2+eta^2) / (2l+1)!.
double coulomb_norm_product(int ell, double eta);

/// sigma_l = Im log_gamma(l+1 + i eta).
double coulomb_phase_lgamma(int ell, double eta);

/// Regular Coulomb function {F, F'} at (ell, eta, x): power series launched
/// at small x, RK4-propagated outward in x.
std::pair<double, double> coulomb_f_series_rk(int ell, double eta, double x);

/// Irregular Coulomb function {G, G'} at (ell, eta, x): far-field asymptotic
/// series started beyond the turning point, RK4-propagated inward.
std::pair<double, double> coulomb_g_asymptotic_rk(int ell, double eta, double x);

/// Riccati-Bessel j and Riccati-Neumann n as {j, n} by the dual recurrence
/// route (downward Miller for j, upward for n), seeded by the closed l = 0, 1
/// forms.
std::pair<double, double> riccati_dual_recurrence(int ell, double x);

/// Digamma by the partial-fraction series with an integral tail correction.
complex digamma_series(complex z);

/// Static singular integral V0/(4pi)^2 Int_{q<r0} |r-q|^{-1} q^{-rho-1} d^3q
/// by composite Simpson on the multipole-reduced radial pieces, with the
/// q^{1-rho} endpoint flattened by a power substitution of its own.
double i1_static_simpson(double v0, double rho, double r, double r0);

}  // namespace oracles

#endif
