// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_BORN_HPP
#define SINGREEN_BORN_HPP

#include <complex>

#include "singreen/potential.hpp"
#include "singreen/quadrature.hpp"

namespace singreen::born {

using complex = std::complex<double>;

/// Split of the first-iteration integrals at radius r0: the inner region
/// carries the singular core, the tail region only the bounded remainder.
struct SplitConfig {
  double r0 = 1.0;          ///< split radius; must exceed the evaluation radius
  int gauss_order = 24;     ///< panel rule order (doubled for the error estimate)
  double target_rel = 1e-10;
};

/// Closed form of the static singular integral
///   V0/(4pi)^2 * Int_{q<r0} dq^3 |r-q|^{-1} q^{-rho-1}:
/// for rho != 1:  V0 r^{1-rho} / (4pi (2-rho)(rho-1)) + V0 r0^{1-rho} / (4pi (1-rho)),
/// for rho  = 1:  -V0 log(r)/(4pi) + V0 (1 + log r0)/(4pi).
/// Throws std::domain_error unless 0 < r < r0 and rho < 2.
double i1_singular_closed(double v0, double rho, double r, double r0);

/// Inner-region integral Int_{q<r0} G0+(r,q) V(q) G0+(q,0) dq^3 with the full
/// kernels, reduced to the surviving s-wave radial integral.  The integrable
/// q^{-rho} endpoint is flattened by the q = t^{1/(2-rho)} substitution.
quadrature::Result i1_quadrature(const potentials::PotentialSpec& spec, double k, double r,
                                 const SplitConfig& config = {});

/// Tail integral Int_{q>r0} with the same kernels (diagnostic companion of
/// i2_bound; the radii must satisfy r < r0).
quadrature::Result i2_quadrature(const potentials::PotentialSpec& spec, double k, double r,
                                 const SplitConfig& config = {});

/// Explicit upper bound for |I2| from the tail condition:
///   C/(4pi)^2 * (1+r0)^{-delta}/delta.
/// Throws std::invalid_argument when the spec's delta <= 1.
double i2_bound(const potentials::PotentialSpec& spec, double r0);

/// First iteration correction of the scattering solution at radius r along
/// the beam direction: -(J1 + J2) where
///   J_j = Int_{Omega_j} G0+(r,q) V(q) e^{i k.q} dq^3.
/// Vanishes for V = 0; stays finite as r -> 0 for every rho < 2.
quadrature::Result j1_j2_phi0(const potentials::PotentialSpec& spec, double k, double r,
                              const SplitConfig& config = {}, int ell_max = 12);

}  // namespace singreen::born

#endif
