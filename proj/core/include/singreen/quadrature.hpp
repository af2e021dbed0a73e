// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_QUADRATURE_HPP
#define SINGREEN_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace singreen::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].  Cached per order.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};
const Rule& gauss_legendre(int order);

/// Integral estimate with a doubling-based error estimate.
struct Result {
  std::complex<double> value{};
  double err_estimate = 0.0;
  bool converged = false;
};

using Integrand = std::function<std::complex<double>(double)>;

/// Integrate over fixed panel breakpoints with an n-point rule per panel.
std::complex<double> panels(const Integrand& f, const std::vector<double>& breakpoints, int order);

/// Breakpoints that subdivide [lo, hi] geometrically towards lo.
/// Resolves integrable endpoint behavior panel by panel.
std::vector<double> geometric_breakpoints(double lo, double hi, double growth = 2.0);

/// Integrate f over [lo, hi] where f may have an integrable singularity at
/// lo; order doubling drives the error estimate.
Result integrate_geometric(const Integrand& f, double lo, double hi, int order = 24,
                           double target_rel = 1e-11);

/// Integrate q^{-rho} h(q) dq over (0, a] where h is smooth: substitute
/// q = t^{1/(2-rho)}, which flattens the weight, then integrate the
/// transformed integrand with geometric panels.  f is the FULL integrand
/// (including the q^{-rho} factor); it is never called at q = 0.
Result integrate_power_singular(const Integrand& f, double a, double rho, int order = 24,
                                double target_rel = 1e-11);

}  // namespace singreen::quadrature

#endif
