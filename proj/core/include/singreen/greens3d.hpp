// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_GREENS3D_HPP
#define SINGREEN_GREENS3D_HPP

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "singreen/potential.hpp"
#include "singreen/radial.hpp"

namespace singreen::greens3d {

using complex = std::complex<double>;

/// One evaluation of the partial-wave series for G+(r, r', k^2).
struct GreenEvaluation {
  complex value{};
  double r = 0.0, rprime = 0.0, cos_angle = 1.0, k = 0.0;
  int ell_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Partial-wave assembler for one (potential, k).  Caches radial solutions
/// per ell for the generic route; the free, pure-Coulomb and screened-Coulomb
/// potentials use their exact solutions instead of the ODE.
///
/// Not safe for concurrent use: sweeps parallelize across Evaluator
/// instances, one per thread.
class Evaluator {
 public:
  /// r_lo/r_hi bound the radii this evaluator will be asked for.
  Evaluator(potentials::PotentialSpec spec, double k, double r_lo, double r_hi,
            radial::SolveOptions options = {});

  /// (1/4pi) sum (2l+1) G_l(r,r') P_l(cos)/(r r'), ascending ell with
  /// compensated accumulation, truncated when three consecutive terms fall
  /// below tol; near-diagonal points may exhaust the budget and come back
  /// flagged (converged = false).
  GreenEvaluation sum(double r, double rprime, double cos_angle, double tol = 1e-10,
                      int ell_budget = 64);

  /// G+(r, 0, k^2): only the l = 0 partial wave survives the r' -> 0 limit.
  complex at_origin(double r);

  double k() const { return k_; }
  const potentials::PotentialSpec& spec() const { return spec_; }

 private:
  enum class Route { Free, Coulomb, Screened, Generic };

  complex partial_term(int ell, double lo, double hi);  ///< G_l(r_<, r_>)
  const radial::RadialSolutionPair& pair(int ell);
  double representable_lo(int ell) const;

  potentials::PotentialSpec spec_;
  double k_;
  double eta_ = 0.0;
  Route route_;
  double r_lo_;
  double r_solve_max_ = 0.0;
  radial::SolveOptions options_;
  std::map<int, radial::RadialSolutionPair> pairs_;
};

/// One-shot helpers.
GreenEvaluation green_sum(const potentials::PotentialSpec& spec, double k, double r, double rprime,
                          double cos_angle, double tol = 1e-10, int ell_budget = 64);
complex green_at_origin(const potentials::PotentialSpec& spec, double k, double r);

/// Free-space kernel e^{ik|r-r'|}/(4 pi |r-r'|) from the triangle
/// (r, r', cos).
complex free_kernel(double k, double r, double rprime, double cos_angle);

}  // namespace singreen::greens3d

#endif
