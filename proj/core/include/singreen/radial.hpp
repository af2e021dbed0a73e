// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_RADIAL_HPP
#define SINGREEN_RADIAL_HPP

#include <complex>
#include <memory>
#include <vector>

#include "singreen/potential.hpp"

namespace singreen::radial {

using complex = std::complex<double>;

/// Options shared by the radial solvers.  Defaults are pinned here and
/// echoed into outputs by the CLI for reproducibility.
struct SolveOptions {
  double r_start_factor = 1e-4;  ///< r_start = factor * min(1, 1/k) unless a grid starts lower
  double tail_epsilon = 1e-10;   ///< |V(r_max)| must be below this for the outgoing start
  double abs_tol = 1e-13;        ///< integrator absolute tolerance
  double rel_tol = 1e-12;        ///< integrator relative tolerance
  int frobenius_terms = 48;      ///< lattice size of the series start
};

/// Local series solution of the radial equation at a small radius.
///
/// The equation -u'' + [l(l+1)/r^2 + V(r) - k^2] u = 0 with V = r^{-rho} W(r)
/// admits a regular solution u = r^{l+1} sum a_{mn} r^{m + n(2-rho)}; the
/// double lattice covers both the analytic part and the powers generated by
/// the singular core.  a_{00} = 1 fixes the normalization.
struct FrobeniusStart {
  double value;
  double derivative;
  double r_start;
  double truncation_error;  ///< magnitude of the last retained lattice terms
  int terms_used;
};

/// Series start at r_start.  Throws AccuracyError when the lattice terms do
/// not decay (r_start too large for the expansion).
FrobeniusStart frobenius_start(const potentials::PotentialSpec& spec, int ell, double k,
                               double r_start, int n_terms = 48);

/// Regular solution u_l on a grid, u ~ r^{l+1} at the origin (a_{00} = 1).
class RegularSolution {
 public:
  double operator()(double r) const { return value(r); }
  double value(double r) const;
  double derivative(double r) const;
  double second_derivative(double r) const;

  int ell() const { return ell_; }
  double k() const { return k_; }
  const std::vector<double>& grid() const { return r_; }
  /// lim u(r)/r^{l+1}; equals 1 in this normalization.
  double slope_at_origin() const { return 1.0; }

 private:
  friend RegularSolution solve_regular(const potentials::PotentialSpec&, int, double,
                                       const std::vector<double>&, const SolveOptions&);
  potentials::PotentialSpec spec_ = potentials::PotentialSpec::free_space();
  int ell_ = 0;
  double k_ = 0.0;
  std::vector<double> r_, u_, du_;
};

/// Outgoing solution v_l on a grid, v -> norm * e^{i(kr - pi l/2)} at large r.
class OutgoingSolution {
 public:
  complex operator()(double r) const { return value(r); }
  complex value(double r) const;
  complex derivative(double r) const;
  complex second_derivative(double r) const;

  int ell() const { return ell_; }
  double k() const { return k_; }
  const std::vector<double>& grid() const { return r_; }
  /// Constant multiplying the free outgoing asymptote at the start radius.
  complex asymptotic_norm() const { return norm_; }

  /// Copy with v (and its recorded normalization) multiplied by factor; the
  /// partial Green's function is invariant under this.
  OutgoingSolution scaled(complex factor) const;

 private:
  friend OutgoingSolution solve_outgoing(const potentials::PotentialSpec&, int, double,
                                         const std::vector<double>&, const SolveOptions&);
  potentials::PotentialSpec spec_ = potentials::PotentialSpec::free_space();
  int ell_ = 0;
  double k_ = 0.0;
  complex norm_ = 1.0;
  std::vector<double> r_;
  std::vector<complex> v_, dv_;
};

/// Regular/outgoing pair with the constant Wronskian W(u, v) = u v' - u' v.
struct RadialSolutionPair {
  RegularSolution u;
  OutgoingSolution v;
  complex wronskian;
  int ell;
  double k;

  /// W recomputed at an arbitrary grid radius (constancy check).
  complex wronskian_at(double r) const;
};

/// Strictly increasing grid suited to the solvers: geometric spacing from
/// r_min to 1, then steps bounded by a fraction of the local wavelength.
std::vector<double> make_grid(double r_min, double r_max, double k, int points_per_decade = 32,
                              double phase_step = 0.15);

/// Integrate the regular solution outward from a series start at grid.front().
/// Throws IntegrationError on stiffness/overflow, with the failing radius.
RegularSolution solve_regular(const potentials::PotentialSpec& spec, int ell, double k,
                              const std::vector<double>& grid, const SolveOptions& opt = {});

/// Integrate the outgoing solution inward from the free asymptote at
/// grid.back().  Throws std::domain_error when |V(r_max)| >= tail_epsilon.
OutgoingSolution solve_outgoing(const potentials::PotentialSpec& spec, int ell, double k,
                                const std::vector<double>& grid, const SolveOptions& opt = {});

RadialSolutionPair solve_pair(const potentials::PotentialSpec& spec, int ell, double k,
                              const std::vector<double>& grid, const SolveOptions& opt = {});

/// Pair from independently solved halves (the grids may differ; the
/// Wronskian is taken at the overlap).
RadialSolutionPair make_solution_pair(RegularSolution u, OutgoingSolution v);

/// Partial-wave Green's function  G_l(r, r') = -u(r_<) v(r_>) / W(u, v).
/// Symmetric in (r, r'); jump of the first derivative across the diagonal
/// is -1.  Throws std::domain_error outside the covered grid range.
complex partial_green(const RadialSolutionPair& pair, double r, double rprime);

/// Max |residual| of -f'' + q(r) f over the grid interior by finite
/// differences, scaled by max(|f|, |f|_local); diagnostic for tests.
double ode_residual(const potentials::PotentialSpec& spec, const RegularSolution& u);
double ode_residual(const potentials::PotentialSpec& spec, const OutgoingSolution& v);

/// Debug dump of the stored solution tables: r,u,du,re_v,im_v,re_dv,im_dv.
std::string debug_csv(const RadialSolutionPair& pair);

}  // namespace singreen::radial

#endif
