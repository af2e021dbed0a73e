// SPDX-License-Identifier: Apache-2.0

#include "singreen/greens3d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "singreen/errors.hpp"
#include "singreen/screened.hpp"
#include "singreen/specfun.hpp"

namespace singreen::greens3d {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

}  // namespace

Evaluator::Evaluator(potentials::PotentialSpec spec, double k, double r_lo, double r_hi,
                     radial::SolveOptions options)
    : spec_(std::move(spec)), k_(k), r_lo_(r_lo), options_(options) {
  if (!(k > 0.0)) throw std::domain_error("Evaluator: k must be positive");
  if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw std::domain_error("Evaluator: bad radius range");

  if (spec_.is_free()) {
    route_ = Route::Free;
  } else if (spec_.model() == potentials::Model::Coulomb) {
    route_ = Route::Coulomb;
    eta_ = potentials::sommerfeld_eta(spec_, k_);
  } else if (spec_.model() == potentials::Model::ScreenedCoulomb) {
    route_ = Route::Screened;
    eta_ = potentials::sommerfeld_eta(spec_, k_);
    if (r_hi >= *spec_.screening_radius()) {
      throw std::domain_error("Evaluator: screened representation requires radii < R");
    }
  } else {
    route_ = Route::Generic;
    // outgoing start where the tail is below tail_epsilon, clear of r_hi
    const double r_tail = spec_.effective_range(options_.tail_epsilon);
    r_solve_max_ = std::max(r_hi * 1.5, r_tail * 1.05);
  }
}

double Evaluator::representable_lo(int ell) const {
  // series-launch radius: half the requested inner radius, capped by the
  // configured default r_start_factor * min(1, 1/k)
  const double base = std::min(r_lo_ * 0.5, options_.r_start_factor * std::min(1.0, 1.0 / k_));
  if (ell == 0) return base;
  // inner grid limit keeping the irregular solution inside double range:
  // |v_l(x)| ~ (2l-1)!!/x^l must stay below ~1e280
  double lg_dfact = 0.0;
  for (int s = 1; s <= ell; ++s) lg_dfact += std::log10(2.0 * s - 1.0);
  const double lg_x_min = -(280.0 - lg_dfact) / ell;
  const double floor_r = std::pow(10.0, lg_x_min) / k_;
  return std::max(base, floor_r);
}

const radial::RadialSolutionPair& Evaluator::pair(int ell) {
  auto it = pairs_.find(ell);
  if (it == pairs_.end()) {
    const auto grid = radial::make_grid(representable_lo(ell), r_solve_max_, k_);
    it = pairs_.emplace(ell, radial::solve_pair(spec_, ell, k_, grid, options_)).first;
  }
  return it->second;
}

complex Evaluator::partial_term(int ell, double lo, double hi) {
  switch (route_) {
    case Route::Free: {
      const auto a = specfun::riccati(ell, k_ * lo);
      const auto b = specfun::riccati(ell, k_ * hi);
      return a.j * b.h() / k_;
    }
    case Route::Coulomb: {
      const auto a = specfun::coulomb_fg(ell, eta_, k_ * lo);
      const auto b = specfun::coulomb_fg(ell, eta_, k_ * hi);
      return a.F * b.H() / k_;
    }
    case Route::Screened:
      return screened::screened_partial_green(ell, eta_, k_, *spec_.screening_radius(), lo, hi);
    case Route::Generic: {
      const auto& p = pair(ell);
      // below the representable floor of this wave the regular solution is
      // under 1e-240 of scale and the term contributes nothing
      if (lo < p.u.grid().front()) return 0.0;
      return radial::partial_green(p, lo, hi);
    }
  }
  return 0.0;
}

GreenEvaluation Evaluator::sum(double r, double rprime, double cos_angle, double tol,
                               int ell_budget) {
  if (!(r > 0.0) || !(rprime > 0.0)) throw std::domain_error("green_sum: radii must be positive");
  if (std::abs(cos_angle) > 1.0) throw std::domain_error("green_sum: |cos| must be <= 1");

  GreenEvaluation out;
  out.r = r;
  out.rprime = rprime;
  out.cos_angle = cos_angle;
  out.k = k_;

  const double lo = std::min(r, rprime), hi = std::max(r, rprime);
  const double rr = r * rprime;

  double p_prev = 0.0, p_curr = 1.0;  // P_{ell-1}, P_ell
  complex sum = 0.0, comp = 0.0;
  double tail[3] = {1e300, 1e300, 1e300};
  int used = 0;
  bool converged = false;

  for (int ell = 0; ell <= ell_budget; ++ell) {
    const complex gl = partial_term(ell, lo, hi);
    const complex term = (2.0 * ell + 1.0) * gl * p_curr / (four_pi * rr);

    const complex y = term - comp;
    const complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    used = ell;

    tail[ell % 3] = std::abs(term);
    const double tail_max = std::max({tail[0], tail[1], tail[2]});
    if (ell >= 4 && tail_max <= tol * std::max(1.0, std::abs(sum))) {
      converged = true;
      break;
    }

    const double p_next = ((2.0 * ell + 1.0) * cos_angle * p_curr - ell * p_prev) / (ell + 1.0);
    p_prev = p_curr;
    p_curr = p_next;
  }

  out.value = sum;
  out.ell_used = used;
  // scaled tail, so converged <=> tail_estimate < tol
  out.tail_estimate = std::max({tail[0], tail[1], tail[2]}) / std::max(1.0, std::abs(sum));
  out.converged = converged;
  return out;
}

complex Evaluator::at_origin(double r) {
  if (!(r > 0.0)) throw std::domain_error("green_at_origin: r must be positive");
  switch (route_) {
    case Route::Free:
      return std::exp(complex(0.0, k_ * r)) / (four_pi * r);
    case Route::Coulomb: {
      // lim G_0(r, r')/(r r') = C_0 k H+(kr)/r, all higher waves vanish
      const auto fg = specfun::coulomb_fg(0, eta_, k_ * r);
      return specfun::coulomb_norm(0, eta_) * fg.H() / (four_pi * r);
    }
    case Route::Screened: {
      const auto fg = specfun::coulomb_fg(0, eta_, k_ * r);
      const complex x = screened::chi(0, eta_, k_, *spec_.screening_radius());
      return specfun::coulomb_norm(0, eta_) * (fg.H() + x * fg.F) / (four_pi * r);
    }
    case Route::Generic: {
      const auto& p = pair(0);
      // lim u(r')/r' = slope_at_origin; the v normalization cancels in v/W
      return -p.u.slope_at_origin() * p.v.value(r) / (four_pi * r * p.wronskian);
    }
  }
  return 0.0;
}

GreenEvaluation green_sum(const potentials::PotentialSpec& spec, double k, double r, double rprime,
                          double cos_angle, double tol, int ell_budget) {
  const double lo = 0.5 * std::min(r, rprime), hi = 2.0 * std::max(r, rprime);
  Evaluator ev(spec, k, lo, hi);
  return ev.sum(r, rprime, cos_angle, tol, ell_budget);
}

complex green_at_origin(const potentials::PotentialSpec& spec, double k, double r) {
  Evaluator ev(spec, k, 0.5 * r, 2.0 * r);
  return ev.at_origin(r);
}

complex free_kernel(double k, double r, double rprime, double cos_angle) {
  const double d2 = r * r + rprime * rprime - 2.0 * r * rprime * cos_angle;
  const double d = std::sqrt(std::max(d2, 0.0));
  if (d == 0.0) throw std::domain_error("free_kernel: coincident points");
  return std::exp(complex(0.0, k * d)) / (four_pi * d);
}

}  // namespace singreen::greens3d
