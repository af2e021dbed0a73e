// SPDX-License-Identifier: Apache-2.0

#include "singreen/zero_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "singreen/asymptotics.hpp"
#include "singreen/errors.hpp"
#include "singreen/specfun.hpp"

namespace singreen::zero_range {

Phi0Evaluator::Phi0Evaluator(potentials::PotentialSpec spec, double k, double r_lo, double r_hi,
                             int ell_max, radial::SolveOptions options)
    : k_(k), ell_max_(ell_max) {
  if (!(k > 0.0)) throw std::domain_error("Phi0Evaluator: k must be positive");
  const double r_tail = spec.effective_range(options.tail_epsilon);
  const double r_max = std::max(r_hi * 1.5, r_tail * 1.05);
  const double launch = std::min(r_lo * 0.5, options.r_start_factor * std::min(1.0, 1.0 / k));
  const auto grid = radial::make_grid(launch, r_max, k);

  pairs_.reserve(ell_max + 1);
  amplitudes_.reserve(ell_max + 1);
  for (int ell = 0; ell <= ell_max; ++ell) {
    pairs_.push_back(radial::solve_pair(spec, ell, k, grid, options));
    // v matches h+ at r_max (norm 1), so W(u, h+) = W(u, v)
    amplitudes_.push_back(-k / pairs_.back().wronskian);
  }
}

complex Phi0Evaluator::value(double r) const {
  // phi0(r on beam axis) = sum (2l+1) i^l A_l u_l(r) / (k r), P_l(1) = 1
  complex sum = 0.0;
  for (int ell = 0; ell <= ell_max_; ++ell) {
    const complex il = std::pow(complex(0.0, 1.0), ell);
    sum += (2.0 * ell + 1.0) * il * amplitudes_[ell] * pairs_[ell].u.value(r) / (k_ * r);
  }
  return sum;
}

complex Phi0Evaluator::at_origin() const {
  // u ~ r^{l+1}: only l = 0 contributes, u(r)/r -> slope
  return amplitudes_[0] * pairs_[0].u.slope_at_origin() / k_;
}

complex phi0_at_origin(const potentials::PotentialSpec& spec, double k, Phi0Method method) {
  Phi0Evaluator ev(spec, k, 1e-4, 1.0);
  if (method == Phi0Method::Limit) return ev.at_origin();

  // Richardson extrapolation of value(r) on r_j = r0 / 2^j; phi0(r) is
  // regular at the origin, so the even/odd powers of r cancel step by step
  const int n = 6;
  std::vector<complex> t(n);
  double r = 2e-3;
  for (int j = 0; j < n; ++j) {
    t[j] = ev.value(r);
    r *= 0.5;
  }
  for (int m = 1; m < n; ++m) {
    for (int j = n - 1; j >= m; --j) {
      const double w = std::pow(2.0, m);
      t[j] = (w * t[j] - t[j - 1]) / (w - 1.0);
    }
  }
  return t[n - 1];
}

complex solve_beta(double lambda, complex phi0_at_zero, complex B) {
  const complex denom = 1.0 + lambda * B;
  if (std::abs(denom) < 1e-12) {
    throw SingularConfigError("solve_beta: 1 + lambda B vanishes (contact resonance)");
  }
  return phi0_at_zero / denom;
}

PhiFullEvaluator::PhiFullEvaluator(ZeroRangeState state, potentials::PotentialSpec spec, double k,
                                   double r_lo, double r_hi)
    : state_(state), green_(spec, k, r_lo, r_hi), phi0_(spec, k, r_lo, r_hi) {}

complex PhiFullEvaluator::value(double r) {
  return phi0_.value(r) - state_.lambda * green_.at_origin(r) * state_.beta;
}

double omega(potentials::SingularityClass cls, double v0, double rho, double r) {
  using potentials::SingularityClass;
  if (!(r > 0.0)) throw std::domain_error("omega: r must be positive");
  double inv = 0.0;
  switch (cls) {
    case SingularityClass::SubCoulomb:
      return r;
    case SingularityClass::Coulomb:
      inv = 1.0 / r + v0 * std::log(r);
      break;
    case SingularityClass::SuperCoulomb:
      inv = 1.0 / r + asymptotics::a0(v0, rho) * std::pow(r, 1.0 - rho);
      break;
  }
  if (!(inv > 0.0)) {
    throw std::domain_error("omega: outside the monotone window (1/omega <= 0 at r = " +
                            std::to_string(r) + ")");
  }
  return 1.0 / inv;
}

namespace {

struct LinearFit {
  complex intercept;
  complex slope;
  double resid_over_span;  ///< rms residual / (|slope| * omega span)
};

LinearFit fit_linear(std::span<const std::pair<double, complex>> pts) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  complex y0 = 0.0, y1 = 0.0;
  for (const auto& [w, phi] : pts) {
    const complex y = w * phi;
    s0 += 1.0;
    s1 += w;
    s2 += w * w;
    y0 += y;
    y1 += w * y;
  }
  const double det = s0 * s2 - s1 * s1;
  LinearFit fit;
  fit.intercept = (s2 * y0 - s1 * y1) / det;
  fit.slope = (s0 * y1 - s1 * y0) / det;

  double resid2 = 0.0;
  for (const auto& [w, phi] : pts) {
    resid2 += std::norm(w * phi - fit.intercept - fit.slope * w);
  }
  const double span = (pts.back().first - pts.front().first) * std::abs(fit.slope);
  fit.resid_over_span = std::sqrt(resid2 / pts.size()) / std::max(span, 1e-300);
  return fit;
}

}  // namespace

RegularizeResult regularize(std::span<const std::pair<double, complex>> phi_samples,
                            potentials::SingularityClass cls, double v0, double rho) {
  if (phi_samples.size() < 9) {
    throw std::invalid_argument("regularize: need at least 9 samples");
  }

  // transform to (omega, phi) sorted by omega
  std::vector<std::pair<double, complex>> pts;
  pts.reserve(phi_samples.size());
  for (const auto& [r, phi] : phi_samples) {
    pts.emplace_back(omega(cls, v0, rho, r), phi);
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // beta is the slope of omega*phi over the smallest-omega third; under the
  // correct omega the slope has converged there, so the middle third must
  // agree with it -- a wrong-class variable leaves an O(1) slope drift
  const std::size_t third = std::max<std::size_t>(4, pts.size() / 3);
  const auto small = fit_linear(std::span(pts).subspan(0, third));
  const auto middle = fit_linear(std::span(pts).subspan(third, third));

  RegularizeResult out;
  out.beta = small.slope;
  out.intercept = small.intercept;
  const double drift = std::abs(small.slope - middle.slope) /
                       (std::abs(small.slope) + std::abs(middle.slope) + 1e-300);
  out.nonlinearity = std::max(drift, small.resid_over_span);
  out.ok = drift < 0.02 && small.resid_over_span < 0.05;
  return out;
}

}  // namespace singreen::zero_range
