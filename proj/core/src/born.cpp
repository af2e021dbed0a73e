// SPDX-License-Identifier: Apache-2.0

#include "singreen/born.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "singreen/specfun.hpp"

namespace singreen::born {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

// Cap panel widths so the e^{2ikq} oscillation stays resolved by the rule.
std::vector<double> oscillation_capped(std::vector<double> bps, double k) {
  const double max_w = 3.0 / std::max(k, 1e-3);
  std::vector<double> out;
  out.push_back(bps.front());
  for (std::size_t i = 1; i < bps.size(); ++i) {
    const double a = bps[i - 1], b = bps[i];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_w)));
    for (int p = 1; p <= pieces; ++p) out.push_back(a + (b - a) * p / pieces);
  }
  return out;
}

quadrature::Result integrate_tail(const quadrature::Integrand& f, double lo, double hi, double k,
                                  int order, double target_rel) {
  if (!(hi > lo)) return {0.0, 0.0, true};
  const auto bps = oscillation_capped(quadrature::geometric_breakpoints(lo, hi), k);
  const std::complex<double> coarse = quadrature::panels(f, bps, order);
  const std::complex<double> fine = quadrature::panels(f, bps, 2 * order);
  quadrature::Result res;
  res.value = fine;
  res.err_estimate = std::abs(fine - coarse);
  res.converged = res.err_estimate <= target_rel * std::max(1.0, std::abs(fine));
  return res;
}

double outer_cut(const potentials::PotentialSpec& spec) {
  return std::min(spec.effective_range(1e-13) * 1.05, 1e4);
}

// Riccati-Bessel value alone; the substitution panels reach arbitrarily
// small q where the companion Neumann function would overflow, so the
// leading power takes over there.
double riccati_j_safe(int ell, double x) {
  if (x < 1e-4) {
    double dfact = 1.0;
    for (int s = 1; s <= ell; ++s) dfact *= 2.0 * s + 1.0;
    return std::pow(x, ell + 1.0) / dfact;
  }
  return specfun::riccati(ell, x).j;
}

}  // namespace

double i1_singular_closed(double v0, double rho, double r, double r0) {
  if (!(rho < 2.0)) throw std::domain_error("i1_singular_closed: rho must be < 2");
  if (!(r > 0.0) || !(r < r0)) throw std::domain_error("i1_singular_closed: need 0 < r < r0");
  if (v0 == 0.0) return 0.0;
  if (rho == 1.0) {
    return -v0 / four_pi * std::log(r) + v0 / four_pi * (1.0 + std::log(r0));
  }
  return v0 / (four_pi * (2.0 - rho) * (rho - 1.0)) * std::pow(r, 1.0 - rho) +
         v0 / (four_pi * (1.0 - rho)) * std::pow(r0, 1.0 - rho);
}

quadrature::Result i1_quadrature(const potentials::PotentialSpec& spec, double k, double r,
                                 const SplitConfig& config) {
  if (!(k > 0.0)) throw std::domain_error("i1_quadrature: k must be positive");
  if (!(r > 0.0) || !(r < config.r0)) throw std::domain_error("i1_quadrature: need 0 < r < r0");
  if (spec.is_free()) return {0.0, 0.0, true};

  using complex = std::complex<double>;
  const auto hp = [&](double x) { return std::exp(complex(0.0, x)); };

  // s-wave reduction: (1/(4 pi k r)) [ h+(kr) Int_0^r sin(kq) V h+(kq) dq
  //                                  + sin(kr) Int_r^r0 h+(kq)^2 V dq ]
  const auto inner = quadrature::integrate_power_singular(
      [&](double q) -> complex { return std::sin(k * q) * potentials::evaluate(spec, q) * hp(k * q); },
      r, spec.rho(), config.gauss_order, config.target_rel);

  const auto outer = quadrature::integrate_geometric(
      [&](double q) -> complex {
        const complex h = hp(k * q);
        return h * h * potentials::evaluate(spec, q);
      },
      r, config.r0, config.gauss_order, config.target_rel);

  quadrature::Result res;
  res.value = (hp(k * r) * inner.value + std::sin(k * r) * outer.value) / (four_pi * k * r);
  res.err_estimate = (inner.err_estimate + outer.err_estimate) / (four_pi * k * r);
  res.converged = inner.converged && outer.converged;
  return res;
}

quadrature::Result i2_quadrature(const potentials::PotentialSpec& spec, double k, double r,
                                 const SplitConfig& config) {
  if (!(k > 0.0)) throw std::domain_error("i2_quadrature: k must be positive");
  if (!(r > 0.0) || !(r < config.r0)) throw std::domain_error("i2_quadrature: need 0 < r < r0");
  if (spec.is_free()) return {0.0, 0.0, true};

  using complex = std::complex<double>;
  const double cut = outer_cut(spec);
  auto res = integrate_tail(
      [&](double q) -> complex {
        const complex h = std::exp(complex(0.0, k * q));
        return h * h * potentials::evaluate(spec, q);
      },
      config.r0, cut, k, config.gauss_order, config.target_rel);
  const double scale = std::sin(k * r) / (four_pi * k * r);
  res.value *= scale;
  res.err_estimate *= std::abs(scale);
  return res;
}

double i2_bound(const potentials::PotentialSpec& spec, double r0) {
  if (!(spec.delta() > 1.0)) {
    throw std::invalid_argument("i2_bound: requires a tail exponent delta > 1");
  }
  if (!(r0 >= 0.0)) throw std::domain_error("i2_bound: r0 must be nonnegative");
  // |I2| <= (1/(4pi)^2) Int_{q>r0} |V(q)|/(q |r-q|) dq^3; the angular
  // integral contributes 4 pi / q_>, leaving C/(4pi) (1+r0)^{-delta}/delta
  const double c = spec.tail_bound_c();
  return c / four_pi * std::pow(1.0 + r0, -spec.delta()) / spec.delta();
}

quadrature::Result j1_j2_phi0(const potentials::PotentialSpec& spec, double k, double r,
                              const SplitConfig& config, int ell_max) {
  if (!(k > 0.0)) throw std::domain_error("j1_j2_phi0: k must be positive");
  if (!(r > 0.0) || !(r < config.r0)) throw std::domain_error("j1_j2_phi0: need 0 < r < r0");
  if (spec.is_free()) return {0.0, 0.0, true};

  using complex = std::complex<double>;
  const double cut = outer_cut(spec);

  // beam direction: J(r) = sum_l (2l+1) i^l (1/(k^2 r))
  //                        Int j_l(k q_<) h+_l(k q_>) V(q) j_l(k q) dq
  complex total = 0.0;
  double err = 0.0;
  bool converged_all = true;
  double tail[3] = {1e300, 1e300, 1e300};
  bool series_ok = false;

  for (int ell = 0; ell <= ell_max; ++ell) {
    const auto jl = [&](double x) { return riccati_j_safe(ell, x); };
    const auto hl = [&](double x) { return specfun::riccati(ell, x).h(); };

    const auto piece_in = quadrature::integrate_power_singular(
        [&](double q) -> complex {
          const double j = jl(k * q);
          return j * j * potentials::evaluate(spec, q);
        },
        r, spec.rho(), config.gauss_order, config.target_rel);

    const auto piece_mid = quadrature::integrate_geometric(
        [&](double q) -> complex { return hl(k * q) * jl(k * q) * potentials::evaluate(spec, q); },
        r, config.r0, config.gauss_order, config.target_rel);

    const auto piece_out = integrate_tail(
        [&](double q) -> complex { return hl(k * q) * jl(k * q) * potentials::evaluate(spec, q); },
        config.r0, cut, k, config.gauss_order, config.target_rel);

    const complex radial =
        hl(k * r) * piece_in.value + jl(k * r) * (piece_mid.value + piece_out.value);
    const complex il = std::pow(complex(0.0, 1.0), ell);
    const complex term = (2.0 * ell + 1.0) * il * radial / (k * k * r);

    total += term;
    err += piece_in.err_estimate + piece_mid.err_estimate + piece_out.err_estimate;
    converged_all = converged_all && piece_in.converged && piece_mid.converged && piece_out.converged;

    tail[ell % 3] = std::abs(term);
    if (ell >= 2 && std::max({tail[0], tail[1], tail[2]}) <= 1e-12 * std::max(1.0, std::abs(total))) {
      series_ok = true;
      break;
    }
  }

  quadrature::Result res;
  res.value = -total;  // iteration enters the solution with a minus sign
  res.err_estimate = err;
  res.converged = converged_all && series_ok;
  return res;
}

}  // namespace singreen::born
