// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "singreen/asymptotics.hpp"
#include "singreen/born.hpp"
#include "singreen/errors.hpp"
#include "singreen/potential.hpp"
#include "singreen/zero_range.hpp"

using namespace singreen;
using complex = std::complex<double>;
using potentials::SingularityClass;
using std::numbers::pi;

TEST_CASE("solve_beta fixed point") {
  CHECK(zero_range::solve_beta(0.0, {0.3, 0.1}, {9.0, 0.0}) == complex(0.3, 0.1));
  CHECK(zero_range::solve_beta(2.0, {1.0, 0.0}, {0.0, 0.0}) == complex(1.0, 0.0));
  const complex beta = zero_range::solve_beta(2.0, {1.0, 0.0}, {0.25, 0.1});
  CHECK(std::abs(beta - 1.0 / complex(1.5, 0.2)) <= 1e-15);
  // fixed-point identity beta (1 + lambda B) = phi0(0)
  CHECK(std::abs(beta * complex(1.5, 0.2) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(zero_range::solve_beta(2.0, {1.0, 0.0}, {-0.5, 0.0}), SingularConfigError);
}

TEST_CASE("omega variables per class") {
  CHECK(zero_range::omega(SingularityClass::SubCoulomb, 5.0, 0.5, 0.37) == 0.37);
  CHECK(zero_range::omega(SingularityClass::Coulomb, 0.0, 1.0, 0.02) ==
        doctest::Approx(0.02).epsilon(1e-15));
  // 1/omega = 1/r + A0 r^{1-rho}: A0(1, 1.5) = -4, r = 0.01 -> 1/(100 - 40)
  CHECK(zero_range::omega(SingularityClass::SuperCoulomb, 1.0, 1.5, 0.01) ==
        doctest::Approx(1.0 / 60.0).epsilon(1e-14));
  // outside the monotone window the variable is refused
  CHECK_THROWS_AS(zero_range::omega(SingularityClass::SuperCoulomb, 1.0, 1.5, 0.2),
                  std::domain_error);
}

TEST_CASE("omega is strictly increasing on the validated window") {
  for (auto cls : {SingularityClass::SubCoulomb, SingularityClass::Coulomb,
                   SingularityClass::SuperCoulomb}) {
    double prev = 0.0;
    for (double r = 1e-5; r < 5e-2; r *= 1.6) {
      const double w = zero_range::omega(cls, 1.0, cls == SingularityClass::SuperCoulomb ? 1.5 : 1.0, r);
      CHECK(w > prev);
      prev = w;
    }
  }
}

TEST_CASE("regularize recovers the slope of an exact template") {
  const double alpha = -0.8;
  const complex beta(0.65, -0.2);
  std::vector<std::pair<double, complex>> samples;
  for (int i = 0; i < 24; ++i) {
    const double r = 1e-4 * std::pow(100.0, i / 23.0);
    const double w = zero_range::omega(SingularityClass::Coulomb, 1.0, 1.0, r);
    samples.emplace_back(r, alpha / (4.0 * pi * w) + beta);
  }
  const auto reg = zero_range::regularize(samples, SingularityClass::Coulomb, 1.0, 1.0);
  CHECK(reg.ok);
  CHECK(std::abs(reg.beta - beta) <= 1e-10);
  CHECK(std::abs(reg.intercept - alpha / (4.0 * pi)) <= 1e-10);
}

TEST_CASE("phi0 at the origin: plane wave limit and method agreement") {
  const auto free = potentials::PotentialSpec::free_space();
  const complex limit = zero_range::phi0_at_origin(free, 1.0, zero_range::Phi0Method::Limit);
  CHECK(std::abs(limit - 1.0) <= 1e-9);
  const complex extrap = zero_range::phi0_at_origin(free, 1.0, zero_range::Phi0Method::Extrapolate);
  CHECK(std::abs(extrap - 1.0) <= 1e-7);
}

TEST_CASE("phi0 at the origin: sub-Coulomb potential, two routes agree") {
  const auto spec = potentials::PotentialSpec::power_exp(0.5, 1.0);
  const complex a = zero_range::phi0_at_origin(spec, 1.0, zero_range::Phi0Method::Limit);
  const complex b = zero_range::phi0_at_origin(spec, 1.0, zero_range::Phi0Method::Extrapolate);
  CHECK(std::abs(a) > 0.1);
  CHECK(std::abs(a - b) <= 1e-6 * std::abs(a));
}

TEST_CASE("phi0 at the origin: screened Coulomb extrapolation golden") {
  const auto spec = potentials::PotentialSpec::screened_coulomb(2.0, 10.0);
  const complex lim = zero_range::phi0_at_origin(spec, 1.0, zero_range::Phi0Method::Limit);
  const complex ext = zero_range::phi0_at_origin(spec, 1.0, zero_range::Phi0Method::Extrapolate);
  CHECK(std::abs(lim - ext) <= 1e-6 * std::abs(lim));
}

TEST_CASE("phi evaluator: lambda = 0 reduces to phi0 and the template closes") {
  const double k = 1.0;
  const auto spec = potentials::PotentialSpec::power_exp(1.0, 1.0);

  zero_range::ZeroRangeState state;
  state.lambda = 0.0;
  state.beta = 0.0;
  state.cls = SingularityClass::Coulomb;
  zero_range::PhiFullEvaluator phi(state, spec, k, 1e-4, 1e-2);
  zero_range::Phi0Evaluator phi0(spec, k, 1e-4, 1e-2);
  for (double r : {2e-4, 1e-3, 8e-3}) {
    CHECK(std::abs(phi.value(r) - phi0.value(r)) <= 1e-12);
  }

  // without a singular part the slope extraction returns phi0(0)
  std::vector<std::pair<double, complex>> samples;
  for (double r : asymptotics::fit_window(1e-4, 1e-2, 24)) {
    samples.emplace_back(r, phi0.value(r));
  }
  // the slope picks up phi0's own O(r) variation over the window
  const auto reg = zero_range::regularize(samples, SingularityClass::Coulomb, 1.0, 1.0);
  CHECK(reg.ok);
  CHECK(std::abs(reg.beta - phi0.at_origin()) <= 2e-3 * std::abs(phi0.at_origin()));
  CHECK(std::abs(reg.intercept) <= 1e-6);
}

TEST_CASE("phi0 radial route agrees with the first-iteration quadrature route") {
  // phi0 = plane wave + first iteration + O(V0^2); at weak coupling the
  // residual must shrink quadratically with V0
  const double k = 1.0;
  double prev_resid = 0.0;
  for (double v0 : {0.01, 0.005}) {
    const auto spec = potentials::PotentialSpec::power_exp(1.5, v0);
    zero_range::Phi0Evaluator phi0(spec, k, 0.05, 1.5);
    const double r = 0.3;
    const complex plane = std::exp(complex(0.0, k * r));
    const auto first = born::j1_j2_phi0(spec, k, r);
    REQUIRE(first.converged);
    const double with_first = std::abs(phi0.value(r) - plane - first.value);
    const double without = std::abs(phi0.value(r) - plane);
    CHECK(with_first < 0.02 * without);  // first order removes the O(V0) part
    if (prev_resid > 0.0) {
      CHECK(prev_resid / with_first == doctest::Approx(4.0).epsilon(0.15));
    }
    prev_resid = with_first;
  }
}

TEST_CASE("super-Coulomb solution carries the A0 singular ratio") {
  const double k = 1.0, lambda = 1.0, v0 = 1.0, rho = 1.25;
  const auto spec = potentials::PotentialSpec::power_exp(rho, v0);
  const auto cls = SingularityClass::SuperCoulomb;

  std::vector<std::pair<double, complex>> g_samples;
  greens3d::Evaluator green(spec, k, 1e-5, 1e-3);
  for (double r : asymptotics::fit_window(1e-5, 1e-3, 40)) {
    g_samples.emplace_back(r, green.at_origin(r));
  }
  asymptotics::FitOptions opt;
  opt.corrections = asymptotics::default_corrections(cls, rho);
  const auto g_fit = asymptotics::fit_short_range(g_samples, cls, rho, opt);

  zero_range::Phi0Evaluator phi0(spec, k, 1e-5, 1e-3);
  const complex beta = zero_range::solve_beta(lambda, phi0.at_origin(), g_fit.const_term);

  std::vector<std::pair<double, complex>> phi_samples;
  for (std::size_t i = 0; i < g_samples.size(); ++i) {
    const double r = g_samples[i].first;
    phi_samples.emplace_back(r, phi0.value(r) - lambda * g_samples[i].second * beta);
  }
  const auto fit = asymptotics::fit_short_range(phi_samples, cls, rho, opt);
  const double a0 = asymptotics::a0(v0, rho);
  CHECK(fit.extra_coeff / fit.pole_coeff == doctest::Approx(a0).epsilon(1e-2));
}

TEST_CASE("full solution short-range template carries alpha = -lambda beta") {
  const double k = 1.0, lambda = 1.0, v0 = 1.0;
  const auto spec = potentials::PotentialSpec::power_exp(1.0, v0);

  // constant of the Green's function from its fitted series
  std::vector<std::pair<double, complex>> g_samples;
  greens3d::Evaluator green(spec, k, 1e-4, 1e-2);
  for (double r : asymptotics::fit_window(1e-4, 1e-2, 40)) {
    g_samples.emplace_back(r, green.at_origin(r));
  }
  asymptotics::FitOptions opt;
  opt.corrections = asymptotics::default_corrections(SingularityClass::Coulomb, 1.0);
  const auto g_fit = asymptotics::fit_short_range(g_samples, SingularityClass::Coulomb, 1.0, opt);

  zero_range::Phi0Evaluator phi0(spec, k, 1e-4, 1e-2);
  const complex beta = zero_range::solve_beta(lambda, phi0.at_origin(), g_fit.const_term);

  zero_range::ZeroRangeState state;
  state.lambda = lambda;
  state.beta = beta;
  state.phi0_at_zero = phi0.at_origin();
  state.B = g_fit.const_term;
  state.cls = SingularityClass::Coulomb;

  zero_range::PhiFullEvaluator phi(state, spec, k, 1e-4, 1e-2);
  std::vector<std::pair<double, complex>> phi_samples;
  for (double r : asymptotics::fit_window(1e-4, 1e-2, 40)) {
    phi_samples.emplace_back(r, phi.value(r));
  }

  // fitted singular structure: extra/pole = V0 (real parts; the complex
  // amplitude is recovered by the regularization intercept below)
  const auto fit = asymptotics::fit_short_range(phi_samples, SingularityClass::Coulomb, 1.0, opt);
  CHECK(fit.extra_coeff / fit.pole_coeff == doctest::Approx(v0).epsilon(1e-3));

  // regularization closes the loop: slope = beta, intercept = alpha/(4 pi)
  const complex alpha = state.alpha();
  const auto reg = zero_range::regularize(phi_samples, SingularityClass::Coulomb, v0, 1.0);
  CHECK(reg.ok);
  CHECK(std::abs(reg.beta - beta) <= 1e-3 * std::abs(beta));
  CHECK(std::abs(reg.intercept - alpha / (4.0 * pi)) <= 2e-3 * std::abs(alpha / (4.0 * pi)));

  // wrong-class variable trips the flag
  const auto bad = zero_range::regularize(phi_samples, SingularityClass::SubCoulomb, v0, 1.0);
  CHECK_FALSE(bad.ok);
}
