// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "singreen/asymptotics.hpp"
#include "singreen/potential.hpp"

using namespace singreen;
using complex = std::complex<double>;
using potentials::SingularityClass;
using std::numbers::pi;

namespace {

std::vector<std::pair<double, complex>> synth(double r_min, double r_max, int n,
                                              const std::function<complex(double)>& f) {
  std::vector<std::pair<double, complex>> out;
  for (double r : asymptotics::fit_window(r_min, r_max, n)) out.emplace_back(r, f(r));
  return out;
}

}  // namespace

TEST_CASE("coulomb_C: free limit and oracle value") {
  const double k = 1.3;
  const complex free_c = asymptotics::coulomb_C(k, 0.0);
  CHECK(free_c == complex(0.0, k / (4.0 * pi)));

  // independent assembly through the series digamma and explicit logs
  const double v0 = -2.0;
  const double eta = v0 / 2.0;
  const complex expected =
      complex(0.0, 1.0 / (4.0 * pi)) +
      v0 / (4.0 * pi) *
          (complex(std::log(2.0), -pi / 2.0) + oracles::digamma_series({1.0, eta}) +
           2.0 * std::numbers::egamma - 1.0);
  const complex got = asymptotics::coulomb_C(1.0, v0);
  CHECK(std::abs(got - expected) <= 1e-10 * std::abs(expected));
}

TEST_CASE("a0 arithmetic and domain") {
  CHECK(asymptotics::a0(0.0, 1.5) == 0.0);
  CHECK(asymptotics::a0(1.0, 1.5) == doctest::Approx(-4.0));
  CHECK(asymptotics::a0(-2.0, 1.25) == doctest::Approx(32.0 / 3.0));
  CHECK_THROWS_AS(asymptotics::a0(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(asymptotics::a0(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(asymptotics::a0(1.0, 0.5), std::domain_error);
}

TEST_CASE("exact-model recovery for all three classes") {
  // Coulomb template
  {
    const auto samples = synth(1e-4, 1e-2, 40, [](double r) {
      return complex(1.0 / (4.0 * pi) * (1.0 / r + 3.0 * std::log(r)), 0.0) + complex(2.0, 1.0);
    });
    const auto fit = asymptotics::fit_short_range(samples, SingularityClass::Coulomb, 1.0);
    CHECK(fit.pole_coeff == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-10));
    CHECK(fit.extra_coeff == doctest::Approx(3.0 / (4.0 * pi)).epsilon(1e-10));
    CHECK(std::abs(fit.const_term - complex(2.0, 1.0)) <= 1e-10);
    CHECK(fit.residual_rms <= 1e-12);
    CHECK(fit.accepted);
  }

  // super-Coulomb template
  {
    const double rho = 1.6;
    const auto samples = synth(1e-4, 1e-2, 40, [rho](double r) {
      return complex(2.0 / r - 5.0 * std::pow(r, 1.0 - rho) + 0.25, -0.125);
    });
    const auto fit = asymptotics::fit_short_range(samples, SingularityClass::SuperCoulomb, rho);
    CHECK(fit.pole_coeff == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.extra_coeff == doctest::Approx(-5.0).epsilon(1e-10));
    CHECK(std::abs(fit.const_term - complex(0.25, -0.125)) <= 1e-9);
  }

  // sub-Coulomb template has no extra basis function
  {
    const auto samples =
        synth(1e-4, 1e-2, 40, [](double r) { return complex(0.7 / r + 3.0, 0.5); });
    const auto fit = asymptotics::fit_short_range(samples, SingularityClass::SubCoulomb, 0.5);
    CHECK(fit.pole_coeff == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(fit.extra_coeff == 0.0);
    CHECK(std::abs(fit.const_term - complex(3.0, 0.5)) <= 1e-10);
  }
}

TEST_CASE("window stability of an accepted fit") {
  const auto model = [](double r) {
    return complex(1.0 / r + 2.0 * std::log(r) + 1.5 + 0.2 * r * std::log(r), 0.0);
  };
  asymptotics::FitOptions opt;
  opt.corrections = asymptotics::default_corrections(SingularityClass::Coulomb, 1.0);
  const auto full =
      asymptotics::fit_short_range(synth(1e-4, 1e-2, 40, model), SingularityClass::Coulomb, 1.0, opt);
  const auto half =
      asymptotics::fit_short_range(synth(1e-4, 5e-3, 40, model), SingularityClass::Coulomb, 1.0, opt);
  CHECK(std::abs(full.extra_coeff - half.extra_coeff) <=
        3.0 * std::max(full.extra_sigma, half.extra_sigma) + 1e-9);
}

TEST_CASE("near-Coulomb collinearity is refused without an override") {
  const auto samples = synth(1e-4, 1e-2, 40, [](double r) { return complex(1.0 / r, 0.0); });
  CHECK_THROWS_AS(asymptotics::fit_short_range(samples, SingularityClass::SuperCoulomb, 1.01),
                  std::invalid_argument);
  asymptotics::FitOptions opt;
  opt.allow_near_coulomb = true;
  CHECK_NOTHROW(asymptotics::fit_short_range(samples, SingularityClass::SuperCoulomb, 1.01, opt));
}

TEST_CASE("degenerate inputs are rejected loudly") {
  const auto narrow = synth(1e-3, 5e-3, 20, [](double r) { return complex(1.0 / r, 0.0); });
  CHECK_THROWS_AS(asymptotics::fit_short_range(narrow, SingularityClass::Coulomb, 1.0),
                  std::invalid_argument);

  const auto few = synth(1e-4, 1e-2, 6, [](double r) { return complex(1.0 / r, 0.0); });
  CHECK_THROWS_AS(asymptotics::fit_short_range(few, SingularityClass::Coulomb, 1.0),
                  std::invalid_argument);
}

TEST_CASE("ill-conditioned bases are flagged, never silently accepted") {
  asymptotics::FitOptions opt;
  opt.corrections = {{0.5, 0}, {0.5 + 1e-6, 0}};  // nearly identical columns
  const auto samples =
      synth(1e-4, 1e-2, 40, [](double r) { return complex(1.0 / r + std::log(r) + 1.0, 0.0); });
  const auto fit = asymptotics::fit_short_range(samples, SingularityClass::Coulomb, 1.0, opt);
  CHECK(fit.ill_conditioned);
  CHECK_FALSE(fit.accepted);
  CHECK(fit.condition_number > 1e8);
}

TEST_CASE("default corrections carry the iteration ladder") {
  const auto sup = asymptotics::default_corrections(SingularityClass::SuperCoulomb, 1.75);
  // ladder exponents 2(2-rho)-1 = -0.5 and 3(2-rho)-1 = -0.25 must be present
  bool has_half = false, has_quarter = false;
  for (const auto& t : sup) {
    has_half = has_half || std::abs(t.exponent + 0.5) < 1e-12;
    has_quarter = has_quarter || std::abs(t.exponent + 0.25) < 1e-12;
  }
  CHECK(has_half);
  CHECK(has_quarter);

  // marginal rung at rho = 1.5 appears as a log term
  const auto mid = asymptotics::default_corrections(SingularityClass::SuperCoulomb, 1.5);
  bool has_log = false;
  for (const auto& t : mid) has_log = has_log || (t.log_power == 1 && t.exponent == 0.0);
  CHECK(has_log);
}
