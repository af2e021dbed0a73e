// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "singreen/errors.hpp"
#include "singreen/potential.hpp"
#include "singreen/radial.hpp"
#include "singreen/specfun.hpp"

using namespace singreen;
using complex = std::complex<double>;

namespace {

const auto free_spec = potentials::PotentialSpec::free_space();

}  // namespace

TEST_CASE("frobenius start reproduces the free solution") {
  // V = 0, l = 0: u proportional to sin(k r)/k with unit slope
  const double k = 1.3, r0 = 1e-3;
  const auto fs = radial::frobenius_start(free_spec, 0, k, r0);
  CHECK(fs.value == doctest::Approx(std::sin(k * r0) / k).epsilon(1e-12));
  CHECK(fs.derivative == doctest::Approx(std::cos(k * r0)).epsilon(1e-12));
}

TEST_CASE("frobenius start matches the Coulomb function") {
  // rho = 1 core: u = F_l(eta, kr) / (C_l(eta) k^{l+1})
  const double k = 1.0, v0 = 2.0, r0 = 1e-3;
  const auto spec = potentials::PotentialSpec::coulomb(v0);
  const double eta = v0 / (2.0 * k);
  for (int ell : {0, 1}) {
    const auto fs = radial::frobenius_start(spec, ell, k, r0);
    const auto fg = specfun::coulomb_fg(ell, eta, k * r0);
    const double norm = specfun::coulomb_norm(ell, eta) * std::pow(k, ell + 1.0);
    CHECK(fs.value == doctest::Approx(fg.F / norm).epsilon(1e-10));
    CHECK(fs.derivative == doctest::Approx(k * fg.dF / norm).epsilon(1e-10));
  }
}

TEST_CASE("frobenius start leading singular correction") {
  // rho = 1.5, l = 0: u/r = 1 + r^{1/2} V0/((2-rho)(3-rho)) + ...
  const double rho = 1.5, v0 = 1.0, r0 = 1e-3;
  const auto spec = potentials::PotentialSpec::power(rho, v0, 10.0);
  const auto fs = radial::frobenius_start(spec, 0, 1.0, r0);
  const double correction = fs.value / r0 - 1.0;
  const double lead = std::pow(r0, 2.0 - rho) * v0 / ((2.0 - rho) * (3.0 - rho));
  CHECK(correction == doctest::Approx(lead).epsilon(2e-2));  // next order is O(r)
}

TEST_CASE("frobenius start rejects a start radius outside convergence") {
  const auto spec = potentials::PotentialSpec::power_exp(1.9, 50.0);
  CHECK_THROWS_AS(radial::frobenius_start(spec, 0, 1.0, 5.0), AccuracyError);
}

TEST_CASE("regular solution degenerates to the Riccati function") {
  // unit-slope normalization: u = (2l+1)!! j_l(kr) / k^{l+1}
  const double k = 1.1;
  const auto grid = radial::make_grid(1e-5, 20.0, k);
  for (int ell : {0, 1, 3, 5}) {
    double dfact = 1.0;
    for (int s = 1; s <= ell; ++s) dfact *= 2.0 * s + 1.0;
    const auto u = radial::solve_regular(free_spec, ell, k, grid);
    for (double r : {0.01, 0.4, 3.0, 17.0}) {
      const double expected = dfact * specfun::riccati(ell, k * r).j / std::pow(k, ell + 1.0);
      CHECK(u.value(r) == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("regular solution matches the Coulomb function inside the screening radius") {
  const double k = 1.0, v0 = 2.0, R = 10.0;
  const auto spec = potentials::PotentialSpec::screened_coulomb(v0, R);
  const double eta = potentials::sommerfeld_eta(spec, k);
  const auto grid = radial::make_grid(1e-5, 8.0, k);
  const auto u = radial::solve_regular(spec, 0, k, grid);
  const double norm = specfun::coulomb_norm(0, eta) * k;
  for (double r : {0.05, 0.7, 4.0, 7.5}) {
    CHECK(u.value(r) == doctest::Approx(specfun::coulomb_fg(0, eta, k * r).F / norm).epsilon(1e-7));
  }
}

TEST_CASE("ODE residual stays small and improves under refinement") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const double k = 1.0;
  const auto coarse = radial::make_grid(1e-4, 10.0, k, 12, 0.5);
  const auto fine = radial::make_grid(1e-4, 10.0, k, 48, 0.1);
  const auto u_c = radial::solve_regular(spec, 0, k, coarse);
  const auto u_f = radial::solve_regular(spec, 0, k, fine);
  const double res_c = radial::ode_residual(spec, u_c);
  const double res_f = radial::ode_residual(spec, u_f);
  CHECK(res_f <= 1e-7);
  CHECK(res_f <= res_c / 10.0);  // interpolation error drops fast with spacing
}

TEST_CASE("outgoing solution: free case and screened exterior") {
  const double k = 0.9;
  const auto grid = radial::make_grid(0.05, 25.0, k);
  for (int ell : {0, 2}) {
    const auto v = radial::solve_outgoing(free_spec, ell, k, grid);
    for (double r : {0.3, 2.0, 12.0}) {
      const auto rb = specfun::riccati(ell, k * r);
      CHECK(std::abs(v.value(r) - rb.h()) <= 1e-9 * std::abs(rb.h()));
    }
  }

  const auto spec = potentials::PotentialSpec::screened_coulomb(2.0, 10.0);
  const auto v = radial::solve_outgoing(spec, 0, 1.0, radial::make_grid(0.05, 30.0, 1.0));
  const auto rb = specfun::riccati(0, 14.0);
  CHECK(std::abs(v.value(14.0) - rb.h()) <= 1e-9 * std::abs(rb.h()));
}

TEST_CASE("outgoing solution keeps |v e^{-ikr}| constant at large radii") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const double k = 1.0;
  const auto v = radial::solve_outgoing(spec, 0, k, radial::make_grid(1e-3, 35.0, k));
  const complex a = v.value(30.0) * std::exp(complex(0.0, -k * 30.0));
  const complex b = v.value(34.0) * std::exp(complex(0.0, -k * 34.0));
  CHECK(std::abs(a - b) <= 1e-7 * std::abs(a));
}

TEST_CASE("outgoing solution demands a negligible tail") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  CHECK_THROWS_AS(radial::solve_outgoing(spec, 0, 1.0, radial::make_grid(1e-3, 5.0, 1.0)),
                  std::domain_error);
}

TEST_CASE("Wronskian is constant across the grid") {
  const auto spec = potentials::PotentialSpec::power_exp(1.3, -0.7);
  const auto grid = radial::make_grid(1e-5, 30.0, 1.0);
  const auto pair = radial::solve_pair(spec, 1, 1.0, grid);
  for (std::size_t i = 1; i + 1 < grid.size(); i += 5) {
    CHECK(std::abs(pair.wronskian_at(grid[i]) / pair.wronskian - 1.0) <= 1e-8);
  }
  // between nodes the derivative interpolant adds its own (small) error
  for (double r : {0.031, 1.01, 9.07}) {
    CHECK(std::abs(pair.wronskian_at(r) / pair.wronskian - 1.0) <= 5e-7);
  }
}

TEST_CASE("partial green: free closed form, symmetry, domain") {
  const double k = 1.0;
  const auto grid = radial::make_grid(1e-4, 25.0, k);
  const auto pair = radial::solve_pair(free_spec, 0, k, grid);

  // G_0(r, r') = j(k r_<) h+(k r_>)/k for V = 0
  for (auto [r, rp] : {std::pair{0.4, 1.9}, {2.5, 0.8}, {5.0, 5.5}}) {
    const double lo = std::min(r, rp), hi = std::max(r, rp);
    const complex expected =
        specfun::riccati(0, k * lo).j * specfun::riccati(0, k * hi).h() / k;
    const complex got = radial::partial_green(pair, r, rp);
    CHECK(std::abs(got - expected) <= 1e-8 * std::abs(expected));
    CHECK(radial::partial_green(pair, r, rp) == radial::partial_green(pair, rp, r));
  }
  CHECK_THROWS_AS(radial::partial_green(pair, 1e-6, 1.0), std::domain_error);
  CHECK_THROWS_AS(radial::partial_green(pair, 1.0, 40.0), std::domain_error);
}

TEST_CASE("partial green: derivative jump across the diagonal is -1") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const auto grid = radial::make_grid(1e-4, 35.0, 1.0);
  const auto pair = radial::solve_pair(spec, 0, 1.0, grid);
  const double rp = 1.3, h = 1e-4;
  const auto g = [&](double r) { return radial::partial_green(pair, r, rp); };
  const complex dplus = (-3.0 * g(rp) + 4.0 * g(rp + h) - g(rp + 2.0 * h)) / (2.0 * h);
  const complex dminus = (3.0 * g(rp) - 4.0 * g(rp - h) + g(rp - 2.0 * h)) / (2.0 * h);
  CHECK(std::abs(dplus - dminus + 1.0) <= 1e-6);
}

TEST_CASE("partial green is invariant under rescaling the outgoing solution") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const auto grid = radial::make_grid(1e-4, 35.0, 1.0);
  const auto u = radial::solve_regular(spec, 0, 1.0, grid);
  const auto v = radial::solve_outgoing(spec, 0, 1.0, grid);
  const auto pair = radial::make_solution_pair(u, v);
  const auto pair_scaled = radial::make_solution_pair(u, v.scaled(complex(3.0, 4.0)));
  for (auto [r, rp] : {std::pair{0.3, 1.1}, {2.0, 6.0}}) {
    const complex a = radial::partial_green(pair, r, rp);
    const complex b = radial::partial_green(pair_scaled, r, rp);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  }
}

TEST_CASE("debug dump covers the stored tables") {
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const auto grid = radial::make_grid(1e-3, 35.0, 1.0, 8, 0.5);
  const auto pair = radial::solve_pair(spec, 0, 1.0, grid);
  const std::string csv = radial::debug_csv(pair);
  CHECK(csv.find("r,u,du,re_v,im_v,re_dv,im_dv") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= static_cast<long>(grid.size()));
}

TEST_CASE("higher partial waves vanish fast at the origin") {
  // G_l(r, r')/(r r') is order r'^l as r' -> 0: the l = 1 term must die
  // linearly relative to l = 0
  const auto spec = potentials::PotentialSpec::power_exp(1.5, 1.0);
  const auto grid = radial::make_grid(1e-7, 35.0, 1.0);
  const auto p0 = radial::solve_pair(spec, 0, 1.0, grid);
  const auto p1 = radial::solve_pair(spec, 1, 1.0, grid);
  const double r = 0.5;
  double prev_ratio = 1e300;
  for (double rp : {1e-3, 1e-4, 1e-5}) {
    const double g0 = std::abs(radial::partial_green(p0, r, rp));
    const double g1 = std::abs(radial::partial_green(p1, r, rp));
    const double ratio = g1 / g0;
    CHECK(ratio < prev_ratio / 5.0);  // one power of r' per wave
    prev_ratio = ratio;
  }
}
