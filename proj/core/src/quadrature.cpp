// SPDX-License-Identifier: Apache-2.0

#include "singreen/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace singreen::quadrature {

namespace {

Rule compute_rule(int order) {
  // Newton iteration on the Legendre polynomial, cosine initial guess.
  Rule rule;
  rule.x.resize(order);
  rule.w.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[order - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[order - 1 - i] = rule.w[i];
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  if (order < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

std::complex<double> panels(const Integrand& f, const std::vector<double>& breakpoints, int order) {
  const Rule& rule = gauss_legendre(order);
  std::complex<double> total = 0.0;
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p], b = breakpoints[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < order; ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    total += half * acc;
  }
  return total;
}

std::vector<double> geometric_breakpoints(double lo, double hi, double growth) {
  std::vector<double> pts{lo};
  double w = lo > 0.0 ? lo : hi / 1e12;
  double p = lo + w;
  while (p < hi) {
    pts.push_back(p);
    w *= growth;
    p += w;
  }
  pts.push_back(hi);
  return pts;
}

Result integrate_geometric(const Integrand& f, double lo, double hi, int order, double target_rel) {
  if (!(hi > lo)) return {0.0, 0.0, true};
  const auto bps = geometric_breakpoints(lo, hi);
  const std::complex<double> coarse = panels(f, bps, order);
  const std::complex<double> fine = panels(f, bps, 2 * order);
  const double err = std::abs(fine - coarse);
  Result res;
  res.value = fine;
  res.err_estimate = err;
  res.converged = err <= target_rel * std::max(1.0, std::abs(fine));
  return res;
}

Result integrate_power_singular(const Integrand& f, double a, double rho, int order,
                                double target_rel) {
  if (!(rho < 2.0)) throw std::invalid_argument("integrate_power_singular: rho must be < 2");
  if (!(a > 0.0)) return {0.0, 0.0, true};

  // q = t^beta with beta = 1/(2-rho): dq q^{-rho} h(q) -> beta h(t^beta) dt
  // up to the remaining smooth part; apply the substitution to the full
  // integrand so only the Jacobian shows up here.
  const double beta = 1.0 / (2.0 - rho);
  const double A = std::pow(a, 1.0 / beta);
  const auto transformed = [&](double t) -> std::complex<double> {
    const double q = std::pow(t, beta);
    return f(q) * beta * std::pow(t, beta - 1.0);
  };
  // The transformed integrand is bounded but can have fractional-power
  // derivatives at t = 0; geometric panels resolve that.
  const double tiny = A * 1e-30;
  const auto bps = geometric_breakpoints(tiny, A);
  const std::complex<double> coarse = panels(transformed, bps, order);
  const std::complex<double> fine = panels(transformed, bps, 2 * order);
  const double err = std::abs(fine - coarse);
  Result res;
  res.value = fine;
  res.err_estimate = err;
  res.converged = err <= target_rel * std::max(1.0, std::abs(fine));
  return res;
}

}  // namespace singreen::quadrature
