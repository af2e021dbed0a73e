// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracles {

namespace {

constexpr double pi = std::numbers::pi;

// RK4 sweep of F'' = (l(l+1)/x^2 + 2 eta/x - 1) F from x0 to x1, step capped
// by a fraction of the local radius so the centrifugal region stays resolved.
std::pair<double, double> rk4_coulomb(int ell, double eta, double x0, double f0, double df0,
                                      double x1) {
  const double ll1 = ell * (ell + 1.0);
  const auto rhs = [&](double x, double f) { return (ll1 / (x * x) + 2.0 * eta / x - 1.0) * f; };
  const double h_base = 5e-4;
  const double dir = x1 > x0 ? 1.0 : -1.0;
  double x = x0, f = f0, df = df0;
  while (dir * (x1 - x) > 0.0) {
    double h = dir * std::min(h_base, 0.005 * x);
    if (dir * (x + h - x1) > 0.0) h = x1 - x;
    const double k1f = df, k1d = rhs(x, f);
    const double k2f = df + 0.5 * h * k1d, k2d = rhs(x + 0.5 * h, f + 0.5 * h * k1f);
    const double k3f = df + 0.5 * h * k2d, k3d = rhs(x + 0.5 * h, f + 0.5 * h * k2f);
    const double k4f = df + h * k3d, k4d = rhs(x + h, f + h * k3f);
    f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    df += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    x += h;
  }
  return {f, df};
}

}  // namespace

complex log_gamma(complex z) {
  // Lanczos, g = 7, 9 coefficients
  static const double c[] = {0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,  12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  complex a = c[0];
  const complex t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (z + static_cast<double>(i));
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double coulomb_norm_product(int ell, double eta) {
  if (eta == 0.0) {
    double v = 1.0;
    for (int s = 1; s <= ell; ++s) v /= 2.0 * s + 1.0;
    return v;
  }
  double log_c = ell * std::log(2.0) - pi * eta / 2.0 +
                 0.5 * std::log(pi * eta / std::sinh(pi * eta));
  for (int s = 1; s <= ell; ++s) log_c += 0.5 * std::log(s * s + eta * eta);
  for (int s = 2; s <= 2 * ell + 1; ++s) log_c -= std::log(static_cast<double>(s));
  return std::exp(log_c);
}

double coulomb_phase_lgamma(int ell, double eta) {
  return log_gamma(complex(ell + 1.0, eta)).imag();
}

std::pair<double, double> coulomb_f_series_rk(int ell, double eta, double x) {
  // series F = C_l(eta) x^{l+1} sum a_m x^m,
  // a_m m (m + 2l + 1) = 2 eta a_{m-1} - a_{m-2}
  const double x0 = std::min(0.5, 0.5 * x);
  std::vector<double> a{1.0};
  double s = 1.0, ds = ell + 1.0;
  for (int m = 1; m < 60; ++m) {
    const double am1 = a[m - 1];
    const double am2 = m >= 2 ? a[m - 2] : 0.0;
    a.push_back((2.0 * eta * am1 - am2) / (m * (m + 2.0 * ell + 1.0)));
    const double term = a[m] * std::pow(x0, m);
    s += term;
    ds += (ell + 1.0 + m) * term;
    if (std::abs(term) < 1e-18 * std::abs(s) && m > 8) break;
  }
  const double cl = coulomb_norm_product(ell, eta);
  const double f0 = cl * std::pow(x0, ell + 1.0) * s;
  const double df0 = cl * std::pow(x0, static_cast<double>(ell)) * ds;
  if (x == x0) return {f0, df0};
  return rk4_coulomb(ell, eta, x0, f0, df0, x);
}

std::pair<double, double> coulomb_g_asymptotic_rk(int ell, double eta, double x) {
  // far-field phase-amplitude series: with theta = x - eta log(2x) - l pi/2
  // + sigma_l,  G + iF = (P + iQ) e^{i theta} built from the recursive
  // coefficient pairs; started where the series still converges well
  const double x_far = std::max({2.0 * (std::abs(eta) + std::sqrt(ell * (ell + 1.0) + eta * eta)),
                                 x, 50.0});
  const double sigma = coulomb_phase_lgamma(ell, eta);
  const double theta = x_far - eta * std::log(2.0 * x_far) - ell * pi / 2.0 + sigma;

  // f, g coefficient recursion for the outgoing combination
  // H+ = e^{i theta} sum_n b_n, b_0 = 1,
  // b_{n+1} = b_n * (i (l(l+1) - (n + i eta)(n + 1 + i eta))) / (2 x (n+1))
  complex b = 1.0, sum = 1.0, dsum = 0.0;
  const double ll1 = ell * (ell + 1.0);
  double prev_mag = 1e300;
  for (int n = 0; n < 60; ++n) {
    const complex num =
        complex(0.0, 1.0) * (ll1 - (complex(n, eta)) * (complex(n + 1.0, eta)));
    b *= num / (2.0 * x_far * (n + 1.0));
    const double mag = std::abs(b);
    if (mag > prev_mag) break;  // asymptotic series: stop at smallest term
    prev_mag = mag;
    sum += b;
    dsum += -static_cast<double>(n + 1) * b / x_far;
    if (mag < 1e-17) break;
  }
  const complex phase = std::exp(complex(0.0, theta));
  const complex h = phase * sum;
  const complex dh = phase * (complex(0.0, 1.0 - eta / x_far) * sum + dsum);
  double g = h.real(), dg = dh.real();
  if (x == x_far) return {g, dg};
  const auto back = rk4_coulomb(ell, eta, x_far, g, dg, x);
  return back;
}

std::pair<double, double> riccati_dual_recurrence(int ell, double x) {
  const double s = std::sin(x), c = std::cos(x);
  // Riccati-Neumann upward (n_0 = cos, n_1 = cos/x + sin)
  double nm = c, nn = c / x + s;
  if (ell == 0) nn = nm;
  for (int l = 1; l < ell; ++l) {
    const double nx = (2.0 * l + 1.0) / x * nn - nm;
    nm = nn;
    nn = nx;
  }

  // Riccati-Bessel by downward Miller from a high start, normalized at j_0;
  // cross-checked against upward recurrence when x dominates ell
  double jj;
  {
    const int start = ell + 24 + static_cast<int>(x);
    double up1 = 0.0, u = 1e-290, raw = (ell == start) ? u : 0.0;
    for (int l = start; l >= 1; --l) {
      const double um1 = (2.0 * l + 1.0) / x * u - up1;
      if (l - 1 == ell) raw = um1;
      up1 = u;
      u = um1;
      if (std::abs(u) > 1e270) {
        const double inv = 1.0 / std::abs(u);
        u *= inv;
        up1 *= inv;
        raw *= inv;
      }
    }
    jj = raw * (s / u);
    if (x > ell + 12.0) {
      double a = s, b = s / x - c;
      for (int l = 1; l < ell; ++l) {
        const double nx = (2.0 * l + 1.0) / x * b - a;
        a = b;
        b = nx;
      }
      const double upward = ell == 0 ? a : b;
      if (std::abs(upward - jj) > 1e-10 * std::max(1.0, std::abs(upward))) {
        throw std::runtime_error("riccati oracle: recurrence routes disagree");
      }
    }
  }
  return {ell == 0 ? s : jj, ell == 0 ? c : nn};
}

complex digamma_series(complex z) {
  // psi(z) = -gamma + sum_{n>=0} [ 1/(n+1) - 1/(n+z) ], truncated with the
  // Euler-Maclaurin integral correction for the tail
  const int n_terms = 200000;
  complex sum = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) {
    sum += 1.0 / (n + 1.0) - 1.0 / (z + static_cast<double>(n));
  }
  // tail: sum_{n>=N} (z-1)/((n+1)(n+z)) = integral + half endpoint term
  const double N = n_terms;
  const complex tail =
      std::log((N + z) / (N + 1.0)) + 0.5 * (z - 1.0) / ((N + 1.0) * (N + z));
  return -std::numbers::egamma + sum + tail;
}

double i1_static_simpson(double v0, double rho, double r, double r0) {
  // multipole reduction of the static kernel: only the monopole survives,
  //   V0/(4pi) [ (1/r) Int_0^r q^{1-rho} dq + Int_r^{r0} q^{-rho} dq ],
  // each piece integrated numerically after flattening the endpoint with
  // q = t^{2/(2-rho)} (chosen differently from the library's substitution).
  const double p = 2.0 / (2.0 - rho);
  const auto simpson = [](const auto& f, double a, double b, int n) {
    double acc = f(a) + f(b);
    const double h = (b - a) / n;
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };

  // inner: Int_0^r q^{1-rho} dq = p * Int_0^{r^{1/p}} t^{p(2-rho)-1} dt
  const auto inner_t = [&](double t) { return std::pow(t, p * (2.0 - rho) - 1.0); };
  const double inner = p * simpson(inner_t, 0.0, std::pow(r, 1.0 / p), 20000);

  // outer: Int_r^{r0} q^{-rho} dq = Int e^{(1-rho) u} du in u = log q,
  // smooth over the whole range
  const auto outer_u = [&](double u) { return std::exp((1.0 - rho) * u); };
  const double outer = simpson(outer_u, std::log(r), std::log(r0), 40000);

  return v0 / (4.0 * pi) * (inner / r + outer);
}

}  // namespace oracles
