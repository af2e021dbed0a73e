// SPDX-License-Identifier: Apache-2.0

#include "singreen/screened.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "singreen/errors.hpp"
#include "singreen/specfun.hpp"

namespace singreen::screened {

namespace {

complex wronskian_x(complex f, complex df, complex g, complex dg) { return f * dg - df * g; }

}  // namespace

MatchingData match(int ell, double eta, double k, double R) {
  if (!(k > 0.0) || !(R > 0.0)) throw std::domain_error("match: k and R must be positive");
  const double x = k * R;
  const auto fg = specfun::coulomb_fg(ell, eta, x);
  const auto rb = specfun::riccati(ell, x);

  // W_R in d/dr of functions of kr equals k * W_x; combined with the 1/k of
  // the coefficient formulas the k factors cancel, leaving plain W_x.
  MatchingData m;
  m.ell = ell;
  m.eta = eta;
  m.k = k;
  m.R = R;
  m.a1 = -wronskian_x(fg.F, fg.dF, rb.n, rb.dn);
  m.b1 = wronskian_x(fg.F, fg.dF, rb.j, rb.dj);
  m.a2 = -wronskian_x(rb.h(), rb.dh(), fg.G, fg.dG);
  m.b2 = wronskian_x(rb.h(), rb.dh(), fg.F, fg.dF);

  const complex denom = m.b2;  // W_x(h+, F)
  if (std::abs(denom) < 1e-300) {
    throw SingularConfigError("match: vanishing Wronskian W(h+, F) at the screening radius");
  }
  m.chi = -wronskian_x(rb.h(), rb.dh(), fg.H(), fg.dH()) / denom;
  return m;
}

complex chi(int ell, double eta, double k, double R) { return match(ell, eta, k, R).chi; }

ChiAsymptote chi_asymptotic(int ell, double eta, double k, double R) {
  if (!(k > 0.0) || !(R > 0.0)) throw std::domain_error("chi_asymptotic: k, R must be positive");
  const double x = k * R;
  const double sigma = specfun::coulomb_phase(ell, eta);
  const double theta = x - eta * std::log(2.0 * x) - 0.5 * std::numbers::pi * ell + sigma;
  ChiAsymptote out;
  out.value = complex(0.0, eta) * std::exp(complex(0.0, 2.0 * theta)) / x;
  out.valid = x >= 10.0 * std::max(1.0, ell * (ell + 1.0) + eta * eta);
  return out;
}

complex screened_partial_green(int ell, double eta, double k, double R, double r, double rprime) {
  if (!(r > 0.0) || !(rprime > 0.0)) {
    throw std::domain_error("screened_partial_green: radii must be positive");
  }
  if (r >= R || rprime >= R) {
    throw std::domain_error("screened_partial_green: representation requires r, r' < R");
  }
  const auto m = match(ell, eta, k, R);
  const double lo = std::min(r, rprime), hi = std::max(r, rprime);
  const auto f_lo = specfun::coulomb_fg(ell, eta, k * lo);
  const auto f_hi = specfun::coulomb_fg(ell, eta, k * hi);
  return (f_lo.F * f_hi.H() + m.chi * f_lo.F * f_hi.F) / k;
}

QTermResult q_term(double eta, double k, double R, double r, double rprime, double cos_angle,
                   int ell_max) {
  if (r < 0.0 || rprime < 0.0) throw std::domain_error("q_term: radii must be nonnegative");
  if (r >= R || rprime >= R) throw std::domain_error("q_term: requires r, r' < R");
  if (std::abs(cos_angle) > 1.0) throw std::domain_error("q_term: |cos| must be <= 1");

  const double inv4pik = 1.0 / (4.0 * std::numbers::pi * k);

  // Legendre recurrence state: p_curr = P_ell, p_prev = P_{ell-1}
  double p_prev = 0.0, p_curr = 1.0;

  complex sum = 0.0;
  complex comp = 0.0;  // Kahan compensation
  double tail[3] = {1e300, 1e300, 1e300};
  int used = 0;
  bool converged = false;

  for (int ell = 0; ell <= ell_max; ++ell) {
    const double pl = p_curr;

    // F(k r)/r with the exact r -> 0 limit C_l k^{l+1} r^l -> only l = 0
    // survives at r = 0
    double fr, frp;
    if (r > 0.0) {
      fr = specfun::coulomb_fg(ell, eta, k * r).F / r;
    } else {
      fr = (ell == 0) ? specfun::coulomb_norm(0, eta) * k : 0.0;
    }
    if (rprime > 0.0) {
      frp = specfun::coulomb_fg(ell, eta, k * rprime).F / rprime;
    } else {
      frp = (ell == 0) ? specfun::coulomb_norm(0, eta) * k : 0.0;
    }

    complex term = 0.0;
    if (fr != 0.0 && frp != 0.0) {
      term = (2.0 * ell + 1.0) * chi(ell, eta, k, R) * fr * frp * pl * inv4pik;
    }

    // Kahan-compensated accumulation in fixed ascending ell order
    const complex y = term - comp;
    const complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    used = ell;

    tail[ell % 3] = std::abs(term);
    const double tail_max = std::max({tail[0], tail[1], tail[2]});
    if (ell >= 2 && tail_max <= 1e-12 * std::max(1.0, std::abs(sum))) {
      converged = true;
      break;
    }

    const double p_next = ((2.0 * ell + 1.0) * cos_angle * p_curr - ell * p_prev) / (ell + 1.0);
    p_prev = p_curr;
    p_curr = p_next;

    if (r == 0.0 || rprime == 0.0) {
      converged = true;  // single surviving term
      break;
    }
  }

  QTermResult out;
  out.value = sum;
  out.tail_estimate = std::max({tail[0], tail[1], tail[2]});
  out.converged = converged;
  out.ell_used = used;
  return out;
}

KernelNorm z_kernel_norm(double eta, double k, double R, int ell_max) {
  if (ell_max < 3) throw std::invalid_argument("z_kernel_norm: ell_max too small");
  KernelNorm out{0.0, 0, true};
  double prev2 = -1.0, prev1 = -1.0, last = -1.0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const double a = std::abs(chi(ell, eta, k, R));
    if (a > out.value) {
      out.value = a;
      out.argmax_ell = ell;
    }
    prev2 = prev1;
    prev1 = last;
    last = a;
  }
  // tail must be decreasing for the sweep to be conclusive
  out.conclusive = (prev2 > prev1) && (prev1 > last);
  return out;
}

}  // namespace singreen::screened
