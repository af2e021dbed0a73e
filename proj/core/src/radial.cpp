// SPDX-License-Identifier: Apache-2.0

#include "singreen/radial.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "singreen/errors.hpp"
#include "singreen/specfun.hpp"
#include "singreen/table_io.hpp"

namespace singreen::radial {

namespace {

namespace odeint = boost::numeric::odeint;

double effective_q(const potentials::PotentialSpec& spec, int ell, double k, double r) {
  const double centrifugal = ell > 0 ? ell * (ell + 1.0) / (r * r) : 0.0;
  const double v = spec.is_free() ? 0.0 : potentials::evaluate(spec, r);
  return centrifugal + v - k * k;
}

// Quintic Hermite interpolation on one interval using (f, f', f'') at both
// ends; f'' comes from the ODE, so no extra storage is needed.
template <typename T>
T hermite5(double r, double ra, double rb, T fa, T dfa, T d2fa, T fb, T dfb, T d2fb) {
  const double h = rb - ra;
  const double s = (r - ra) / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  const double h00 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
  const double h10 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
  const double h20 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
  const double h01 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
  const double h11 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
  const double h21 = 0.5 * s3 - s4 + 0.5 * s5;
  return h00 * fa + (h10 * h) * dfa + (h20 * h * h) * d2fa + h01 * fb + (h11 * h) * dfb +
         (h21 * h * h) * d2fb;
}

template <typename T>
T hermite5_deriv(double r, double ra, double rb, T fa, T dfa, T d2fa, T fb, T dfb, T d2fb) {
  const double h = rb - ra;
  const double s = (r - ra) / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double d00 = (-30.0 * s2 + 60.0 * s3 - 30.0 * s4) / h;
  const double d10 = 1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4;
  const double d20 = (s - 4.5 * s2 + 6.0 * s3 - 2.5 * s4) * h;
  const double d01 = (30.0 * s2 - 60.0 * s3 + 30.0 * s4) / h;
  const double d11 = -12.0 * s2 + 28.0 * s3 - 15.0 * s4;
  const double d21 = (1.5 * s2 - 4.0 * s3 + 2.5 * s4) * h;
  return d00 * fa + d10 * dfa + d20 * d2fa + d01 * fb + d11 * dfb + d21 * d2fb;
}

template <typename T>
T hermite5_second(double r, double ra, double rb, T fa, T dfa, T d2fa, T fb, T dfb, T d2fb) {
  const double h = rb - ra;
  const double s = (r - ra) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double s00 = (-60.0 * s + 180.0 * s2 - 120.0 * s3) / (h * h);
  const double s10 = (-36.0 * s + 96.0 * s2 - 60.0 * s3) / h;
  const double s20 = 1.0 - 9.0 * s + 18.0 * s2 - 10.0 * s3;
  const double s01 = (60.0 * s - 180.0 * s2 + 120.0 * s3) / (h * h);
  const double s11 = (-24.0 * s + 84.0 * s2 - 60.0 * s3) / h;
  const double s21 = 3.0 * s - 12.0 * s2 + 10.0 * s3;
  return s00 * fa + s10 * dfa + s20 * d2fa + s01 * fb + s11 * dfb + s21 * d2fb;
}

std::size_t locate_interval(const std::vector<double>& grid, double r, const char* who) {
  if (grid.empty() || r < grid.front() * (1.0 - 1e-12) || r > grid.back() * (1.0 + 1e-12)) {
    throw std::domain_error(std::string(who) + ": r outside covered grid range");
  }
  auto it = std::upper_bound(grid.begin(), grid.end(), r);
  std::size_t i = static_cast<std::size_t>(it - grid.begin());
  if (i == 0) i = 1;
  if (i >= grid.size()) i = grid.size() - 1;
  return i - 1;
}

struct RealRhs {
  potentials::PotentialSpec spec;
  int ell;
  double k;
  void operator()(const std::array<double, 2>& y, std::array<double, 2>& dy, double r) const {
    dy[0] = y[1];
    dy[1] = effective_q(spec, ell, k, r) * y[0];
  }
};

struct ComplexRhs {
  potentials::PotentialSpec spec;
  int ell;
  double k;
  // (Re v, Im v, Re v', Im v')
  void operator()(const std::array<double, 4>& y, std::array<double, 4>& dy, double r) const {
    const double q = effective_q(spec, ell, k, r);
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = q * y[0];
    dy[3] = q * y[1];
  }
};

// Integrate along `path` (which may run inward or outward), recording the
// state at every path node.
template <typename State, typename Rhs>
std::vector<State> integrate_along(const Rhs& rhs, State y, const std::vector<double>& path,
                                   const SolveOptions& opt) {
  using stepper_t = odeint::runge_kutta_fehlberg78<State>;
  auto controlled = odeint::make_controlled<stepper_t>(opt.abs_tol, opt.rel_tol);

  std::vector<State> out;
  out.reserve(path.size());
  out.push_back(y);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double a = path[i - 1], b = path[i];
    const double dt = (b - a) / 16.0;
    try {
      odeint::integrate_adaptive(controlled, rhs, y, a, b, dt);
    } catch (const std::exception& e) {
      throw IntegrationError(std::string("radial integration failed: ") + e.what(), b);
    }
    for (double c : y) {
      if (!std::isfinite(c)) throw IntegrationError("radial integration overflowed", b);
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace

FrobeniusStart frobenius_start(const potentials::PotentialSpec& spec, int ell, double k,
                               double r_start, int n_terms) {
  if (!(r_start > 0.0)) throw std::domain_error("frobenius_start: r_start must be positive");
  const double rho = spec.is_free() ? 0.0 : spec.rho();
  const double step = 2.0 - rho;

  // coefficients a(m, n) on the exponent lattice mu = m + n*step; the n axis
  // carries the powers generated by the singular core, the m axis the
  // analytic ones
  const int M = std::min(n_terms, 60), N = std::min(n_terms, 60);
  const double mu_cap = 18.0;
  std::vector<std::vector<double>> a(M + 1, std::vector<double>(N + 1, 0.0));
  a[0][0] = 1.0;

  std::vector<double> wj(M + 1, 0.0);
  if (!spec.is_free()) {
    for (int j = 0; j <= M; ++j) wj[j] = spec.taylor(j);
  }

  const double k2 = k * k;
  for (int m = 0; m <= M; ++m) {
    for (int n = 0; n <= N; ++n) {
      if (m == 0 && n == 0) continue;
      const double mu = m + n * step;
      if (mu > mu_cap) continue;
      double rhs = 0.0;
      if (n >= 1) {
        for (int j = 0; j <= m; ++j) rhs += wj[j] * a[m - j][n - 1];
      }
      if (m >= 2) rhs -= k2 * a[m - 2][n];
      a[m][n] = rhs / (mu * (2.0 * ell + 1.0 + mu));
    }
  }

  double sum = 0.0, dsum = 0.0, tail = 0.0, largest = 0.0;
  int used = 0;
  for (int m = 0; m <= M; ++m) {
    for (int n = 0; n <= N; ++n) {
      const double c = a[m][n];
      const double mu = m + n * step;
      if (mu > mu_cap) continue;
      if (c == 0.0 && !(m == 0 && n == 0)) continue;
      const double term = c * std::pow(r_start, mu);
      sum += term;
      dsum += (ell + 1.0 + mu) * term;
      largest = std::max(largest, std::abs(term));
      if (mu > mu_cap - 2.0 * step - 2.0) tail = std::max(tail, std::abs(term));
      ++used;
    }
  }
  if (!(tail <= 1e-8 * std::max(largest, std::abs(sum)))) {
    throw AccuracyError("frobenius_start: lattice terms do not decay; reduce r_start");
  }

  const double rl = std::pow(r_start, ell + 1.0);
  FrobeniusStart out;
  out.value = rl * sum;
  out.derivative = rl / r_start * dsum;
  out.r_start = r_start;
  out.truncation_error = tail * rl;
  out.terms_used = used;
  return out;
}

std::vector<double> make_grid(double r_min, double r_max, double k, int points_per_decade,
                              double phase_step) {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw std::invalid_argument("make_grid: bad range");
  std::vector<double> g;
  const double inner_hi = std::min(1.0, r_max);
  const int decade_pts =
      std::max(2, static_cast<int>(std::ceil(std::log10(inner_hi / r_min) * points_per_decade)));
  for (int i = 0; i <= decade_pts; ++i) {
    g.push_back(r_min * std::pow(inner_hi / r_min, static_cast<double>(i) / decade_pts));
  }
  if (r_max > inner_hi) {
    const double dr = std::max(phase_step / std::max(k, 0.5), 1e-3);
    double r = g.back();
    while (r + 1.25 * dr < r_max) {
      r += dr;
      g.push_back(r);
    }
    g.push_back(r_max);  // never leave a sliver interval at the end
  }
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

RegularSolution solve_regular(const potentials::PotentialSpec& spec, int ell, double k,
                              const std::vector<double>& grid, const SolveOptions& opt) {
  if (grid.size() < 2) throw std::invalid_argument("solve_regular: grid too small");
  const auto start = frobenius_start(spec, ell, k, grid.front(), opt.frobenius_terms);

  const auto states = integrate_along(RealRhs{spec, ell, k},
                                      std::array<double, 2>{start.value, start.derivative}, grid, opt);

  RegularSolution u;
  u.spec_ = spec;
  u.ell_ = ell;
  u.k_ = k;
  u.r_ = grid;
  u.u_.resize(grid.size());
  u.du_.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    u.u_[i] = states[i][0];
    u.du_[i] = states[i][1];
  }
  return u;
}

OutgoingSolution solve_outgoing(const potentials::PotentialSpec& spec, int ell, double k,
                                const std::vector<double>& grid, const SolveOptions& opt) {
  if (grid.size() < 2) throw std::invalid_argument("solve_outgoing: grid too small");
  const double r_max = grid.back();
  if (!spec.is_free() && std::abs(potentials::evaluate(spec, r_max)) >= opt.tail_epsilon) {
    throw std::domain_error("solve_outgoing: potential tail not negligible at r_max");
  }

  // free outgoing start: v = h+(k r_max), dv/dr = k h+'(k r_max)
  const auto rt = specfun::riccati(ell, k * r_max);
  std::array<double, 4> y0{rt.h().real(), rt.h().imag(), k * rt.dh().real(), k * rt.dh().imag()};

  std::vector<double> inward(grid.rbegin(), grid.rend());
  const auto states = integrate_along(ComplexRhs{spec, ell, k}, y0, inward, opt);

  OutgoingSolution v;
  v.spec_ = spec;
  v.ell_ = ell;
  v.k_ = k;
  v.norm_ = 1.0;
  v.r_ = grid;
  v.v_.resize(grid.size());
  v.dv_.resize(grid.size());
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = states[n - 1 - i];
    v.v_[i] = {s[0], s[1]};
    v.dv_[i] = {s[2], s[3]};
  }
  return v;
}

RadialSolutionPair make_solution_pair(RegularSolution u, OutgoingSolution v) {
  RadialSolutionPair pair{std::move(u), std::move(v), 0.0, 0, 0.0};
  pair.ell = pair.u.ell();
  pair.k = pair.u.k();
  const double lo = std::max(pair.u.grid().front(), pair.v.grid().front());
  const double hi = std::min(pair.u.grid().back(), pair.v.grid().back());
  if (!(hi > lo)) throw std::invalid_argument("make_solution_pair: grids do not overlap");
  // reference Wronskian taken at a stored node of the u grid, where both
  // interpolants reproduce the integrator states exactly
  const double mid = std::sqrt(lo * hi);
  const auto& g = pair.u.grid();
  auto it = std::lower_bound(g.begin(), g.end(), mid);
  double node = it == g.end() ? g.back() : *it;
  if (node < lo || node > hi) node = mid;
  pair.wronskian = pair.wronskian_at(node);
  return pair;
}

RadialSolutionPair solve_pair(const potentials::PotentialSpec& spec, int ell, double k,
                              const std::vector<double>& grid, const SolveOptions& opt) {
  return make_solution_pair(solve_regular(spec, ell, k, grid, opt),
                            solve_outgoing(spec, ell, k, grid, opt));
}

complex RadialSolutionPair::wronskian_at(double r) const {
  return u.value(r) * v.derivative(r) - u.derivative(r) * v.value(r);
}

double RegularSolution::value(double r) const {
  const auto i = locate_interval(r_, r, "RegularSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5(r, r_[i], r_[i + 1], u_[i], du_[i], qa * u_[i], u_[i + 1], du_[i + 1],
                  qb * u_[i + 1]);
}

double RegularSolution::derivative(double r) const {
  const auto i = locate_interval(r_, r, "RegularSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5_deriv(r, r_[i], r_[i + 1], u_[i], du_[i], qa * u_[i], u_[i + 1], du_[i + 1],
                        qb * u_[i + 1]);
}

complex OutgoingSolution::value(double r) const {
  const auto i = locate_interval(r_, r, "OutgoingSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5(r, r_[i], r_[i + 1], v_[i], dv_[i], qa * v_[i], v_[i + 1], dv_[i + 1],
                  qb * v_[i + 1]);
}

complex OutgoingSolution::derivative(double r) const {
  const auto i = locate_interval(r_, r, "OutgoingSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5_deriv(r, r_[i], r_[i + 1], v_[i], dv_[i], qa * v_[i], v_[i + 1], dv_[i + 1],
                        qb * v_[i + 1]);
}

OutgoingSolution OutgoingSolution::scaled(complex factor) const {
  OutgoingSolution out = *this;
  out.norm_ *= factor;
  for (auto& c : out.v_) c *= factor;
  for (auto& c : out.dv_) c *= factor;
  return out;
}

complex partial_green(const RadialSolutionPair& pair, double r, double rprime) {
  const double lo = std::min(r, rprime), hi = std::max(r, rprime);
  return -pair.u.value(lo) * pair.v.value(hi) / pair.wronskian;
}

double RegularSolution::second_derivative(double r) const {
  const auto i = locate_interval(r_, r, "RegularSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5_second(r, r_[i], r_[i + 1], u_[i], du_[i], qa * u_[i], u_[i + 1], du_[i + 1],
                         qb * u_[i + 1]);
}

complex OutgoingSolution::second_derivative(double r) const {
  const auto i = locate_interval(r_, r, "OutgoingSolution");
  const double qa = effective_q(spec_, ell_, k_, r_[i]);
  const double qb = effective_q(spec_, ell_, k_, r_[i + 1]);
  return hermite5_second(r, r_[i], r_[i + 1], v_[i], dv_[i], qa * v_[i], v_[i + 1], dv_[i + 1],
                         qb * v_[i + 1]);
}

namespace {

// |H'' - q H| between nodes, scaled by the local amplitude and q magnitude.
template <typename Sol, typename Value>
double residual_impl(const potentials::PotentialSpec& spec, const Sol& f, int ell, double k) {
  const auto& g = f.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double amp = std::max({std::abs(f.value(g[i])), std::abs(f.value(g[i + 1])), 1e-30});
    for (double s : {0.31, 0.5, 0.77}) {
      const double r = g[i] + s * (g[i + 1] - g[i]);
      const Value f0 = f.value(r);
      const Value second = f.second_derivative(r);
      const double q = effective_q(spec, ell, k, r);
      const double scale = (std::abs(q) + k * k) * std::max(std::abs(f0), amp);
      worst = std::max(worst, std::abs(second - q * f0) / scale);
    }
  }
  return worst;
}

}  // namespace

double ode_residual(const potentials::PotentialSpec& spec, const RegularSolution& u) {
  return residual_impl<RegularSolution, double>(spec, u, u.ell(), u.k());
}

double ode_residual(const potentials::PotentialSpec& spec, const OutgoingSolution& v) {
  return residual_impl<OutgoingSolution, complex>(spec, v, v.ell(), v.k());
}

std::string debug_csv(const RadialSolutionPair& pair) {
  table_io::CsvWriter csv({{"ell", std::to_string(pair.ell)},
                           {"k", table_io::format_double(pair.k)}},
                          {"r", "u", "du", "re_v", "im_v", "re_dv", "im_dv"});
  const double v_lo = pair.v.grid().front(), v_hi = pair.v.grid().back();
  for (double r : pair.u.grid()) {
    if (r < v_lo || r > v_hi) continue;
    const complex v = pair.v.value(r);
    const complex dv = pair.v.derivative(r);
    csv.row({r, pair.u.value(r), pair.u.derivative(r), v.real(), v.imag(), dv.real(), dv.imag()});
  }
  return csv.str();
}

}  // namespace singreen::radial
