// SPDX-License-Identifier: Apache-2.0

#include "singreen/asymptotics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "singreen/specfun.hpp"

namespace singreen::asymptotics {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

double eval_term(const BasisTerm& t, double r) {
  double v = std::pow(r, t.exponent);
  for (int p = 0; p < t.log_power; ++p) v *= std::log(r);
  return v;
}

}  // namespace

complex coulomb_C(double k, double v0) {
  if (!(k > 0.0)) throw std::domain_error("coulomb_C: k must be positive");
  const double eta = v0 / (2.0 * k);
  const complex log_m2ik(std::log(2.0 * k), -0.5 * std::numbers::pi);
  const complex psi = specfun::digamma(complex(1.0, eta));
  return complex(0.0, k / four_pi) +
         v0 / four_pi * (log_m2ik + psi + 2.0 * std::numbers::egamma - 1.0);
}

double a0(double v0, double rho) {
  if (!(rho > 1.0) || !(rho < 2.0)) throw std::domain_error("a0: rho must be in (1, 2)");
  return v0 / ((2.0 - rho) * (1.0 - rho));
}

std::vector<BasisTerm> default_corrections(potentials::SingularityClass cls, double rho) {
  using potentials::SingularityClass;
  std::vector<BasisTerm> out;
  switch (cls) {
    case SingularityClass::SubCoulomb:
      // next orders r^{2-rho} (smooth core correction) and r
      out.push_back({2.0 - rho, 0});
      out.push_back({1.0, 0});
      break;
    case SingularityClass::Coulomb:
      // remainder O(r log r) + O(r)
      out.push_back({1.0, 1});
      out.push_back({1.0, 0});
      break;
    case SingularityClass::SuperCoulomb: {
      // iteration ladder r^{n(2-rho)-1} while singular or slowly vanishing,
      // with a log at a marginal rung, plus the smooth correction r^{2-rho}
      for (int n = 2; n <= 6; ++n) {
        const double e = n * (2.0 - rho) - 1.0;
        if (e > 0.55) break;
        if (std::abs(e) < 1e-9) {
          out.push_back({0.0, 1});  // log r
        } else {
          out.push_back({e, 0});
        }
      }
      out.push_back({2.0 - rho, 0});
      break;
    }
  }
  // drop duplicate exponents (the ladder can land on the smooth correction)
  std::vector<BasisTerm> unique;
  for (const auto& t : out) {
    bool seen = false;
    for (const auto& u : unique) {
      seen = seen || (std::abs(u.exponent - t.exponent) < 1e-9 && u.log_power == t.log_power);
    }
    if (!seen) unique.push_back(t);
  }
  return unique;
}

std::vector<double> fit_window(double r_min, double r_max, int n) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n < 2) {
    throw std::invalid_argument("fit_window: bad range");
  }
  std::vector<double> rs(n);
  for (int i = 0; i < n; ++i) {
    rs[i] = r_min * std::pow(r_max / r_min, static_cast<double>(i) / (n - 1));
  }
  return rs;
}

AsymptoteFit fit_short_range(std::span<const std::pair<double, complex>> samples,
                             potentials::SingularityClass cls, double rho,
                             const FitOptions& options) {
  using potentials::SingularityClass;
  if (samples.size() < 8) {
    throw std::invalid_argument("fit_short_range: need at least 8 samples");
  }
  double r_min = samples[0].first, r_max = samples[0].first;
  for (const auto& [r, g] : samples) {
    if (!(r > 0.0)) throw std::domain_error("fit_short_range: radii must be positive");
    r_min = std::min(r_min, r);
    r_max = std::max(r_max, r);
  }
  if (r_max < 10.0 * r_min) {
    throw std::invalid_argument("fit_short_range: window must span at least one decade");
  }
  if (cls == SingularityClass::SuperCoulomb && rho - 1.0 < 0.05 && !options.allow_near_coulomb) {
    throw std::invalid_argument(
        "fit_short_range: rho too close to 1 for the super-Coulomb basis (r^{1-rho} is "
        "collinear with log r); pass an explicit class override");
  }

  // basis: {1/r, f, 1} + corrections; sub-Coulomb drops f
  std::vector<BasisTerm> basis;
  basis.push_back({-1.0, 0});
  const bool has_extra = cls != SingularityClass::SubCoulomb;
  if (cls == SingularityClass::Coulomb) basis.push_back({0.0, 1});
  if (cls == SingularityClass::SuperCoulomb) basis.push_back({1.0 - rho, 0});
  basis.push_back({0.0, 0});
  for (const auto& t : options.corrections) basis.push_back(t);

  const int n = static_cast<int>(samples.size());
  const int m = static_cast<int>(basis.size());
  if (n < m + 2) throw std::invalid_argument("fit_short_range: too few samples for the basis");

  Eigen::MatrixXd A(n, m);
  Eigen::VectorXd br(n), bi(n);
  for (int i = 0; i < n; ++i) {
    const double r = samples[i].first;
    const double w = std::pow(r / r_max, options.weight_exponent);
    for (int j = 0; j < m; ++j) A(i, j) = w * eval_term(basis[j], r);
    br(i) = w * samples[i].second.real();
    bi(i) = w * samples[i].second.imag();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(sv(sv.size() - 1) > 0.0) || cond > 1e14) {
    throw std::invalid_argument("fit_short_range: rank-deficient design matrix");
  }
  const Eigen::VectorXd cr = svd.solve(br);
  const Eigen::VectorXd ci = svd.solve(bi);

  const Eigen::VectorXd resr = A * cr - br;
  const Eigen::VectorXd resi = A * ci - bi;
  const double rms = std::sqrt((resr.squaredNorm() + resi.squaredNorm()) / (2.0 * n));

  // formal parameter sigmas from the weighted residual and (A^T A)^{-1}
  Eigen::VectorXd param_sigma(m);
  {
    const double sigma_hat =
        std::sqrt((resr.squaredNorm() + resi.squaredNorm()) / std::max(1, 2 * n - 2 * m));
    const Eigen::MatrixXd V = svd.matrixV();
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int l = 0; l < sv.size(); ++l) s += V(j, l) * V(j, l) / (sv(l) * sv(l));
      param_sigma(j) = std::sqrt(s) * sigma_hat;
    }
  }

  AsymptoteFit fit;
  fit.pole_coeff = cr(0);
  fit.pole_sigma = param_sigma(0);
  int idx = 1;
  if (has_extra) {
    fit.extra_coeff = cr(idx);
    fit.extra_sigma = param_sigma(idx);
    ++idx;
  }
  fit.const_term = complex(cr(idx), ci(idx));
  ++idx;
  for (int j = idx; j < m; ++j) fit.correction_coeffs.push_back(cr(j));

  fit.residual_rms = rms;
  fit.condition_number = cond;
  fit.r_min = r_min;
  fit.r_max = r_max;
  fit.cls = cls;
  fit.ill_conditioned = cond > 1e8;
  const double scale = std::abs(fit.pole_coeff) + std::abs(fit.const_term) + 1e-30;
  fit.accepted = !fit.ill_conditioned && rms < options.residual_threshold * scale;
  return fit;
}

}  // namespace singreen::asymptotics
