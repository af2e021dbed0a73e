// SPDX-License-Identifier: Apache-2.0

#include "singreen/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singreen::potentials {

namespace {

constexpr double coulomb_band = 1e-12;

double compute_tail_bound(const PotentialSpec& spec) {
  if (spec.is_free()) return 0.0;
  // sup over a log grid in the tail region of |V(r)| (1+r)^{1+delta},
  // with a 5% safety margin.
  const double r_lo = 0.5;
  const double r_hi = std::max(4.0 * (spec.screening_radius() ? *spec.screening_radius() : 1.0), 50.0);
  double sup = 0.0;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double r = r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / n);
    const double v = evaluate(spec, r);
    sup = std::max(sup, std::abs(v) * std::pow(1.0 + r, 1.0 + spec.delta()));
  }
  return 1.05 * sup;
}

}  // namespace

PotentialSpec::PotentialSpec(Model model, double rho, double delta, double v0,
                             std::optional<double> screening_radius)
    : model_(model), rho_(rho), delta_(delta), v0_(v0), screening_radius_(screening_radius) {
  if (!(rho < 2.0)) throw std::invalid_argument("PotentialSpec: rho must be < 2");
  if (screening_radius_ && !(*screening_radius_ > 0.0)) {
    throw std::invalid_argument("PotentialSpec: screening radius must be positive");
  }
  // The unscreened Coulomb model sits outside the decaying-tail class; it is
  // kept as the analytic reference and skips the tail validation.
  const bool in_tail_class = (model != Model::Coulomb) && !(model == Model::Power && !screening_radius_);
  if (in_tail_class && !(delta > 1.0)) {
    throw std::invalid_argument("PotentialSpec: tail exponent delta must be > 1");
  }
  tail_bound_c_ = 0.0;
  tail_bound_c_ = compute_tail_bound(*this);
}

PotentialSpec PotentialSpec::coulomb(double v0) {
  return PotentialSpec(Model::Coulomb, 1.0, 0.0, v0, {});
}

PotentialSpec PotentialSpec::screened_coulomb(double v0, double screening_radius) {
  return PotentialSpec(Model::ScreenedCoulomb, 1.0, 2.0, v0, screening_radius);
}

PotentialSpec PotentialSpec::power(double rho, double v0, std::optional<double> screening_radius,
                                   double delta) {
  return PotentialSpec(Model::Power, rho, delta, v0, screening_radius);
}

PotentialSpec PotentialSpec::power_exp(double rho, double v0, double delta) {
  return PotentialSpec(Model::PowerExp, rho, delta, v0, {});
}

PotentialSpec PotentialSpec::power_law(double rho, double v0, double delta) {
  return PotentialSpec(Model::PowerLaw, rho, delta, v0, {});
}

PotentialSpec PotentialSpec::free_space() {
  return PotentialSpec(Model::Power, 0.0, 2.0, 0.0, {});
}

double PotentialSpec::smooth_factor(double r) const {
  switch (model_) {
    case Model::Coulomb:
    case Model::ScreenedCoulomb:
    case Model::Power:
      return v0_;
    case Model::PowerExp:
      return v0_ * std::exp(-r);
    case Model::PowerLaw:
      return v0_ * std::pow(1.0 + r, rho_ - 1.0 - delta_);
  }
  return 0.0;
}

double PotentialSpec::taylor(int j) const {
  switch (model_) {
    case Model::Coulomb:
    case Model::ScreenedCoulomb:
    case Model::Power:
      return j == 0 ? v0_ : 0.0;
    case Model::PowerExp: {
      double c = v0_;
      for (int m = 1; m <= j; ++m) c *= -1.0 / m;
      return c;
    }
    case Model::PowerLaw: {
      // binomial series of (1+r)^p, p = rho - 1 - delta
      const double p = rho_ - 1.0 - delta_;
      double c = v0_;
      for (int m = 1; m <= j; ++m) c *= (p - m + 1.0) / m;
      return c;
    }
  }
  return 0.0;
}

double PotentialSpec::effective_range(double eps) const {
  if (is_free()) return 1.0;
  if (screening_radius_) return *screening_radius_;
  if (model_ == Model::PowerExp) {
    // |V| = |V0| e^{-r} r^{-rho} < eps
    double r = std::max(1.0, std::log(std::abs(v0_) / eps));
    for (int it = 0; it < 50; ++it) {
      const double v = std::abs(evaluate(*this, r));
      if (v < eps) break;
      r += std::log(v / eps) + 0.5;
    }
    return r;
  }
  if (model_ == Model::PowerLaw) {
    // |V| ~ |V0| r^{-1-delta} for large r
    return std::pow(std::abs(v0_) / eps, 1.0 / (1.0 + delta_));
  }
  // pure power tail
  return std::pow(std::abs(v0_) / eps, 1.0 / std::max(rho_, 0.1));
}

double evaluate(const PotentialSpec& spec, double r) {
  if (!(r > 0.0)) throw std::domain_error("potential evaluate: r must be positive");
  if (spec.is_free()) return 0.0;
  if (spec.screening_radius() && r > *spec.screening_radius()) return 0.0;
  return std::pow(r, -spec.rho()) * spec.smooth_factor(r);
}

double sommerfeld_eta(const PotentialSpec& spec, double k) {
  if (!(k > 0.0)) throw std::domain_error("sommerfeld_eta: k must be positive");
  if (!spec.is_free() && classify(spec) != SingularityClass::Coulomb) {
    throw std::domain_error("sommerfeld_eta: spec does not have a Coulomb-type (rho = 1) core");
  }
  return spec.v0() / (2.0 * k);
}

SingularityClass classify_rho(double rho) {
  if (!(rho < 2.0)) throw std::invalid_argument("classify: rho >= 2 is unsupported");
  if (std::abs(rho - 1.0) < coulomb_band) return SingularityClass::Coulomb;
  return rho < 1.0 ? SingularityClass::SubCoulomb : SingularityClass::SuperCoulomb;
}

SingularityClass classify(const PotentialSpec& spec) { return classify_rho(spec.rho()); }

const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::SubCoulomb: return "sub_coulomb";
    case SingularityClass::Coulomb: return "coulomb";
    case SingularityClass::SuperCoulomb: return "super_coulomb";
  }
  return "?";
}

const char* to_string(Model m) {
  switch (m) {
    case Model::Coulomb: return "coulomb";
    case Model::ScreenedCoulomb: return "screened_coulomb";
    case Model::Power: return "power";
    case Model::PowerExp: return "power_exp";
    case Model::PowerLaw: return "power_law";
  }
  return "?";
}

PotentialSpec load_spec(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  const auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = kv.find(key);
    if (it == kv.end()) return {};
    return it->second;
  };
  const auto get_num = [&](const std::string& key) -> std::optional<double> {
    const auto s = get(key);
    if (!s) return {};
    return std::stod(*s);
  };

  const std::string model = get("model").value_or("power_exp");
  const double v0 = get_num("v0").value_or(1.0);
  const double delta = get_num("delta").value_or(2.0);
  if (model == "coulomb") return PotentialSpec::coulomb(v0);
  if (model == "screened_coulomb") {
    const auto R = get_num("screening_radius");
    if (!R) throw std::invalid_argument("config: screened_coulomb requires screening_radius");
    return PotentialSpec::screened_coulomb(v0, *R);
  }
  if (model == "power") {
    const double rho = get_num("rho").value_or(1.0);
    std::optional<double> R = get_num("screening_radius");
    return PotentialSpec::power(rho, v0, R, delta);
  }
  if (model == "power_exp") {
    const double rho = get_num("rho").value_or(1.0);
    return PotentialSpec::power_exp(rho, v0, delta);
  }
  if (model == "power_law") {
    const double rho = get_num("rho").value_or(1.0);
    return PotentialSpec::power_law(rho, v0, delta);
  }
  throw std::invalid_argument("config: unknown potential model '" + model + "'");
}

PotentialSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open potential config: " + path);
  return load_spec(in);
}

}  // namespace singreen::potentials
