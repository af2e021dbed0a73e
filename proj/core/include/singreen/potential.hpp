// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_POTENTIAL_HPP
#define SINGREEN_POTENTIAL_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace singreen::potentials {

/// Behavior of the potential core r^{-rho} W(r) at the origin.
enum class SingularityClass { SubCoulomb, Coulomb, SuperCoulomb };

/// Built-in radial profiles for the smooth factor W(r).
enum class Model {
  Coulomb,          ///< W = V0, rho = 1, no cutoff (analytic reference potential)
  ScreenedCoulomb,  ///< W = V0, rho = 1, sharp cutoff at the screening radius
  Power,            ///< W = V0, free rho, optional sharp cutoff
  PowerExp,         ///< W = V0 exp(-r), free rho
  PowerLaw,         ///< W = V0 (1+r)^{rho-1-delta}, free rho; algebraic tail
};

/// A central potential V(r) = r^{-rho} W(r) theta(R - r), with the origin
/// exponent rho < 2 and a tail bounded by C (1+r)^{-1-delta}, delta > 1.
///
/// Specs are immutable after construction and cheap to copy; evaluation is
/// pure, so instances can be shared freely across threads.
class PotentialSpec {
 public:
  static PotentialSpec coulomb(double v0);
  static PotentialSpec screened_coulomb(double v0, double screening_radius);
  static PotentialSpec power(double rho, double v0, std::optional<double> screening_radius = {},
                             double delta = 2.0);
  static PotentialSpec power_exp(double rho, double v0, double delta = 2.0);
  static PotentialSpec power_law(double rho, double v0, double delta = 2.0);
  /// V identically zero.
  static PotentialSpec free_space();

  double rho() const { return rho_; }
  double delta() const { return delta_; }
  double v0() const { return v0_; }
  Model model() const { return model_; }
  std::optional<double> screening_radius() const { return screening_radius_; }
  double tail_bound_c() const { return tail_bound_c_; }
  bool is_free() const { return v0_ == 0.0; }

  /// The smooth factor W(r); W(r) -> v0 as r -> 0.
  double smooth_factor(double r) const;

  /// j-th Taylor coefficient of W at r = 0 (exact for the built-in models).
  double taylor(int j) const;

  /// Radius beyond which |V| < eps, used to place outer integration limits.
  double effective_range(double eps) const;

 private:
  PotentialSpec(Model model, double rho, double delta, double v0,
                std::optional<double> screening_radius);

  Model model_;
  double rho_;
  double delta_;
  double v0_;
  std::optional<double> screening_radius_;
  double tail_bound_c_;
};

/// V(r) at r > 0.  Throws std::domain_error for r <= 0.
double evaluate(const PotentialSpec& spec, double r);

/// Sommerfeld parameter eta = V0 / (2k) for a Coulomb-type (rho = 1) core.
/// Throws std::domain_error for k <= 0 or a non-Coulomb core.
double sommerfeld_eta(const PotentialSpec& spec, double k);

/// Classify by the origin exponent; |rho - 1| < 1e-12 counts as Coulomb.
/// Throws std::invalid_argument for rho >= 2.
SingularityClass classify_rho(double rho);
SingularityClass classify(const PotentialSpec& spec);

const char* to_string(SingularityClass c);
const char* to_string(Model m);

/// Plain-text config loader.  Lines are key=value with '#' comments; keys:
/// model (coulomb|screened_coulomb|power|power_exp), rho, delta, v0,
/// screening_radius.
PotentialSpec load_spec(std::istream& in);
PotentialSpec load_spec_file(const std::string& path);

}  // namespace singreen::potentials

#endif
