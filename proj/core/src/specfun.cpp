// SPDX-License-Identifier: Apache-2.0

#include "singreen/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_coulomb.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "singreen/errors.hpp"

namespace singreen::specfun {

namespace {

// GSL reports through return codes; the default abort-on-error handler is
// disabled once, process-wide.
const int gsl_handler_disabled = [] {
  gsl_set_error_handler_off();
  return 0;
}();

std::string point_tag(int ell, double eta, double x) {
  return "ell=" + std::to_string(ell) + " eta=" + std::to_string(eta) + " x=" + std::to_string(x);
}

}  // namespace

CoulombPair coulomb_fg(int ell, double eta, double x) {
  if (ell < 0) throw std::domain_error("coulomb_fg: ell must be nonnegative");
  if (!(x > 0.0)) throw std::domain_error("coulomb_fg: x must be positive");
  if (!std::isfinite(eta)) throw std::domain_error("coulomb_fg: eta must be finite");

  gsl_sf_result F, Fp, G, Gp;
  double exp_F = 0.0, exp_G = 0.0;
  const int status =
      gsl_sf_coulomb_wave_FG_e(eta, x, static_cast<double>(ell), 0, &F, &Fp, &G, &Gp, &exp_F, &exp_G);

  if (status != GSL_SUCCESS && status != GSL_EOVRFLW) {
    throw AccuracyError(std::string("coulomb_fg: evaluation failed (") + gsl_strerror(status) +
                        ") at " + point_tag(ell, eta, x));
  }

  // Scaled representation: true values are F*exp(exp_F), G*exp(exp_G).
  // Unscale, refusing to hand back infinities.
  const double sF = std::exp(exp_F);
  const double sG = std::exp(exp_G);
  CoulombPair out{F.val * sF, Fp.val * sF, G.val * sG, Gp.val * sG, ell, eta, x};
  if (!std::isfinite(out.G) || !std::isfinite(out.dG)) {
    throw AccuracyError("coulomb_fg: irregular solution overflows double range at " +
                        point_tag(ell, eta, x));
  }
  return out;
}

RiccatiTriple riccati(int ell, double x) {
  if (ell < 0) throw std::domain_error("riccati: ell must be nonnegative");
  if (!(x > 0.0)) throw std::domain_error("riccati: x must be positive");

  const double s = std::sin(x);
  const double c = std::cos(x);

  if (ell == 0) {
    return {s, c, c, -s, 0, x};
  }

  // Riccati-Neumann grows with ell: upward recurrence is stable.
  //   f_{l+1} = (2l+1)/x f_l - f_{l-1},  f'_l = f_{l-1} - (l/x) f_l.
  double nm1 = c;           // n_0
  double nn = c / x + s;    // n_1
  for (int l = 1; l < ell; ++l) {
    const double next = (2 * l + 1) / x * nn - nm1;
    nm1 = nn;
    nn = next;
    if (!std::isfinite(nn)) {
      throw AccuracyError("riccati: Riccati-Neumann overflow at ell=" + std::to_string(l + 1) +
                          " x=" + std::to_string(x));
    }
  }
  const double dn = nm1 - ell / x * nn;

  // Riccati-Bessel decays with ell below the turning point: downward
  // recurrence with normalization against j_0 = sin x.  Above the turning
  // point upward recurrence is stable and cheaper.
  double jj, jm1;
  if (x > ell + 10.0) {
    double a = s, b = s / x - c;  // j_0, j_1
    for (int l = 1; l < ell; ++l) {
      const double next = (2 * l + 1) / x * b - a;
      a = b;
      b = next;
    }
    jj = (ell == 0) ? a : b;
    jm1 = a;
  } else {
    const int start = ell + 16 + static_cast<int>(x);
    double up1 = 0.0;      // j_{start+1} seed
    double u = 1e-280;     // j_{start} seed (arbitrary scale)
    double raw_ell = 0.0, raw_ellm1 = 0.0;
    for (int l = start; l >= 1; --l) {
      const double um1 = (2 * l + 1) / x * u - up1;  // j_{l-1}
      if (l - 1 == ell) raw_ell = um1;
      if (l - 1 == ell - 1) raw_ellm1 = um1;
      up1 = u;
      u = um1;
      if (std::abs(u) > 1e280) {
        // rescale to avoid overflow of the unnormalized recurrence
        const double inv = 1.0 / std::abs(u);
        u *= inv;
        up1 *= inv;
        raw_ell *= inv;
        raw_ellm1 *= inv;
      }
    }
    // u now holds the unnormalized j_0
    const double scale = s / u;
    jj = raw_ell * scale;
    jm1 = raw_ellm1 * scale;
  }
  const double dj = jm1 - ell / x * jj;

  return {jj, dj, nn, dn, ell, x};
}

double coulomb_norm(int ell, double eta) {
  if (ell < 0) throw std::domain_error("coulomb_norm: ell must be nonnegative");
  if (eta == 0.0) {
    // C_l(0) = 2^l l!/(2l+1)! = 1/(2l+1)!!
    double v = 1.0;
    for (int s = 1; s <= ell; ++s) v /= 2.0 * s + 1.0;
    return v;
  }
  gsl_sf_result lnr, arg;
  const int status = gsl_sf_lngamma_complex_e(ell + 1.0, eta, &lnr, &arg);
  if (status != GSL_SUCCESS) {
    throw AccuracyError("coulomb_norm: log-gamma evaluation failed");
  }
  const double ln_c = ell * std::numbers::ln2 - std::numbers::pi * eta / 2.0 + lnr.val -
                      std::lgamma(2.0 * ell + 2.0);
  return std::exp(ln_c);
}

double coulomb_phase(int ell, double eta) {
  if (ell < 0) throw std::domain_error("coulomb_phase: ell must be nonnegative");
  if (eta == 0.0) return 0.0;
  gsl_sf_result lnr, arg;
  const int status = gsl_sf_lngamma_complex_e(1.0, eta, &lnr, &arg);
  if (status != GSL_SUCCESS) {
    throw AccuracyError("coulomb_phase: log-gamma evaluation failed");
  }
  double sigma = arg.val;  // sigma_0, principal value (|sigma_0| < pi for any real eta)
  for (int l = 1; l <= ell; ++l) sigma += std::atan2(eta, static_cast<double>(l));
  return sigma;
}

std::complex<double> digamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw std::domain_error("digamma: pole at nonpositive integer");
  }

  // Reflection into Re z >= 1/2, then recurrence shift until |z| is large
  // enough for the Stirling series.
  if (z.real() < 0.5) {
    const std::complex<double> pi = {std::numbers::pi, 0.0};
    return digamma(1.0 - z) - pi / std::tan(std::numbers::pi * z);
  }

  std::complex<double> shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }

  // psi(z) ~ log z - 1/(2z) - sum B_{2n}/(2n z^{2n})
  static const double b[] = {
      1.0 / 12.0,     -1.0 / 120.0,     1.0 / 252.0,  -1.0 / 240.0,
      1.0 / 132.0,    -691.0 / 32760.0, 1.0 / 12.0,
  };
  const std::complex<double> inv2 = 1.0 / (z * z);
  std::complex<double> series = 0.0;
  std::complex<double> pw = inv2;
  for (double coeff : b) {
    series += coeff * pw;
    pw *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

}  // namespace singreen::specfun
