#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rwlab {

// Principal branch of the Lambert W function, w e^w = z, z >= -1/e.
double lambert_w0(double z);

// Solves w + log(w) = u for w > 0 (equivalent to w = W0(e^u) without overflow).
double lambert_w0_of_exp(double u);

struct Geometry {
  double mass = 1.0;
  int sigma = 1;  // 1 scalar, 0 electromagnetic, -3 gravitational

  Geometry() = default;
  Geometry(double mass_, int sigma_) : mass(mass_), sigma(sigma_) {
    if (!(mass > 0.0)) throw std::domain_error("geometry.mass must be > 0");
    if (sigma != 1 && sigma != 0 && sigma != -3)
      throw std::domain_error("geometry.sigma must be one of {-3, 0, 1}");
  }

  // x = r + 2M log(r/2M - 1), r > 2M
  double tortoise(double r) const;

  // Inverse map; total on the real line. Values with r - 2M below ~1e-300
  // are clamped just outside the horizon (see radius_clamped).
  double radius(double x) const;
  bool radius_clamped(double x) const;

  // Horizon-faithful pair working in q = r - 2M, which avoids the
  // cancellation in r - 2M for x far below the photon sphere.
  double rm2m_of_tortoise(double x) const;
  double tortoise_of_rm2m(double q) const;

  // V_{l,sigma}(x) = (1 - 2M/r)(lam/r^2 + 2M sigma/r^3), lam = l(l+1).
  double potential(double x, double lam) const;
  double potential_dx(double x, double lam) const;
  double potential_dxx(double x, double lam) const;

  // Same, as functions of r (used by the mode normalization).
  double potential_r(double r, double lam) const;
  double potential_r_dr(double r, double lam) const;
};

// Semiclassically normalized mode: V(x;hbar) = hbar^2 V_{l,sigma}(x) with
// V(x_max;hbar) = 1 at the unique interior maximum.
struct ModeContext {
  Geometry geom;
  double lam = 0.0;  // angular eigenvalue l(l+1); real for hbar-specified modes
  int ell = -1;      // -1 when the mode was built from a target hbar
  double hbar = 0.0;
  double x_max = 0.0;
  double r_max = 0.0;
  double v_second = 0.0;  // V''(x_max; hbar) of the normalized potential

  double V(double x) const { return hbar * hbar * geom.potential(x, lam); }
  double dV(double x) const { return hbar * hbar * geom.potential_dx(x, lam); }
  double d2V(double x) const { return hbar * hbar * geom.potential_dxx(x, lam); }
};

ModeContext normalize_mode(int ell, const Geometry& g);
ModeContext normalize_mode_lam(double lam, const Geometry& g);
// Chooses lam so that the normalized mode has exactly the requested hbar.
ModeContext mode_for_hbar(double hbar, const Geometry& g);

struct Grid {
  std::vector<double> x;

  Grid() = default;
  explicit Grid(std::vector<double> nodes);
  static Grid uniform(double a, double b, std::size_t n);

  std::size_t size() const { return x.size(); }
  double front() const { return x.front(); }
  double back() const { return x.back(); }
};

}  // namespace rwlab
