#include "rwlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rwlab {

namespace {
constexpr double kInvE = 0.36787944117144233;  // 1/e
}

double lambert_w0(double z) {
  if (std::isnan(z) || z < -kInvE * (1.0 + 1e-12))
    throw std::domain_error("lambert_w0: argument below -1/e");
  if (z == 0.0) return 0.0;
  z = std::max(z, -kInvE);

  // Initial guess, then Halley.
  double w;
  if (z < -0.25) {
    // Series about the branch point in p = sqrt(2(ez+1)).
    double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * z + 1.0)));
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
  } else if (z < 2.0) {
    w = z * (1.0 - z + 1.5 * z * z) / (1.0 + 0.5 * z);  // crude Pade-ish
    if (z > 0.5) w = std::log1p(z) * 0.8;
  } else {
    double l1 = std::log(z), l2 = std::log(std::log(z));
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 50; ++it) {
    double ew = std::exp(w);
    double f = w * ew - z;
    double wp1 = w + 1.0;
    double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= dw;
    if (std::abs(dw) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double lambert_w0_of_exp(double u) {
  if (u < 700.0 && u > -700.0) return lambert_w0(std::exp(u));
  if (u <= -700.0) return std::exp(u);  // underflows to 0 consistently
  // Newton on w + log w = u.
  double w = u - std::log(u);
  for (int it = 0; it < 50; ++it) {
    double f = w + std::log(w) - u;
    double dw = f / (1.0 + 1.0 / w);
    w -= dw;
    if (std::abs(dw) <= 1e-15 * std::abs(w)) break;
  }
  return w;
}

double Geometry::tortoise(double r) const {
  double tm = 2.0 * mass;
  if (!(r > tm)) throw std::domain_error("tortoise: r must exceed 2M");
  return r + tm * std::log(r / tm - 1.0);
}

double Geometry::radius(double x) const {
  double tm = 2.0 * mass;
  double u = x / tm - 1.0;
  if (u > 690.0) {
    return tm * (1.0 + lambert_w0_of_exp(u));
  }
  double z = std::exp(u);
  if (z < 1e-300) return tm * (1.0 + 1e-300);
  return tm * (1.0 + lambert_w0(z));
}

bool Geometry::radius_clamped(double x) const {
  return std::exp(x / (2.0 * mass) - 1.0) < 1e-300;
}

double Geometry::rm2m_of_tortoise(double x) const {
  double tm = 2.0 * mass;
  double u = x / tm - 1.0;
  if (u > 690.0) return tm * lambert_w0_of_exp(u);
  double z = std::exp(u);
  if (z < 1e-300) return tm * 1e-300;
  return tm * lambert_w0(z);
}

double Geometry::tortoise_of_rm2m(double q) const {
  double tm = 2.0 * mass;
  if (!(q > 0.0)) throw std::domain_error("tortoise_of_rm2m: q must be > 0");
  return q + tm + tm * std::log(q / tm);
}

double Geometry::potential_r(double r, double lam) const {
  double tm = 2.0 * mass;
  double f = 1.0 - tm / r;
  return f * (lam / (r * r) + tm * sigma / (r * r * r));
}

double Geometry::potential_r_dr(double r, double lam) const {
  double tm = 2.0 * mass;
  double f = 1.0 - tm / r;
  double fp = tm / (r * r);
  double g = lam / (r * r) + tm * sigma / (r * r * r);
  double gp = -2.0 * lam / (r * r * r) - 3.0 * tm * sigma / (r * r * r * r);
  return fp * g + f * gp;
}

double Geometry::potential(double x, double lam) const {
  return potential_r(radius(x), lam);
}

double Geometry::potential_dx(double x, double lam) const {
  double r = radius(x);
  double f = 1.0 - 2.0 * mass / r;  // dr/dx
  return f * potential_r_dr(r, lam);
}

double Geometry::potential_dxx(double x, double lam) const {
  double tm = 2.0 * mass;
  double r = radius(x);
  double f = 1.0 - tm / r;
  double fp = tm / (r * r);
  double g = lam / (r * r) + tm * sigma / (r * r * r);
  double gp = -2.0 * lam / (r * r * r) - 3.0 * tm * sigma / std::pow(r, 4);
  double fpp = -2.0 * tm / (r * r * r);
  double gpp = 6.0 * lam / std::pow(r, 4) + 12.0 * tm * sigma / std::pow(r, 5);
  double vr = fp * g + f * gp;
  double vrr = fpp * g + 2.0 * fp * gp + f * gpp;
  // d2V/dx2 = F (F' Vr + F Vrr), F = dr/dx
  return f * (fp * vr + f * vrr);
}

namespace {

// Locates the interior maximum of V_{lam,sigma} in r by bisection on dV/dr.
double locate_r_max(const Geometry& g, double lam) {
  double lo = 2.0 * g.mass * (1.0 + 1e-8);
  double hi = 20.0 * g.mass * (1.0 + std::abs(lam));
  double dlo = g.potential_r_dr(lo, lam);
  double dhi = g.potential_r_dr(hi, lam);
  if (!(dlo > 0.0) || !(dhi < 0.0))
    throw std::runtime_error(
        "normalize_mode: failed to bracket the potential maximum (sigma/l "
        "combination has no interior positive maximum)");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double d = g.potential_r_dr(mid, lam);
    if (d > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14 * mid) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ModeContext normalize_mode_lam(double lam, const Geometry& g) {
  ModeContext mc;
  mc.geom = g;
  mc.lam = lam;
  mc.ell = -1;
  mc.r_max = locate_r_max(g, lam);
  mc.x_max = g.tortoise(mc.r_max);
  double vmax = g.potential_r(mc.r_max, lam);
  if (!(vmax > 0.0))
    throw std::runtime_error("normalize_mode: potential maximum not positive");
  mc.hbar = 1.0 / std::sqrt(vmax);
  mc.v_second = mc.d2V(mc.x_max);
  return mc;
}

ModeContext normalize_mode(int ell, const Geometry& g) {
  if (ell < 1) throw std::domain_error("normalize_mode: requires l >= 1");
  ModeContext mc = normalize_mode_lam(double(ell) * (ell + 1.0), g);
  mc.ell = ell;
  return mc;
}

ModeContext mode_for_hbar(double hbar, const Geometry& g) {
  if (!(hbar > 0.0)) throw std::domain_error("mode_for_hbar: hbar must be > 0");
  double target = 1.0 / (hbar * hbar);  // required max of V_{lam,sigma}
  // max_r (1-2M/r)/r^2 = 1/(27 M^2) at r = 3M; use it to seed lam.
  double lam = target * 27.0 * g.mass * g.mass;
  auto vmax = [&](double l) {
    double rm = locate_r_max(g, l);
    return g.potential_r(rm, l);
  };
  double lo = 0.5 * lam, hi = 2.0 * lam;
  while (vmax(lo) > target) lo *= 0.5;
  while (vmax(hi) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (vmax(mid) < target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14 * mid) break;
  }
  ModeContext mc = normalize_mode_lam(0.5 * (lo + hi), g);
  mc.hbar = hbar;  // exact by construction up to the solve tolerance
  return mc;
}

Grid::Grid(std::vector<double> nodes) : x(std::move(nodes)) {
  if (x.size() < 2) throw std::domain_error("grid needs at least two nodes");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      throw std::domain_error("grid nodes must be strictly increasing");
}

Grid Grid::uniform(double a, double b, std::size_t n) {
  if (!(b > a) || n < 2) throw std::domain_error("grid: bad range");
  std::vector<double> v(n);
  double h = (b - a) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + h * double(i);
  v.back() = b;
  return Grid(std::move(v));
}

}  // namespace rwlab
