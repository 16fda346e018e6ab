#include "rwlab/specfun.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace rwlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kAi0 = 0.355028053887817239260063186004;   // Ai(0)
constexpr double kAip0 = -0.258819403792806798405183560189;  // Ai'(0)
constexpr double kBi0 = 0.614926627446000735150922369094;   // Bi(0)
constexpr double kBip0 = 0.448288357353826357914823710399;  // Bi'(0)

// One Taylor step of y'' = x y from x0 by h; updates (y, yp) in place.
void airy_taylor_step(double x0, double h, double& y, double& yp) {
  constexpr int kOrder = 34;
  double c[kOrder + 1];
  c[0] = y;
  c[1] = yp;
  c[2] = 0.5 * x0 * c[0];
  for (int n = 1; n + 2 <= kOrder; ++n)
    c[n + 2] = (x0 * c[n] + c[n - 1]) / double((n + 1) * (n + 2));
  double s = 0, sp = 0;
  for (int n = kOrder; n >= 1; --n) {
    s = s * h + c[n];
    sp = sp * h + double(n) * c[n];
  }
  y = s * h + c[0];
  yp = sp;
}

// Propagates (y, yp) of y'' = x y from x0 to x1 in bounded Taylor steps.
void airy_taylor_run(double x0, double x1, double& y, double& yp) {
  const double hmax = 0.75;
  double x = x0;
  while (std::abs(x1 - x) > 0.0) {
    double h = std::clamp(x1 - x, -hmax, hmax);
    airy_taylor_step(x, h, y, yp);
    x += h;
    if (std::abs(x1 - x) < 1e-14) break;
  }
}

// Sum_k c_k q^k with c = u (ascending-series coefficients of DLMF 9.7) or
// c = v, truncated at the smallest term.
double airy_asym_sum(double q, bool v_coeffs) {
  double u = 1.0, sum = 0.0, prev = 1e308;
  for (int k = 0; k < 60; ++k) {
    double ck = (v_coeffs && k > 0) ? -u * (6.0 * k + 1.0) / (6.0 * k - 1.0) : u;
    double term = ck * std::pow(q, k);
    if (std::abs(term) > prev) break;  // optimal truncation
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    u *= (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0) /
         (216.0 * (k + 1.0) * (2.0 * k + 1.0));
  }
  return sum;
}

// Sum_m (-1)^m c_{2m+p} / xi^{2m+p} with p in {0,1}.
// sel: 0 even-u, 1 odd-u, 2 even-v, 3 odd-v.
double airy_osc_sum(double xi, int sel) {
  double u = 1.0;
  std::array<double, 60> uk{}, vk{};
  for (int k = 0; k < 60; ++k) {
    uk[k] = u;
    vk[k] = (k == 0) ? 1.0 : -u * (6.0 * k + 1.0) / (6.0 * k - 1.0);
    u *= (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0) /
         (216.0 * (k + 1.0) * (2.0 * k + 1.0));
  }
  double sum = 0.0, prev = 1e308;
  for (int m = 0; m < 30; ++m) {
    int k = (sel == 0 || sel == 2) ? 2 * m : 2 * m + 1;
    double c = (sel <= 1) ? uk[k] : vk[k];
    double term = ((m % 2) ? -1.0 : 1.0) * c / std::pow(xi, k);
    if (std::abs(term) > prev) break;
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

AiryValues airy_asymptotic_pos(double x) {
  double xi = (2.0 / 3.0) * x * std::sqrt(x);
  if (xi > 700.0) throw std::overflow_error("airy: Bi overflows for this x");
  double x14 = std::pow(x, 0.25);
  double su_m = airy_asym_sum(-1.0 / xi, false);  // Sum (-1)^k u_k / xi^k
  double sv_m = airy_asym_sum(-1.0 / xi, true);
  double su_p = airy_asym_sum(1.0 / xi, false);
  double sv_p = airy_asym_sum(1.0 / xi, true);
  AiryValues r;
  double em = std::exp(-xi), ep = std::exp(xi);
  r.ai = 0.5 / std::sqrt(kPi) / x14 * em * su_m;
  r.ai_prime = -0.5 / std::sqrt(kPi) * x14 * em * sv_m;
  r.bi = 1.0 / std::sqrt(kPi) / x14 * ep * su_p;
  r.bi_prime = 1.0 / std::sqrt(kPi) * x14 * ep * sv_p;
  return r;
}

AiryValues airy_asymptotic_neg(double xpos) {
  // Evaluates at -xpos, xpos > 0 (DLMF 9.7.9-9.7.12).
  double xi = (2.0 / 3.0) * xpos * std::sqrt(xpos);
  double x14 = std::pow(xpos, 0.25);
  double c = std::cos(xi - 0.25 * kPi), s = std::sin(xi - 0.25 * kPi);
  double ue = airy_osc_sum(xi, 0), uo = airy_osc_sum(xi, 1);
  double ve = airy_osc_sum(xi, 2), vo = airy_osc_sum(xi, 3);
  AiryValues r;
  double f = 1.0 / (std::sqrt(kPi) * x14);
  r.ai = f * (c * ue + s * uo);
  r.bi = f * (-s * ue + c * uo);
  double g = x14 / std::sqrt(kPi);
  r.ai_prime = g * (s * ve - c * vo);
  r.bi_prime = g * (c * ve + s * vo);
  return r;
}

}  // namespace

AiryValues airy(double x) {
  if (!(std::abs(x) <= 120.0))
    throw std::overflow_error("airy: |x| > 120 not supported");
  const double sw = 7.5;
  if (x >= sw) return airy_asymptotic_pos(x);
  if (x <= -sw) return airy_asymptotic_neg(-x);

  AiryValues r;
  if (x <= 0.0) {
    double ai = kAi0, aip = kAip0, bi = kBi0, bip = kBip0;
    airy_taylor_run(0.0, x, ai, aip);
    airy_taylor_run(0.0, x, bi, bip);
    r.ai = ai;
    r.ai_prime = aip;
    r.bi = bi;
    r.bi_prime = bip;
  } else {
    // Bi grows to the right: forward propagation is stable.
    double bi = kBi0, bip = kBip0;
    airy_taylor_run(0.0, x, bi, bip);
    // Ai decays to the right: seed asymptotically at 12 and come back.
    AiryValues seed = airy_asymptotic_pos(12.0);
    double ai = seed.ai, aip = seed.ai_prime;
    airy_taylor_run(12.0, x, ai, aip);
    r.ai = ai;
    r.ai_prime = aip;
    r.bi = bi;
    r.bi_prime = bip;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using cplx = std::complex<double>;

struct BesselSeriesOut {
  cplx I, Ip;
};

// Power series of I_{i nu}(x); safe for x up to ~max(2, nu).
BesselSeriesOut bessel_series(double nu, double x) {
  cplx inu(0.0, nu);
  cplx t0 = std::exp(inu * std::log(0.5 * x)) / complex_gamma(1.0 + inu);
  cplx term = t0, sum = t0, dsum = t0 * inu / x;
  double q = 0.25 * x * x;
  for (int k = 1; k < 400; ++k) {
    term *= q / (double(k) * (double(k) + inu));
    sum += term;
    dsum += term * (inu + 2.0 * double(k)) / x;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 4) break;
  }
  return {sum, dsum};
}

}  // namespace

BesselImagOrder bessel_imag_order(double nu, double x) {
  if (!(x > 0.0) || nu < 0.0)
    throw std::domain_error("bessel_imag_order: requires x > 0, nu >= 0");
  if (x > 700.0)
    throw std::overflow_error("bessel_imag_order: argument overflow");

  double x_series = std::max(2.0, 0.8 * nu);
  BesselImagOrder out;
  if (x <= x_series) {
    auto s = bessel_series(nu, x);
    out.plus = s.I;
    out.plus_prime = s.Ip;
  } else {
    auto s = bessel_series(nu, x_series);
    // Continue with J = e^{-x} I to keep the state O(1):
    // J'' + (2 + 1/x) J' + (1/x + nu^2/x^2) J = 0.
    namespace odeint = boost::numeric::odeint;
    using state = std::array<double, 4>;  // Re J, Im J, Re J', Im J'
    double e0 = std::exp(-x_series);
    state y{s.I.real() * e0, s.I.imag() * e0, (s.Ip - s.I).real() * e0,
            (s.Ip - s.I).imag() * e0};
    auto rhs = [nu](const state& u, state& du, double t) {
      double a = 2.0 + 1.0 / t;
      double b = 1.0 / t + nu * nu / (t * t);
      du[0] = u[2];
      du[1] = u[3];
      du[2] = -a * u[2] - b * u[0];
      du[3] = -a * u[3] - b * u[1];
    };
    auto stepper = odeint::make_controlled(
        1e-13, 1e-13, odeint::runge_kutta_dopri5<state>());
    odeint::integrate_adaptive(stepper, rhs, y, x_series, x,
                               (x - x_series) / 64.0);
    double ex = std::exp(x);
    cplx J(y[0], y[1]), Jp(y[2], y[3]);
    out.plus = ex * J;
    out.plus_prime = ex * (J + Jp);
  }
  out.minus = std::conj(out.plus);
  out.minus_prime = std::conj(out.plus_prime);
  return out;
}

// ---------------------------------------------------------------------------

std::complex<double> complex_gamma(std::complex<double> z) {
  // Lanczos, g = 607/128, 15 terms.
  static const double g = 607.0 / 128.0;
  static const double c[15] = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};

  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      z.real() == std::floor(z.real()))
    throw std::domain_error("complex_gamma: pole at nonpositive integer");

  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)).
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> a = c[0];
  for (int k = 1; k < 15; ++k) a += c[k] / (z + double(k));
  std::complex<double> t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// ---------------------------------------------------------------------------

namespace {

// Normalized associated Legendre P~_l^m(x) with Condon-Shortley phase,
// so that Y_{l,m} = P~_l^m(cos theta) e^{i m phi} is orthonormal on S^2.
double legendre_norm(int l, int m, double x) {
  double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 1.0 / std::sqrt(4.0 * kPi);
  for (int k = 1; k <= m; ++k)
    pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * somx2;
  if (l == m) return pmm;
  double pmmp1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    double a = std::sqrt((4.0 * ll * ll - 1.0) / (double(ll) * ll - m * m));
    double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - m * m) /
                         (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
    pll = a * (x * pmmp1 - b * pmm);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

}  // namespace

std::complex<double> spherical_harmonic(int ell, int j, double theta,
                                        double phi) {
  if (ell < 0 || std::abs(j) > ell)
    throw std::domain_error("spherical_harmonic: requires |j| <= l");
  int m = std::abs(j);
  double p = legendre_norm(ell, m, std::cos(theta));
  std::complex<double> e(std::cos(m * phi), std::sin(m * phi));
  std::complex<double> y = p * e;
  if (j < 0) y = (m % 2 ? -1.0 : 1.0) * std::conj(y);
  return y;
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

}  // namespace rwlab
