#pragma once

#include <complex>
#include <vector>

namespace rwlab {

struct AiryValues {
  double ai = 0, ai_prime = 0, bi = 0, bi_prime = 0;
};

// Airy pair with derivatives. Throws std::overflow_error once Bi exceeds the
// representable range (|x| is limited to ~104 on the positive axis).
AiryValues airy(double x);

// Modified Bessel functions of purely imaginary order, I_{+i nu} and
// I_{-i nu}, with derivatives, for real x > 0 and nu >= 0.
struct BesselImagOrder {
  std::complex<double> plus, plus_prime;    // I_{i nu}, d/dx I_{i nu}
  std::complex<double> minus, minus_prime;  // I_{-i nu} = conj on real axis
};
BesselImagOrder bessel_imag_order(double nu, double x);

// Gamma function on the complex plane (Lanczos + reflection).
std::complex<double> complex_gamma(std::complex<double> z);

// Orthonormal spherical harmonic Y_{l,j}(theta, phi), |j| <= l.
std::complex<double> spherical_harmonic(int ell, int j, double theta,
                                        double phi);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace rwlab
