#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fourierlab {

// ---------------------------------------------------------------------------
// Bessel functions of the first kind

/// Largest |x| served by the power series.
inline constexpr double kBesselRegime = 50.0;

/// Number of series terms J such that |x/2|^{2J+|k|} / (J! (J+|k|)!) < 1e-16
/// with the terms already decreasing from J on.
int bessel_truncation(int k, double x);

/// sum_{j<terms} (-1)^j (x/2)^{2j+k} / (j! (j+k)!) for k >= 0 in any real type.
template <class Real>
Real bessel_j_series(int k, const Real& x, int terms) {
  const Real half = x / 2;
  Real lead = 1;
  for (int i = 1; i <= k; ++i) lead = lead * half / i;
  const Real q = half * half;
  Real term = lead;
  Real sum = 0;
  for (int j = 0; j < terms; ++j) {
    sum += term;
    term = -term * q / ((j + 1) * (j + 1 + k));
  }
  return sum;
}

struct BesselEval {
  int order;
  int truncation;
  double value;
};

/// J_k(x) by the power series, |x| <= 50. Large arguments are summed in
/// 113-bit floating point to absorb the cancellation between terms.
BesselEval bessel_j_eval(int k, double x);
double bessel_j(int k, double x);

/// First `count` positive zeros of J_0 (count <= 10), one in each (m pi, (m+1) pi),
/// by bisection to 1e-12.
std::vector<double> j0_zeros(int count);

// ---------------------------------------------------------------------------
// Orthogonal systems

/// T_m(x): cos(m acos x) on [-1,1], cosh(m acosh x) for x > 1,
/// (-1)^m cosh(m acosh(-x)) for x < -1.
double chebyshev_t(int m, double x);
/// T_m by T_{m+1} = 2x T_m - T_{m-1}.
double chebyshev_t_recurrence(int m, double x);
/// Integer coefficients of T_m, lowest degree first.
std::vector<std::int64_t> chebyshev_coefficients(int m);

/// Orthonormal Legendre polynomial sqrt(2k+1) / (2^{k+1/2} k!) d^k/dx^k (x^2-1)^k
/// on [-1,1], from exact integer coefficients (0 <= k <= 12).
double legendre(int k, double x);
/// Integer coefficients of d^k/dx^k (x^2-1)^k, lowest degree first.
std::vector<std::int64_t> rodrigues_coefficients(int k);

/// Haar function h_{k,n}: 2^{n/2} on ((k-1)/2^n, (k-1/2)/2^n), -2^{n/2} on
/// ((k-1/2)/2^n, k/2^n), zero elsewhere. Requires n >= 0, 1 <= k <= 2^n.
double haar(int k, int n, double x);

// ---------------------------------------------------------------------------
// Wrapped Gaussian

class WrappedGaussian {
 public:
  explicit WrappedGaussian(int space_terms = 8, int frequency_terms = 8);

  /// (1/sqrt(2 pi)) sum_{|k|<=Ks} e^{-(x+k)^2/2}, x reduced to [0,1).
  double pdf(double x) const;
  /// sum_{|k|<=Kf} e^{-2 pi^2 k^2} e^{-2 pi i k x}.
  double pdf_frequency(double x) const;
  /// int_0^x W for x in [0,1].
  double cdf(double x) const;
  /// W_m = e^{-2 pi^2 m^2}.
  static double coefficient(long m);

 private:
  int ks_;
  int kf_;
};

// ---------------------------------------------------------------------------
// Classical constants

double zeta2_partial(long terms);
double zeta4_partial(long terms);
/// prod_{j<=n} 4j^2 / (4j^2 - 1), tends to pi/2.
double wallis_partial(long n);
/// prod_{j<=n} (1 - z^2/j^2), tends to sin(pi z)/(pi z).
double sine_product_partial(double z, long n);
/// sqrt(2 pi n) (n/e)^n / n!.
double stirling_ratio(long n);

struct ConstantEntry {
  std::string name;
  double partial;
  double target;
};

struct ConstantsRequest {
  long zeta2_terms = 1000000;
  long zeta4_terms = 10000;
  long wallis_n = 1000;
  double sine_z = 0.5;
  long sine_n = 1000;
  long stirling_n = 20;
};

std::vector<ConstantEntry> constants_suite(const ConstantsRequest& request = {});

/// Historical values of sum 1/k^2, kept as text.
std::vector<std::string> basel_reference_strings();

}  // namespace fourierlab
