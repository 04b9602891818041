#include "fourierlab/special.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "fourierlab/error.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/periodic.hpp"

namespace fourierlab {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

double log_series_term(int k, int j, double ax) {
  return (2.0 * j + k) * std::log(ax / 2.0) - std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0);
}

}  // namespace

int bessel_truncation(int k, double x) {
  require(k >= 0, "bessel_truncation: order must be >= 0");
  const double ax = std::abs(x);
  if (ax == 0.0) return k == 0 ? 1 : 0;
  const double q = ax * ax / 4.0;
  const double log_eps = std::log(1e-16);
  int j = 0;
  while (q >= (j + 1.0) * (j + 1.0 + k) || log_series_term(k, j, ax) >= log_eps) ++j;
  return j;
}

BesselEval bessel_j_eval(int k, double x) {
  require(std::isfinite(x) && std::abs(x) <= kBesselRegime,
          "bessel_j: |x| must not exceed 50 (series regime)");
  const int a = std::abs(k);
  const int terms = bessel_truncation(a, x);
  double v = 0.0;
  if (std::abs(x) <= 2.0) {
    v = bessel_j_series<double>(a, x, terms);
  } else {
    v = static_cast<double>(bessel_j_series<Quad>(a, Quad(x), terms));
  }
  if (k < 0 && (a % 2) != 0) v = -v;
  return {k, terms, v};
}

double bessel_j(int k, double x) { return bessel_j_eval(k, x).value; }

std::vector<double> j0_zeros(int count) {
  require(count >= 0 && count <= 10, "j0_zeros: count must be in [0,10]");
  std::vector<double> zeros;
  for (int m = 0; m < count; ++m) {
    double lo = m * kPi;
    double hi = (m + 1) * kPi;
    double flo = m == 0 ? 1.0 : bessel_j(0, lo);
    const double fhi = bessel_j(0, hi);
    if (std::signbit(flo) == std::signbit(fhi)) {
      throw NumericalError("j0_zeros: no sign change on bracket " + std::to_string(m));
    }
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      const double fm = bessel_j(0, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    zeros.push_back(0.5 * (lo + hi));
  }
  return zeros;
}

double chebyshev_t(int m, double x) {
  require(m >= 0, "chebyshev_t: degree must be >= 0");
  if (x > 1.0) return std::cosh(m * std::acosh(x));
  if (x < -1.0) return ((m % 2) ? -1.0 : 1.0) * std::cosh(m * std::acosh(-x));
  return std::cos(m * std::acos(x));
}

double chebyshev_t_recurrence(int m, double x) {
  require(m >= 0, "chebyshev_t: degree must be >= 0");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int i = 1; i < m; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<std::int64_t> chebyshev_coefficients(int m) {
  require(m >= 0 && m <= 62, "chebyshev_coefficients: degree must be in [0,62]");
  std::vector<std::int64_t> prev{1};
  if (m == 0) return prev;
  std::vector<std::int64_t> cur{0, 1};
  for (int i = 1; i < m; ++i) {
    std::vector<std::int64_t> next(cur.size() + 1, 0);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2 * cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::int64_t> rodrigues_coefficients(int k) {
  require(k >= 0 && k <= 12, "legendre: degree must be in [0,12]");
  // (x^2-1)^k = sum_i C(k,i) (-1)^{k-i} x^{2i}; differentiate k times.
  std::vector<std::int64_t> out(k + 1, 0);
  std::int64_t binom = 1;
  for (int i = 0; i <= k; ++i) {
    if (2 * i >= k) {
      std::int64_t falling = 1;
      for (int f = 0; f < k; ++f) {
        if (__builtin_mul_overflow(falling, static_cast<std::int64_t>(2 * i - f), &falling)) {
          throw NumericalError("legendre: integer overflow");
        }
      }
      std::int64_t c = 0;
      if (__builtin_mul_overflow(binom, falling, &c)) throw NumericalError("legendre: integer overflow");
      out[2 * i - k] = ((k - i) % 2) ? -c : c;
    }
    binom = binom * (k - i) / (i + 1);
  }
  return out;
}

double legendre(int k, double x) {
  require(std::isfinite(x) && x >= -1.0 && x <= 1.0, "legendre: x must lie in [-1,1]");
  const auto coeffs = rodrigues_coefficients(k);
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + static_cast<double>(*it);
  const double norm = std::sqrt(2.0 * k + 1.0) / (std::ldexp(std::sqrt(2.0), k) * std::tgamma(k + 1.0));
  return norm * v;
}

double haar(int k, int n, double x) {
  require(n >= 0 && n <= 30, "haar: level n must be in [0,30]");
  require(k >= 1 && k <= (1L << n), "haar: need 1 <= k <= 2^n");
  const double scale = std::ldexp(1.0, n);
  const double left = (k - 1) / scale;
  const double mid = (k - 0.5) / scale;
  const double right = k / scale;
  const double height = std::sqrt(scale);
  if (x > left && x < mid) return height;
  if (x > mid && x < right) return -height;
  return 0.0;
}

WrappedGaussian::WrappedGaussian(int space_terms, int frequency_terms)
    : ks_(space_terms), kf_(frequency_terms) {
  require(ks_ >= 1 && kf_ >= 1, "wrapped gaussian: truncations must be >= 1");
}

double WrappedGaussian::pdf(double x) const {
  const double u = frac_part(x);
  CompensatedSum sum;
  for (int k = -ks_; k <= ks_; ++k) sum.add(std::exp(-0.5 * (u + k) * (u + k)));
  return sum.value() / std::sqrt(kTwoPi);
}

double WrappedGaussian::pdf_frequency(double x) const {
  const double u = frac_part(x);
  CompensatedSum sum;
  sum.add(1.0);
  for (int k = 1; k <= kf_; ++k) sum.add(2.0 * coefficient(k) * std::cos(kTwoPi * frac_part(k * u)));
  return sum.value();
}

double WrappedGaussian::cdf(double x) const {
  require(x >= 0.0 && x <= 1.0, "wrapped gaussian cdf: x must lie in [0,1]");
  CompensatedSum sum;
  sum.add(x);
  for (int k = 1; k <= kf_; ++k) {
    sum.add(coefficient(k) * std::sin(kTwoPi * k * x) / (kPi * k));
  }
  return sum.value();
}

double WrappedGaussian::coefficient(long m) {
  const double md = static_cast<double>(m);
  return std::exp(-2.0 * kPi * kPi * md * md);
}

double zeta2_partial(long terms) {
  require(terms >= 1, "zeta2_partial: need at least one term");
  CompensatedSum sum;
  for (long k = terms; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    sum.add(1.0 / (kd * kd));
  }
  return sum.value();
}

double zeta4_partial(long terms) {
  require(terms >= 1, "zeta4_partial: need at least one term");
  CompensatedSum sum;
  for (long k = terms; k >= 1; --k) {
    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    sum.add(1.0 / (k2 * k2));
  }
  return sum.value();
}

double wallis_partial(long n) {
  require(n >= 1, "wallis_partial: need n >= 1");
  double log_prod = 0.0;
  for (long j = 1; j <= n; ++j) {
    const double q = 4.0 * static_cast<double>(j) * static_cast<double>(j);
    log_prod += std::log1p(1.0 / (q - 1.0));
  }
  return std::exp(log_prod);
}

double sine_product_partial(double z, long n) {
  require(n >= 1, "sine_product_partial: need n >= 1");
  double prod = 1.0;
  for (long j = 1; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    prod *= 1.0 - z * z / (jd * jd);
  }
  return prod;
}

double stirling_ratio(long n) {
  require(n >= 1, "stirling_ratio: need n >= 1");
  const double nd = static_cast<double>(n);
  return std::exp(0.5 * std::log(kTwoPi * nd) + nd * std::log(nd) - nd - std::lgamma(nd + 1.0));
}

std::vector<ConstantEntry> constants_suite(const ConstantsRequest& r) {
  const double sine_target = r.sine_z == 0.0 ? 1.0 : std::sin(kPi * r.sine_z) / (kPi * r.sine_z);
  return {
      {"zeta2", zeta2_partial(r.zeta2_terms), kPi * kPi / 6.0},
      {"zeta4", zeta4_partial(r.zeta4_terms), std::pow(kPi, 4) / 90.0},
      {"wallis", wallis_partial(r.wallis_n), kPi / 2.0},
      {"sine_product", sine_product_partial(r.sine_z, r.sine_n), sine_target},
      {"stirling", stirling_ratio(r.stirling_n), 1.0},
  };
}

std::vector<std::string> basel_reference_strings() {
  return {"1.645", "1.64493406684822643647"};
}

}  // namespace fourierlab
