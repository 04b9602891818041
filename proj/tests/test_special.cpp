#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "fourierlab/error.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/special.hpp"
#include "oracles/oracles.hpp"

using namespace fourierlab;
using quad = boost::multiprecision::cpp_bin_float_quad;

namespace {
// x^2 J'' + x J' + (x^2 - k^2) J with 5-point differences on 113-bit values
double bessel_ode_residual(int k, double x, double h) {
  // one term count and exact stencil abscissae in 113-bit arithmetic
  const int terms = bessel_truncation(k, x + 2 * h) + 30;
  const quad xq = x, hq = h;
  auto j = [k, terms, &xq, &hq](int step) { return bessel_j_series<quad>(k, xq + step * hq, terms); };
  const quad f0 = j(0), fp1 = j(1), fm1 = j(-1), fp2 = j(2), fm2 = j(-2);
  const quad d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * hq);
  const quad d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * hq * hq);
  return static_cast<double>(xq * xq * d2 + xq * d1 + (xq * xq - k * k) * f0);
}
}  // namespace

TEST_CASE("Bessel values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-10);
  for (int k : {0, 1, 2, 5, 13}) {
    for (double x : {0.3, 1.0, 2.0, 7.5, 19.0, 33.3, 49.9}) {
      CHECK(std::abs(bessel_j(k, x) - oracle::bessel_j(k, x)) < 1e-13);
    }
  }
  CHECK_THROWS_AS(bessel_j(0, 50.5), InvalidArgument);
}

TEST_CASE("Bessel truncation meets the tail bound") {
  for (int k : {0, 3, 10}) {
    for (double x : {0.5, 5.0, 40.0}) {
      const auto e = bessel_j_eval(k, x);
      const int J = e.truncation;
      const double tail = std::exp((2 * J + k) * std::log(x / 2) - std::lgamma(J + 1.0) - std::lgamma(J + k + 1.0));
      CHECK(tail < 1e-16);
      CHECK(e.order == k);
    }
  }
}

TEST_CASE("Bessel parity and negative orders") {
  for (int k = -4; k <= 4; ++k) {
    for (double x : {0.7, 3.1, 12.0}) {
      const double sign = (std::abs(k) % 2) ? -1.0 : 1.0;
      CHECK(bessel_j(k, -x) == doctest::Approx(sign * bessel_j(k, x)).epsilon(1e-13));
      CHECK(bessel_j(-k, x) == doctest::Approx(sign * bessel_j(k, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Bessel differential equation") {
  double worst = 0;
  for (int k : {0, 1, 2, 3}) {
    for (int i = 1; i <= 50; ++i) worst = std::max(worst, std::abs(bessel_ode_residual(k, 0.2 * i, 1e-4)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("Bessel generating function") {
  const double x = 1.0;
  for (double theta : {0.0, 0.4, 1.3, 2.9}) {
    const cplx z = std::polar(1.0, theta);
    cplx s{};
    for (int k = -20; k <= 20; ++k) s += bessel_j(k, x) * std::pow(z, k);
    CHECK(std::abs(s - std::exp(x / 2 * (z - 1.0 / z))) < 1e-10);
  }
}

TEST_CASE("zeros of J0") {
  const auto z = j0_zeros(10);
  REQUIRE(z.size() == 10);
  CHECK(std::abs(z[0] - 2.40482555769577) < 1e-10);
  for (int m = 0; m < 10; ++m) {
    CHECK(z[m] > m * kPi);
    CHECK(z[m] < (m + 1) * kPi);
    CHECK(std::abs(z[m] - oracle::j0_zero(m + 1)) < 1e-12);
    CHECK(std::abs(bessel_j(0, z[m])) < 1e-10);
  }
  CHECK_THROWS_AS(j0_zeros(11), InvalidArgument);
}

TEST_CASE("Chebyshev polynomials") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0, kPi);
  for (int n = 0; n <= 12; ++n) {
    for (int i = 0; i < 20; ++i) {
      const double th = u(gen);
      CHECK(std::abs(chebyshev_t(n, std::cos(th)) - std::cos(n * th)) < 1e-12);
      CHECK(std::abs(chebyshev_t_recurrence(n, std::cos(th)) - chebyshev_t(n, std::cos(th))) < 1e-12);
    }
    for (double x : {1.5, -2.0, 3.0}) {
      CHECK(chebyshev_t(n, x) == doctest::Approx(chebyshev_t_recurrence(n, x)).epsilon(1e-12));
    }
  }
  CHECK(chebyshev_coefficients(3).back() == 4);
  CHECK(chebyshev_coefficients(3) == std::vector<std::int64_t>{0, -3, 0, 4});
  CHECK(chebyshev_t(0, 0.3) == 1.0);
  CHECK(chebyshev_t(0, 17.0) == 1.0);
}

TEST_CASE("Legendre polynomials are orthonormal") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double ip = gauss_legendre_integrate([&](double x) { return legendre(i, x) * legendre(j, x); }, -1, 1, 16);
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
  }
  CHECK(legendre(0, 0.3) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(rodrigues_coefficients(2) == std::vector<std::int64_t>{-4, 0, 12});
  CHECK_THROWS_AS(legendre(2, 1.5), InvalidArgument);
  CHECK_THROWS_AS(rodrigues_coefficients(13), InvalidArgument);
}

TEST_CASE("Haar functions") {
  CHECK(haar(1, 0, 0.25) == 1.0);
  CHECK(haar(1, 0, 0.75) == -1.0);
  CHECK(haar(2, 1, 0.25) == 0.0);
  CHECK(haar(2, 1, 0.6) == doctest::Approx(std::sqrt(2.0)));
  const int n = 1 << 12;
  for (auto [k1, n1, k2, n2] : std::vector<std::array<int, 4>>{{1, 0, 1, 0}, {1, 0, 1, 1}, {2, 2, 2, 2}, {1, 1, 2, 1}, {3, 2, 1, 0}}) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) / n;  // midpoints avoid the break points
      s += haar(k1, n1, x) * haar(k2, n2, x) / n;
    }
    CHECK(std::abs(s - ((k1 == k2 && n1 == n2) ? 1.0 : 0.0)) < 1e-12);
  }
  CHECK_THROWS_AS(haar(0, 1, 0.3), InvalidArgument);
  CHECK_THROWS_AS(haar(3, 1, 0.3), InvalidArgument);
}

TEST_CASE("wrapped Gaussian") {
  const WrappedGaussian w;
  CHECK(trapezoid_periodic([&](double x) { return w.pdf(x); }, 0, 1, 256) == doctest::Approx(1).epsilon(1e-10));
  CHECK(std::abs(WrappedGaussian::coefficient(0) - 1) < 1e-12);
  CHECK(std::abs(WrappedGaussian::coefficient(1) - std::exp(-2 * kPi * kPi)) < 1e-12);
  for (long m : {0L, 1L, 2L}) {
    const double c = trapezoid_periodic([&](double x) { return w.pdf(x) * std::cos(kTwoPi * m * x); }, 0, 1, 256);
    CHECK(std::abs(c - WrappedGaussian::coefficient(m)) < 1e-12);
  }
  for (double x : {0.0, 0.3, 0.77}) CHECK(std::abs(w.pdf(x) - w.pdf_frequency(x)) < 1e-12);
  for (double x : {0.0, 0.25, 0.5, 0.9, 1.0}) CHECK(std::abs(w.cdf(x) - oracle::wrapped_normal_cdf(x)) < 1e-12);
}

TEST_CASE("classical constants") {
  CHECK(std::abs(zeta2_partial(1000000) - kPi * kPi / 6) < 2e-6);
  CHECK(std::abs(zeta4_partial(10000) - std::pow(kPi, 4) / 90) < 4e-12);
  CHECK(std::abs(wallis_partial(1000) - kPi / 2) < 1e-3);
  CHECK(std::abs(stirling_ratio(20) - 1) < 0.005);
  // 1/(12n) correction
  CHECK(std::abs(stirling_ratio(20) * (1 + 1.0 / 240) - 1) < 1e-4);
  CHECK(std::abs(sine_product_partial(0.5, 100000) - 2 / kPi) < 1e-5);
  CHECK(std::abs(sine_product_partial(0.5, 1000) * wallis_partial(1000) - 1) < 1e-3);
  for (long k : {1L, 10L, 1000L, 100000L}) CHECK(zeta2_partial(k) <= 2.0);
  const auto suite = constants_suite();
  CHECK(suite.size() == 5);
  for (const auto& e : suite) CHECK(std::isfinite(e.partial));
  const auto refs = basel_reference_strings();
  CHECK(refs.size() == 2);
}
