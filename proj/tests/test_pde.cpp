#include <doctest.h>

#include <cmath>
#include <random>

#include "fourierlab/error.hpp"
#include "fourierlab/pde.hpp"
#include "fourierlab/special.hpp"
#include "oracles/oracles.hpp"

using namespace fourierlab;

TEST_CASE("heat: single mode and zero datum") {
  HeatProblem p{1.0, {1.0}, 1.0};
  for (double x : {0.1, 0.5, 0.77}) {
    for (double t : {0.0, 0.01, 0.3}) {
      CHECK(std::abs(heat_solve(p, x, t) - std::exp(-kPi * kPi * t) * std::sin(kPi * x)) < 1e-14);
    }
  }
  const auto z = heat_problem([](double) { return 0.0; }, 2.0, 1.0, 16);
  CHECK(heat_solve(z, 1.3, 0.2) == 0.0);
  CHECK_THROWS_AS(heat_solve(p, 1.5, 0.1), InvalidArgument);
  CHECK_THROWS_AS(heat_solve(p, 0.5, 2.0), InvalidArgument);
}

TEST_CASE("heat: sine coefficients by odd extension") {
  const auto b = heat_sine_coefficients([](double x) { return x * (1 - x); }, 1.0, 9);
  for (int k = 1; k <= 9; ++k) {
    const double exact = k % 2 ? 8 / (kPi * kPi * kPi * k * k * k) : 0.0;
    CHECK(std::abs(b[k - 1] - exact) < 1e-9);
  }
  const auto p = heat_problem([](double x) { return x * (1 - x); }, 1.0, 1.0, 40);
  CHECK(p.truncation_limited());
  const auto q = heat_problem([](double x) { return std::sin(kPi * x); }, 1.0, 1.0, 8);
  CHECK(!q.truncation_limited());
}

TEST_CASE("heat: agreement with Crank-Nicolson") {
  auto f = [](double x) { return x * (1 - x); };
  const auto p = heat_problem(f, 1.0, 0.1, 200);
  const double fd = oracle::heat_crank_nicolson(f, 1.0, 0.5, 0.01, 400, 400);
  CHECK(std::abs(heat_solve(p, 0.5, 0.01) - fd) < 2e-4);
}

TEST_CASE("heat: decay") {
  std::mt19937_64 gen(21);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> b(12);
    for (auto& v : b) v = nd(gen) / (1 + std::abs(nd(gen)));
    HeatProblem p{1.5, b, 0.5};
    double last_e = heat_energy(p, 0.0), last_sup = 1e300;
    for (int i = 0; i <= 20; ++i) {
      const double t = 0.5 * i / 20;
      const double e = heat_energy(p, t);
      if (i) CHECK(e < last_e);
      last_e = e;
      double sup = 0;
      for (int j = 0; j <= 300; ++j) sup = std::max(sup, std::abs(heat_solve(p, 1.5 * j / 300, t)));
      CHECK(sup <= last_sup + 1e-12);
      last_sup = sup;
    }
    CHECK(heat_solve(p, 0.0, 0.0) == doctest::Approx(0.0));
    CHECK(std::abs(heat_solve(p, 1.5, 0.0)) < 1e-12);
  }
}

TEST_CASE("cellar design") {
  const double year = 3600.0 * 24 * 365;
  const auto d = cellar_design({2e-3, year, 37.0});
  CHECK(std::abs(d.depth - 445) < 1);
  CHECK(std::abs(d.depth - std::sqrt(kPi * 2e-3 * year)) < 1e-9);
  CHECK(std::abs(d.damping - std::exp(-kPi)) < 1e-14);
  CHECK(std::abs(d.oscillation - 37 * std::exp(-kPi)) < 1e-10);
  CHECK(d.oscillation == doctest::Approx(1.60).epsilon(0.01));
  const auto hot = cellar_design({2e-3, year, 104.0});
  CHECK(std::abs(hot.oscillation - 104 * std::exp(-kPi)) < 1e-10);
  CHECK(hot.oscillation < 4.5);
  CHECK_THROWS_AS(cellar_design({-1.0, year, 37.0}), InvalidArgument);
}

TEST_CASE("disk: examples") {
  const auto cosine = PeriodicSignal::from_catalog(Waveform::cosine);
  for (double r : {0.0, 0.3, 0.9}) {
    for (double th : {0.0, 0.1, 0.65}) CHECK(std::abs(disk_dirichlet(cosine, r, th) - r * std::cos(kTwoPi * th)) < 1e-14);
  }
  const auto one = PeriodicSignal::from_catalog(Waveform::constant);
  CHECK(disk_dirichlet(one, 0.7, 0.2) == doctest::Approx(1.0).epsilon(1e-15));
  const auto sq = PeriodicSignal::from_catalog(Waveform::square);
  CHECK(std::abs(disk_dirichlet(sq, 0.0, 0.3)) < 1e-15);
  CHECK_THROWS_AS(disk_dirichlet(sq, 1.0, 0.3), InvalidArgument);
}

TEST_CASE("disk: series equals the Poisson integral") {
  const auto f = PeriodicSignal::from_unit_map([](double u) { return std::exp(std::cos(kTwoPi * u)) * std::sin(3 * kTwoPi * u + 1); });
  for (double r : {0.2, 0.6, 0.9}) {
    for (double th : {0.05, 0.5, 0.8}) {
      CHECK(std::abs(disk_dirichlet(f, r, th) - disk_poisson_integral(f, r, th)) < 1e-8);
    }
  }
}

TEST_CASE("disk: maximum principle and mean value property") {
  const auto shifted = PeriodicSignal::from_unit_map([](double u) { return u < 0.5 ? 2.0 : 0.0; });
  const DiskDirichlet solver(shifted, 0.99);
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 64; ++j) CHECK(solver(0.99 * i / 50, j / 64.0) >= -1e-10);
  }
  const DiskDirichlet sq(PeriodicSignal::from_catalog(Waveform::square), 0.95);
  const double x0 = 0.2, y0 = 0.1, rho = 0.3;
  const double avg = trapezoid_periodic(
      [&](double s) { return sq.at_point(x0 + rho * std::cos(kTwoPi * s), y0 + rho * std::sin(kTwoPi * s)); }, 0, 1, 512);
  CHECK(std::abs(avg - sq.at_point(x0, y0)) < 1e-6);
  CHECK(sq.terms() >= 16);
}

TEST_CASE("square: boundary limits and symmetry") {
  for (double x : {0.2, 0.5, 0.8}) CHECK(std::abs(square_dirichlet(x, 0.999, 2000) - 1) < 0.01);
  for (double x : {0.1, 0.3}) {
    for (double y : {0.2, 0.7}) CHECK(square_dirichlet(x, y, 500) == doctest::Approx(square_dirichlet(1 - x, y, 500)).epsilon(1e-12));
  }
  CHECK(std::isfinite(square_dirichlet(0.5, 0.999, 5000)));
  CHECK_THROWS_AS(square_dirichlet(0.5, 1.0, 100), InvalidArgument);
  CHECK_THROWS_AS(square_dirichlet(0.0, 0.5, 100), InvalidArgument);
}

TEST_CASE("square: finite difference agreement") {
  const double fd = oracle::laplace_square_center(256);
  CHECK(std::abs(square_dirichlet(0.5, 0.5, 200) - fd) < 1e-3);
  CHECK(square_dirichlet(0.5, 0.5, 200) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("square: corner behaves like the angular function") {
  std::vector<double> lr, le;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    const auto s = corner_asymptotic(r, kPi / 4);
    CHECK(s.angular == doctest::Approx(0.5));
    lr.push_back(std::log(r));
    le.push_back(std::log(std::abs(s.residual)));
  }
  const double slope = (le.back() - le.front()) / (lr.back() - lr.front());
  CHECK(std::abs(slope - 2) < 0.2);
}

TEST_CASE("membrane mode") {
  const auto zeros = j0_zeros(3);
  for (double lam : zeros) {
    const MembraneMode m{2.0, lam};
    for (double t : {0.0, 0.3, 1.7}) CHECK(std::abs(membrane_mode(m, 1.0, t)) < 1e-10);
    const double h = 1e-4;
    for (double r : {0.0, 0.4, 0.9}) {
      CHECK(std::abs((membrane_mode(m, r, h) - membrane_mode(m, r, -h)) / (2 * h)) < 1e-8);
    }
    const double e = 1e-3;
    double worst = 0;
    for (double r : {0.2, 0.5, 0.8}) {
      for (double t : {0.1, 0.6}) {
        auto u = [&](double rr, double tt) { return membrane_mode(m, rr, tt); };
        auto d2 = [](auto f, double h2) { return (-f(-2 * h2) + 16 * f(-h2) - 30 * f(0.0) + 16 * f(h2) - f(2 * h2)) / (12 * h2 * h2); };
        const double utt = d2([&](double s) { return u(r, t + s); }, e);
        const double urr = d2([&](double s) { return u(r + s, t); }, e);
        const double ur = (u(r - 2 * e, t) - 8 * u(r - e, t) + 8 * u(r + e, t) - u(r + 2 * e, t)) / (12 * e);
        worst = std::max(worst, std::abs(utt - m.elasticity * (urr + ur / r)));
      }
    }
    CHECK(worst < 1e-5);
  }
  CHECK_THROWS_AS((MembraneMode{1.0, 2.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((MembraneMode{0.0, zeros[0]}.validate()), InvalidArgument);
}
