// Acceptance checks. One line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fourierlab/geo.hpp"
#include "fourierlab/kernels.hpp"
#include "fourierlab/pde.hpp"
#include "fourierlab/periodic.hpp"
#include "fourierlab/signal.hpp"
#include "fourierlab/special.hpp"
#include "fourierlab/summation.hpp"
#include "fourierlab/transforms.hpp"
#include "oracles/oracles.hpp"

using namespace fourierlab;
using quad = boost::multiprecision::cpp_bin_float_quad;

namespace {

// tolerances
constexpr double kExactTol = 1e-15;
constexpr double kKinkQuadTol = 1e-6;  // trapezoid, M = 4096, kinks at nodes
constexpr double kKernelTol = 1e-10;
constexpr double kGibbsOvershoot = 0.17898, kGibbsTol = 0.005;
constexpr double kLambda = 0.08948987, kLambdaTol = 1e-7;
constexpr double kEnergyDefectTol = 1e-4, kBesselIneqTol = 1e-12;
constexpr double kRoundTripTol = 1e-12, kDftFftTol = 1e-11, kOpRatio = 50;
constexpr double kHeatModeTol = 1e-14, kHeatFdTol = 2e-4;
constexpr double kCellarDepth = 445, kCellarDepthTol = 1, kCellarTol = 1e-10;
constexpr double kMeanValueTol = 1e-6, kLaplaceFdTol = 1e-3, kCornerSlope = 2, kCornerSlopeTol = 0.2;
constexpr double kRadonForwardTol = 1e-6, kRadonInverseTol = 1e-2;
constexpr double kCroftonCircleTol = 0.01, kCroftonSegmentTol = 0.015, kBuffonSigmas = 3;
constexpr double kWeylTol = 1e-3;
constexpr double kCltTol = 0.02, kWrappedTol = 1e-12;
constexpr double kZeroTol = 1e-10, kOdeTol = 1e-8, kGeneratingTol = 1e-10;
constexpr double kEdgeJumpTol = 0.05, kEdgeQuietTol = 0.05;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void coefficients(Outcome& o) {
  const WaveformCatalogEntry sq(Waveform::square), sa(Waveform::sawtooth), tr(Waveform::triangular),
      pa(Waveform::parabola_x1mx);
  double exact = 0;
  for (long k = -200; k <= 200; ++k) {
    const double kd = static_cast<double>(k);
    const bool odd = k % 2 != 0;
    const cplx s = odd ? cplx(0, -2 / (kPi * kd)) : cplx{};
    const cplx w = k ? cplx(0, 1 / (kTwoPi * kd)) : cplx{};
    const cplx t = odd ? cplx(-1 / (kPi * kPi * kd * kd), 0) : cplx{};
    const cplx p = k ? cplx(-1 / (2 * kPi * kPi * kd * kd), 0) : cplx(1.0 / 6.0, 0);
    exact = std::max({exact, std::abs(coeff_exact(sq, k) - s), std::abs(coeff_exact(sa, k) - w),
                      std::abs(coeff_exact(pa, k) - p)});
    if (k) exact = std::max(exact, std::abs(coeff_exact(tr, k) - t));
  }
  o.check(exact <= kExactTol, "closed forms");

  auto sampled = [](const WaveformCatalogEntry& e) {
    return PeriodicSignal::from_unit_map([e](double u) { return e.value(u); });
  };
  // jumps: error shrinks like 1/M
  double worst_rate = 0;
  for (const auto* e : {&sq, &sa}) {
    const auto f = sampled(*e);
    // a jump sitting on a node costs sigma/2 per node weight 1/M
    double half_jumps = 0;
    for (const auto& j : e->jumps()) half_jumps += std::abs(j.size) / 2;
    for (long k : {1, 3, 5}) {
      const double e1 = std::abs(coeff_numeric(f, k, 2048) - coeff_exact(*e, k));
      const double e2 = std::abs(coeff_numeric(f, k, 4096) - coeff_exact(*e, k));
      worst_rate = std::max(worst_rate, std::abs(e2 / e1 - 0.5));
      o.check(e2 * 4096 < 1.01 * half_jumps, "jump quadrature size");
    }
  }
  o.check(worst_rate < 0.05, "1/M rate");
  double kink = 0;
  for (const auto* e : {&tr, &pa}) {
    const auto f = sampled(*e);
    for (long k = -10; k <= 10; ++k) kink = std::max(kink, std::abs(coeff_numeric(f, k, 4096) - coeff_exact(*e, k)));
  }
  o.check(kink < kKinkQuadTol, "kink quadrature");
  o.detail << "closed-form diff=" << exact << " rate dev=" << worst_rate << " kink quad err=" << kink;
}

void kernels(Outcome& o) {
  auto integral = [](const std::function<double(double)>& f) { return trapezoid_periodic(f, 0, 1, 4096); };
  double worst = 0;
  double fejer_min = 1e300;
  for (int n = 0; n <= 64; ++n) {
    const auto d = KernelSpec::dirichlet(n);
    worst = std::max(worst, std::abs(integral([&d](double x) { return kernel_eval(d, x); }) - 1));
    const double sq = integral([&d](double x) {
      const double v = kernel_eval(d, x);
      return v * v;
    });
    worst = std::max(worst, std::abs(sq - (2 * n + 1)) / (2 * n + 1));
    worst = std::max(worst, std::abs(kernel_eval(d, 0.0) - (2 * n + 1)));
    if (n == 0) continue;
    const auto f = KernelSpec::fejer(n);
    worst = std::max(worst, std::abs(integral([&f](double x) { return kernel_eval(f, x); }) - 1));
    for (int j = 0; j < 101; ++j) {
      const double x = j / 101.0;
      const double v = kernel_eval(f, x);
      fejer_min = std::min(fejer_min, v);
      double avg = 0;
      for (int k = 0; k < n; ++k) avg += kernel_eval(KernelSpec::dirichlet(k), x);
      worst = std::max(worst, std::abs(v - avg / n));
    }
  }
  for (double r : {0.1, 0.5, 0.9}) {
    const auto p = KernelSpec::poisson(r);
    worst = std::max(worst, std::abs(integral([&p](double x) { return kernel_eval(p, x); }) - 1));
  }
  o.check(worst < kKernelTol, "identities");
  o.check(fejer_min >= -kKernelTol, "Fejer positivity");
  o.detail << "max identity err=" << worst << " min F_N=" << fejer_min;
}

void gibbs(Outcome& o) {
  const auto g = gibbs_measure(WaveformCatalogEntry(Waveform::square), 200);
  const double lambda = gibbs_constants().lambda;
  o.check(std::abs(g.measured_overshoot - kGibbsOvershoot) < kGibbsTol, "overshoot");
  o.check(std::abs(g.probe_value - (1 + kGibbsOvershoot)) < kGibbsTol, "probe");
  o.check(std::abs(lambda - kLambda) < kLambdaTol, "lambda");
  o.detail.precision(10);
  o.detail << "overshoot=" << g.measured_overshoot << " probe=" << g.probe_value << " lambda=" << lambda;
}

void parseval(Outcome& o) {
  const WaveformCatalogEntry sa(Waveform::sawtooth);
  const auto rep = parseval_report(coefficient_table(sa, 10000), PeriodicSignal::from_catalog(sa));
  const double defect = 1.0 / 12.0 - rep.lhs;
  o.check(std::abs(defect) < kEnergyDefectTol, "sawtooth energy");
  // random trigonometric polynomials, tables cut at random orders
  std::mt19937_64 gen(12);
  std::normal_distribution<double> nd;
  double most_negative = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 1 + static_cast<int>(gen() % 30);
    std::vector<double> a(degree + 1), b(degree + 1);
    for (int k = 0; k <= degree; ++k) {
      a[k] = nd(gen);
      b[k] = k ? nd(gen) : 0.0;
    }
    auto f = PeriodicSignal::from_unit_map([a, b](double x) {
      double s = a[0] / 2;
      for (std::size_t k = 1; k < a.size(); ++k) s += a[k] * std::cos(kTwoPi * k * x) + b[k] * std::sin(kTwoPi * k * x);
      return s;
    });
    const int kmax = static_cast<int>(gen() % (degree + 6));
    const auto r = parseval_report(coefficient_table(f, kmax), f);
    most_negative = std::min(most_negative, r.defect / std::max(1.0, r.rhs));
  }
  o.check(most_negative >= -kBesselIneqTol, "Bessel inequality");
  o.detail << "sawtooth defect=" << defect << " worst Bessel defect=" << most_negative;
}

void dft(Outcome& o) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd;
  auto random = [&](std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& c : v) c = {nd(gen), nd(gen)};
    return v;
  };
  const auto f = random(4096);
  const auto back = dft_inverse(fft_gauss(f, DftPlan::automatic(4096)));
  double round = 0;
  for (std::size_t j = 0; j < f.size(); ++j) round = std::max(round, std::abs(back[j] - f[j]));
  o.check(round < kRoundTripTol, "round trip");
  double agree = 0;
  for (std::size_t n : {12u, 60u, 1024u}) {
    const auto g = random(n);
    const auto a = dft_forward(g);
    const auto b = fft_gauss(g, DftPlan::automatic(n));
    for (std::size_t h = 0; h < n; ++h) agree = std::max(agree, std::abs(a[h] - b[h]));
  }
  o.check(agree < kDftFftTol, "dft vs fft");
  OpCounter direct, fast;
  const auto g = random(1024);
  dft_forward(g, &direct);
  fft_gauss(g, DftPlan::automatic(1024), &fast);
  const double ratio = static_cast<double>(direct.complex_mults) / static_cast<double>(fast.complex_mults);
  o.check(ratio >= kOpRatio, "op ratio");
  o.detail << "round trip=" << round << " dft/fft diff=" << agree << " op ratio=" << ratio << " ("
           << direct.complex_mults << "/" << fast.complex_mults << ")";
}

void constants(Outcome& o) {
  const double z2 = std::abs(zeta2_partial(1000000) - kPi * kPi / 6);
  const double z4 = std::abs(zeta4_partial(10000) - std::pow(kPi, 4) / 90);
  const double w = std::abs(wallis_partial(1000) - kPi / 2);
  const double s = std::abs(stirling_ratio(20) - 1);
  o.check(z2 < 2e-6, "zeta(2)");
  o.check(z4 < 4e-12, "zeta(4)");
  o.check(w < 1e-3, "Wallis");
  o.check(s < 0.005, "Stirling");
  o.detail << "zeta2 err=" << z2 << " zeta4 err=" << z4 << " wallis err=" << w << " stirling dev=" << s;
}

void heat(Outcome& o) {
  const HeatProblem single{1.0, {1.0}, 1.0};
  double mode = 0;
  for (double x : {0.1, 0.5, 0.77}) {
    for (double t : {0.0, 0.01, 0.3, 1.0}) {
      mode = std::max(mode, std::abs(heat_solve(single, x, t) - std::exp(-kPi * kPi * t) * std::sin(kPi * x)));
    }
  }
  o.check(mode < kHeatModeTol, "single mode");
  auto f = [](double x) { return x * (1 - x); };
  const auto p = heat_problem(f, 1.0, 0.1, 200);
  double fd = 0;
  for (double x : {0.25, 0.5}) {
    for (double t : {0.01, 0.05}) fd = std::max(fd, std::abs(heat_solve(p, x, t) - oracle::heat_crank_nicolson(f, 1.0, x, t, 400, 400)));
  }
  o.check(fd < kHeatFdTol, "Crank-Nicolson");
  std::mt19937_64 gen(21);
  std::normal_distribution<double> nd;
  int monotone = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> b(12);
    for (auto& v : b) v = nd(gen);
    const HeatProblem q{1.5, b, 0.5};
    bool ok = true;
    for (int i = 1; i <= 50; ++i) ok = ok && heat_energy(q, 0.01 * i) < heat_energy(q, 0.01 * (i - 1));
    monotone += ok;
  }
  o.check(monotone == 10, "energy decay");
  o.detail << "single mode err=" << mode << " fd diff=" << fd << " monotone=" << monotone << "/10";
}

void cellar(Outcome& o) {
  const double year = 3600.0 * 24 * 365;
  const auto cool = cellar_design({2e-3, year, 37.0});
  const auto hot = cellar_design({2e-3, year, 104.0});
  const double e37 = std::abs(cool.oscillation - 37 * std::exp(-kPi));
  const double e104 = std::abs(hot.oscillation - 104 * std::exp(-kPi));
  o.check(std::abs(cool.depth - kCellarDepth) < kCellarDepthTol, "depth");
  o.check(e37 < kCellarTol && e104 < kCellarTol, "oscillation");
  o.detail << "depth=" << cool.depth << " cm osc37=" << cool.oscillation << " osc104=" << hot.oscillation;
}

void dirichlet(Outcome& o) {
  const DiskDirichlet disk(PeriodicSignal::from_catalog(Waveform::square), 0.95);
  double mv = 0;
  for (auto [x0, y0, rho] : {std::tuple{0.2, 0.1, 0.3}, std::tuple{-0.4, 0.3, 0.2}, std::tuple{0.0, 0.0, 0.9}}) {
    const double avg = trapezoid_periodic(
        [&](double s) { return disk.at_point(x0 + rho * std::cos(kTwoPi * s), y0 + rho * std::sin(kTwoPi * s)); }, 0, 1, 1024);
    mv = std::max(mv, std::abs(avg - disk.at_point(x0, y0)));
  }
  o.check(mv < kMeanValueTol, "mean value");
  const double series = square_dirichlet(0.5, 0.5, 200);
  const double fd = oracle::laplace_square_center(256);
  o.check(std::abs(series - fd) < kLaplaceFdTol, "FD Laplace");
  std::vector<double> lr, le;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    lr.push_back(std::log(r));
    le.push_back(std::log(std::abs(corner_asymptotic(r, kPi / 4).residual)));
  }
  const double slope = (le.back() - le.front()) / (lr.back() - lr.front());
  o.check(std::abs(slope - kCornerSlope) < kCornerSlopeTol, "corner slope");
  o.detail << "mean value err=" << mv << " center series=" << series << " fd=" << fd << " corner slope=" << slope;
}

void radon(Outcome& o) {
  auto gauss = [](double x, double y) { return std::exp(-x * x - y * y); };
  double fwd = 0;
  for (double p : {0.0, 0.3, 1.1, 2.5}) {
    for (double phi : {0.0, 1.0, 4.0}) fwd = std::max(fwd, std::abs(radon_forward(gauss, p, phi, 6.0) - std::sqrt(kPi) * std::exp(-p * p)));
  }
  o.check(fwd < kRadonForwardTol, "forward");
  auto phantom = [](double x, double y) {
    const double r2 = x * x + y * y;
    return r2 < 1 ? 1 - r2 : 0.0;
  };
  std::vector<double> tau;
  for (int i = 0; i <= 70; ++i) tau.push_back(0.1 + 0.7 * i / 70);
  const auto rec = radon_invert(sinogram_forward(phantom, 201, 32), tau);
  double inv = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    for (double th : {0.0, 1.0, 2.5, 5.0}) inv = std::max(inv, std::abs(rec.value(i, th) - (1 - tau[i] * tau[i])));
  }
  o.check(inv < kRadonInverseTol, "inversion");
  o.detail << "forward err=" << fwd << " inversion sup err=" << inv;
}

void integral_geometry(Outcome& o) {
  const ParametricCurve circle{[](double t) { return Point{std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }, true};
  const ParametricCurve seg{[](double t) { return Point{0.7 * t - 0.35, 0.1}; }, false};
  const double c = crofton_length(circle) / kTwoPi - 1;
  const double s = crofton_length(seg) / 0.7 - 1;
  const auto b = buffon_sim(1.0, 1000000, 2024);
  const double sigmas = std::abs(b.fraction - 2 / kPi) / b.stderr_;
  o.check(std::abs(c) < kCroftonCircleTol, "circle");
  o.check(std::abs(s) < kCroftonSegmentTol, "segment");
  o.check(sigmas < kBuffonSigmas, "Buffon");
  o.detail << "circle rel err=" << c << " segment rel err=" << s << " buffon=" << b.fraction << " (" << sigmas << " sigma)";
}

void weyl(Outcome& o) {
  double worst = 0;
  for (auto [a, b] : {std::pair{0.25, 0.5}, std::pair{0.0, 0.1}, std::pair{0.3, 0.95}}) {
    const auto r = weyl_count(std::sqrt(2.0), a, b, 1000000);
    worst = std::max(worst, std::abs(r.ratio - (b - a)));
  }
  o.check(worst < kWeylTol, "ratios");
  o.detail << "worst ratio err=" << worst;
}

void clt(Outcome& o) {
  const auto r = circle_clt(CltSampler::uniform, 64, 100000, 7);
  o.check(r.distance < kCltTol, "distance");
  const WrappedGaussian w;
  double dual = 0;
  for (int j = 0; j < 200; ++j) dual = std::max(dual, std::abs(w.pdf(j / 200.0) - w.pdf_frequency(j / 200.0)));
  o.check(dual < kWrappedTol, "dual representations");
  const double w1 = trapezoid_periodic([&w](double x) { return w.pdf(x) * std::cos(kTwoPi * x); }, 0, 1, 256);
  const double c1 = std::abs(w1 - std::exp(-2 * kPi * kPi));
  o.check(c1 < kWrappedTol && std::abs(WrappedGaussian::coefficient(1) - std::exp(-2 * kPi * kPi)) < kWrappedTol, "W_1");
  o.detail << "distance=" << r.distance << " dual diff=" << dual << " W_1 err=" << c1;
}

double ode_residual(int k, double x, double h) {
  const int terms = bessel_truncation(k, x + 2 * h) + 30;
  const quad xq = x, hq = h;
  auto j = [k, terms, &xq, &hq](int step) { return bessel_j_series<quad>(k, xq + step * hq, terms); };
  const quad f0 = j(0), fp1 = j(1), fm1 = j(-1), fp2 = j(2), fm2 = j(-2);
  const quad d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * hq);
  const quad d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * hq * hq);
  return static_cast<double>(xq * xq * d2 + xq * d1 + (xq * xq - k * k) * f0);
}

void bessel(Outcome& o) {
  const auto z = j0_zeros(3);
  double zero_err = 0;
  bool bracketed = z.size() == 3;
  for (int m = 0; m < 3 && bracketed; ++m) {
    // sign change of J_0 between m pi and (m+1) pi
    bracketed = bessel_j(0, m * kPi) * bessel_j(0, (m + 1) * kPi) < 0 && z[m] > m * kPi && z[m] < (m + 1) * kPi;
    zero_err = std::max(zero_err, std::abs(z[m] - oracle::j0_zero(m + 1)));
  }
  o.check(bracketed, "brackets");
  o.check(zero_err < kZeroTol, "zeros");
  double ode = 0;
  for (int k : {0, 1, 2, 3}) {
    for (int i = 1; i <= 50; ++i) ode = std::max(ode, std::abs(ode_residual(k, 0.2 * i, 1e-4)));
  }
  o.check(ode < kOdeTol, "ODE");
  double gen = 0;
  for (double x : {0.5, 1.0, 3.0}) {
    for (double theta : {0.0, 0.4, 1.3, 2.9}) {
      const cplx t = std::polar(1.0, theta);
      cplx s{};
      for (int k = -30; k <= 30; ++k) s += bessel_j(k, x) * std::pow(t, k);
      gen = std::max(gen, std::abs(s - std::exp(x / 2 * (t - 1.0 / t))));
    }
  }
  o.check(gen < kGeneratingTol, "generating function");
  o.detail << "zero err=" << zero_err << " ode residual=" << ode << " generating err=" << gen;
}

void edges(Outcome& o) {
  // upward jump of 2 at 0.3, downward at 0.8
  const auto step = coefficient_algebra(Translate{-0.3}, coefficient_table(WaveformCatalogEntry(Waveform::square), 400)).table;
  const double up = edge_value(step, 400, 0.3) - 2;
  const double down = edge_value(step, 400, 0.8) + 2;
  o.check(std::abs(up) < kEdgeJumpTol && std::abs(down) < kEdgeJumpTol, "jump sizes");
  double quiet = 0;
  for (const auto& [x, e] : edge_detect(step, 400, 2000)) {
    if (std::abs(x - 0.3) > 0.05 && std::abs(x - 0.8) > 0.05) quiet = std::max(quiet, std::abs(e));
  }
  auto smooth = PeriodicSignal::from_unit_map([](double x) { return std::exp(std::sin(kTwoPi * x)); });
  double smooth_sup = 0;
  for (const auto& [x, e] : edge_detect(coefficient_table(smooth, 400), 400, 2000)) smooth_sup = std::max(smooth_sup, std::abs(e));
  o.check(quiet < kEdgeQuietTol, "away from jumps");
  o.check(smooth_sup < kEdgeQuietTol, "smooth signal");
  o.detail << "jump errs=" << up << "," << down << " sup away=" << quiet << " smooth sup=" << smooth_sup;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"coefficient golden set", coefficients},
      {"kernel identities", kernels},
      {"Gibbs", gibbs},
      {"Parseval and Bessel", parseval},
      {"DFT/FFT", dft},
      {"constants", constants},
      {"heat", heat},
      {"cellar", cellar},
      {"disk/square Dirichlet", dirichlet},
      {"Radon", radon},
      {"integral geometry", integral_geometry},
      {"Weyl", weyl},
      {"circle CLT", clt},
      {"Bessel", bessel},
      {"edge detector", edges},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
