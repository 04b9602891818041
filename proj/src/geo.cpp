#include "fourierlab/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourierlab/error.hpp"
#include "fourierlab/parallel.hpp"
#include "fourierlab/periodic.hpp"
#include "fourierlab/special.hpp"
#include "fourierlab/transforms.hpp"

namespace fourierlab {

double radon_forward(const PlanarDensity& density, double p, double phi, double half_length,
                     int nodes) {
  require(nodes >= 32, "radon_forward: need at least 32 nodes");
  require(std::isfinite(half_length) && half_length > 0.0, "radon_forward: half length must be positive");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double dt = 2.0 * half_length / nodes;
  CompensatedSum sum;
  for (int j = 0; j <= nodes; ++j) {
    const double t = -half_length + dt * j;
    const double w = (j == 0 || j == nodes) ? 0.5 : 1.0;
    sum.add(w * density(-s * t + c * p, c * t + s * p));
  }
  return sum.value() * dt;
}

void Sinogram::validate() const {
  require(p_count >= 4 && phi_count >= 3, "sinogram: need at least 4 p nodes and 3 angles");
  require(values.size() == static_cast<std::size_t>(p_count) * phi_count,
          "sinogram: value count does not match the grids");
}

Sinogram sinogram_forward(const PlanarDensity& density, int p_count, int phi_count, int nodes) {
  require(nodes >= 32, "sinogram_forward: need at least 32 nodes");
  Sinogram s{p_count, phi_count, {}};
  s.values.assign(static_cast<std::size_t>(p_count) * phi_count, 0.0);
  s.validate();
  // Gauss points only: no sample lands on the unit circle, where cut-off
  // densities jump
  const int panels = (nodes + 15) / 16;
  parallel_for(s.values.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx / phi_count);
    const int j = static_cast<int>(idx % phi_count);
    const double p = s.p(i);
    const double half = std::sqrt(std::max(0.0, 1.0 - p * p));
    if (half == 0.0) return;
    const double c = std::cos(s.phi(j));
    const double sn = std::sin(s.phi(j));
    s.values[idx] = gauss_legendre_integrate(
        [&](double t) { return density(-sn * t + c * p, c * t + sn * p); }, -half, half, 16, panels);
  });
  return s;
}

double RadonReconstruction::value(std::size_t i, double theta) const {
  require(i < rho.size(), "radon reconstruction: index out of range");
  double v = 0.0;
  for (const auto& m : modes) {
    const cplx c = m.values[i];
    if (m.mode == 0) {
      v += c.real();
    } else {
      v += 2.0 * (c * std::polar(1.0, m.mode * theta)).real();
    }
  }
  return v;
}

RadonReconstruction radon_invert(const Sinogram& s, const std::vector<double>& tau,
                                 const RadonInversionOptions& opt) {
  s.validate();
  require(!tau.empty(), "radon_invert: empty tau grid");
  require(opt.modes >= 0 && 2 * opt.modes + 1 <= s.phi_count,
          "radon_invert: too many modes for the angular grid");
  require(opt.gauss_points >= 2 && opt.panels >= 1, "radon_invert: bad quadrature settings");
  require(opt.amplification_limit >= 1.0, "radon_invert: amplification limit must be >= 1");
  double h = opt.step;
  if (h == 0.0) h = tau.size() > 1 ? std::abs(tau[1] - tau[0]) : 1e-3;
  require(h > 0.0, "radon_invert: difference step must be positive");
  for (double t : tau) {
    require(t > 0.0 && t < 1.0, "radon_invert: tau must lie in (0,1)");
    require(t - h > 0.0 && t + h <= 1.0, "radon_invert: tau +- step leaves (0,1]");
  }

  // Angular coefficients per p row.
  const int np = s.p_count;
  std::vector<std::vector<cplx>> rows(np);
  parallel_for(np, [&](std::size_t i) {
    std::vector<cplx> row(s.phi_count);
    for (int j = 0; j < s.phi_count; ++j) row[j] = s.at(static_cast<int>(i), j);
    rows[i] = dft_forward(row);
  });

  const QuadratureRule rule = gauss_legendre(opt.gauss_points);
  const double dp = 1.0 / (np - 1);
  RadonReconstruction out;
  out.rho = tau;
  out.modes.resize(opt.modes + 1);
  parallel_for(out.modes.size(), [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    std::vector<double> re(np), im(np);
    for (int i = 0; i < np; ++i) {
      re[i] = rows[i][k].real();
      im[i] = rows[i][k].imag();
    }
    const UniformCubicSpline sre(0.0, dp, re);
    const UniformCubicSpline sim(0.0, dp, im);
    // G_k(t) = int_0^{acosh(1/t)} R_k(t cosh u) cosh(k u) / cosh(u) du.
    auto inner = [&](double t) -> cplx {
      if (t >= 1.0) return {};
      const double top = std::acosh(1.0 / t);
      const double width = top / opt.panels;
      cplx sum{};
      for (int panel = 0; panel < opt.panels; ++panel) {
        const double mid = (panel + 0.5) * width;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
          const double u = mid + 0.5 * width * rule.nodes[q];
          const double p = t * std::cosh(u);
          const double w = 0.5 * width * rule.weights[q] * std::cosh(k * u) / std::cosh(u);
          sum += w * cplx{sre(p), sim(p)};
        }
      }
      return sum;
    };
    PolarCoefficients pc{k, tau, std::vector<cplx>(tau.size())};
    for (std::size_t i = 0; i < tau.size(); ++i) {
      // T_k(p/tau) peaks at cosh(k acosh(1/tau)); past the limit the mode is noise
      if (k > 0 && std::cosh(k * std::acosh(1.0 / (tau[i] - h))) > opt.amplification_limit) continue;
      const cplx d = (inner(tau[i] + h) - inner(tau[i] - h)) / (2.0 * h);
      pc.values[i] = -d / kPi;
    }
    out.modes[kk] = std::move(pc);
  });
  return out;
}

Point CurveFourier::at(double t) const {
  const double u = frac_part(t);
  cplx sx{}, sy{};
  for (int k = -kmax; k <= kmax; ++k) {
    const cplx e = std::polar(1.0, kTwoPi * frac_part(k * u));
    sx += x[k + kmax] * e;
    sy += y[k + kmax] * e;
  }
  return {sx.real(), sy.real()};
}

Point CurveFourier::velocity(double t) const {
  const double u = frac_part(t);
  cplx sx{}, sy{};
  for (int k = -kmax; k <= kmax; ++k) {
    const cplx e = cplx{0.0, kTwoPi * k} * std::polar(1.0, kTwoPi * frac_part(k * u));
    sx += x[k + kmax] * e;
    sy += y[k + kmax] * e;
  }
  return {sx.real(), sy.real()};
}

CurveFourier curve_fourier_fit(const std::vector<Point>& samples, int kmax) {
  require(kmax >= 0, "curve_fourier_fit: kmax must be >= 0");
  require(samples.size() >= static_cast<std::size_t>(2 * kmax + 1),
          "curve_fourier_fit: need at least 2K+1 samples");
  const std::size_t m = samples.size();
  std::vector<cplx> xs(m), ys(m);
  for (std::size_t j = 0; j < m; ++j) {
    xs[j] = samples[j].first;
    ys[j] = samples[j].second;
  }
  const auto plan = DftPlan::automatic(m);
  const auto cx = fft_gauss(xs, plan);
  const auto cy = fft_gauss(ys, plan);
  CurveFourier c;
  c.kmax = kmax;
  for (long k = -kmax; k <= kmax; ++k) {
    const std::size_t idx = static_cast<std::size_t>((k % static_cast<long>(m) + static_cast<long>(m)) %
                                                     static_cast<long>(m));
    c.x.push_back(cx[idx]);
    c.y.push_back(cy[idx]);
  }
  return c;
}

CurveGeometry geometry(const CurveFourier& curve) {
  const int nodes = std::max(4096, 16 * (curve.kmax + 1));
  const double length = trapezoid_periodic(
      [&](double t) {
        const Point v = curve.velocity(t);
        return std::hypot(v.first, v.second);
      },
      0.0, 1.0, nodes);
  cplx acc{};
  for (int k = -curve.kmax; k <= curve.kmax; ++k) {
    const cplx xk = curve.x[k + curve.kmax];
    const cplx yk = curve.y[k + curve.kmax];
    acc += static_cast<double>(k) * (std::conj(xk) * yk - xk * std::conj(yk));
  }
  const double area = (cplx{0.0, kPi} * acc).real();
  return {length, area, length * length - 4.0 * kPi * area};
}

double crofton_length(const ParametricCurve& curve, int p_nodes, int phi_nodes, int samples) {
  require(static_cast<bool>(curve.at), "crofton_length: empty curve");
  require(p_nodes >= 1 && phi_nodes >= 1 && samples >= 3, "crofton_length: grids too small");
  std::vector<Point> pts(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = curve.closed ? static_cast<double>(i) / samples
                                  : static_cast<double>(i) / (samples - 1);
    pts[i] = curve.at(t);
  }
  const int segments = curve.closed ? samples : samples - 1;
  double polygon = 0.0;
  double radius = 0.0;
  for (int i = 0; i < samples; ++i) radius = std::max(radius, std::hypot(pts[i].first, pts[i].second));
  for (int i = 0; i < segments; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % samples];
    polygon += std::hypot(b.first - a.first, b.second - a.second);
  }
  if (polygon == 0.0) throw InvalidArgument("crofton_length: degenerate curve");

  const double dp = radius / p_nodes;
  const double dphi = kTwoPi / phi_nodes;
  std::vector<double> per_angle(phi_nodes);
  parallel_for(phi_nodes, [&](std::size_t b) {
    const double phi = (b + 0.5) * dphi;
    const double c = std::cos(phi), s = std::sin(phi);
    std::vector<double> proj(samples);
    for (int i = 0; i < samples; ++i) proj[i] = c * pts[i].first + s * pts[i].second;
    std::vector<long> diff(p_nodes + 1, 0);
    for (int i = 0; i < segments; ++i) {
      const double lo = std::min(proj[i], proj[(i + 1) % samples]);
      const double hi = std::max(proj[i], proj[(i + 1) % samples]);
      // Midpoints p_a = (a + 1/2) dp with lo < p_a <= hi.
      const long first = std::max(0L, static_cast<long>(std::floor(lo / dp - 0.5)) + 1);
      const long last = std::min<long>(p_nodes - 1, static_cast<long>(std::floor(hi / dp - 0.5)));
      if (first > last) continue;
      diff[first] += 1;
      diff[last + 1] -= 1;
    }
    long running = 0;
    long total = 0;
    for (int a = 0; a < p_nodes; ++a) {
      running += diff[a];
      total += running;
    }
    per_angle[b] = static_cast<double>(total);
  });
  CompensatedSum sum;
  for (double v : per_angle) sum.add(v);
  return 0.5 * sum.value() * dp * dphi;
}

double crofton_length(const CurveFourier& curve, int p_nodes, int phi_nodes, int samples) {
  return crofton_length(ParametricCurve{[&curve](double t) { return curve.at(t); }, true}, p_nodes,
                        phi_nodes, samples);
}

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

}  // namespace

BuffonResult buffon_sim(double needle, std::uint64_t tosses, std::uint64_t seed) {
  require(std::isfinite(needle) && needle > 0.0 && needle <= 1.0, "buffon: needle length must lie in (0,1]");
  require(tosses >= 1, "buffon: need at least one toss");
  const std::uint64_t chunks = (tosses + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    CounterRng rng(seed, c);
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(tosses, begin + kChunk);
    std::uint64_t h = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double y = 0.5 * rng.uniform();
      const double theta = 0.5 * kPi * rng.uniform();
      if (y <= 0.5 * needle * std::sin(theta)) ++h;
    }
    hits[c] = h;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double n = static_cast<double>(tosses);
  const double f = static_cast<double>(total) / n;
  return {f, 2.0 * needle / kPi, std::sqrt(f * (1.0 - f) / n), total, tosses};
}

EquidistributionReport weyl_count(double gamma, double a, double b, std::uint64_t trials) {
  require(std::isfinite(gamma), "weyl_count: gamma must be finite");
  require(a >= 0.0 && b <= 1.0, "weyl_count: interval must lie in [0,1]");
  require(a <= b, "weyl_count: need a <= b");
  require(trials >= 1, "weyl_count: need K >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const double u = frac_part(gamma * static_cast<double>(k));
    if (u >= a && u <= b) ++count;
  }
  return {gamma, a, b, trials, count, static_cast<double>(count) / static_cast<double>(trials)};
}

TimeAverage ergodic_average(const std::vector<int>& k, const std::vector<double>& omega,
                            const std::vector<double>& start, double horizon, int nodes) {
  require(!k.empty() && k.size() == omega.size() && k.size() == start.size(),
          "ergodic_average: k, omega and start must have equal nonzero length");
  require(horizon > 0.0 && nodes >= 2, "ergodic_average: need T > 0 and at least 2 nodes");
  double kp = 0.0, kw = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    kp += k[i] * start[i];
    kw += k[i] * omega[i];
  }
  const double dt = horizon / nodes;
  CompensatedSum re, im;
  for (int j = 0; j <= nodes; ++j) {
    const double w = (j == 0 || j == nodes) ? 0.5 : 1.0;
    const double phase = kTwoPi * (kp + kw * dt * j);
    re.add(w * std::cos(phase));
    im.add(w * std::sin(phase));
  }
  const cplx value{re.value() * dt / horizon, im.value() * dt / horizon};
  const double bound = kw == 0.0 ? std::numeric_limits<double>::infinity()
                                 : 2.0 / (kTwoPi * std::abs(kw) * horizon);
  return {value, bound};
}

CltResult circle_clt(CltSampler sampler, int n, std::uint64_t draws, std::uint64_t seed) {
  require(n >= 1, "circle_clt: need N >= 1");
  require(draws >= 1000, "circle_clt: need at least 1000 draws");
  constexpr std::uint64_t kDrawChunk = 4096;
  const std::uint64_t chunks = (draws + kDrawChunk - 1) / kDrawChunk;
  std::vector<double> z(draws);
  const double root3 = std::sqrt(3.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  parallel_for(chunks, [&](std::size_t c) {
    CounterRng rng(seed, c);
    const std::uint64_t begin = c * kDrawChunk;
    const std::uint64_t end = std::min(draws, begin + kDrawChunk);
    for (std::uint64_t d = begin; d < end; ++d) {
      double sum = 0.0;
      for (int j = 0; j < n; ++j) {
        const double u = rng.uniform();
        sum += sampler == CltSampler::uniform ? (2.0 * u - 1.0) * root3 : (u < 0.5 ? -1.0 : 1.0);
      }
      z[d] = frac_part(sum * scale);
    }
  });
  std::sort(z.begin(), z.end());
  const WrappedGaussian w;
  const double nd = static_cast<double>(draws);
  double above = 0.0;
  double below = 0.0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double cdf = w.cdf(z[i]);
    above = std::max(above, static_cast<double>(i + 1) / nd - cdf);
    below = std::max(below, cdf - static_cast<double>(i) / nd);
  }
  return {std::move(z), above + below, std::max(above, below)};
}

DigitMoments binary_digit_moments() {
  DigitMoments m{0.0, 0.0};
  for (int omega = 0; omega <= 1; ++omega) {
    const double x = omega / 2.0;
    m.mean += 0.5 * x;
    m.second += 0.5 * x * x;
  }
  return m;
}

}  // namespace fourierlab
