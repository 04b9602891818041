#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fourierlab/numeric.hpp"
#include "fourierlab/rng.hpp"

namespace fourierlab {

using PlanarDensity = std::function<double(double, double)>;
using Point = std::pair<double, double>;

// ---------------------------------------------------------------------------
// Radon transform

/// Trapezoid of int_{-L}^{L} f(r(t)) dt along r(t) = (-sin phi, cos phi) t + (cos phi, sin phi) p
/// with M intervals (M >= 32).
double radon_forward(const PlanarDensity& density, double p, double phi, double half_length = 1.0,
                     int nodes = 2048);

/// R(p_i, phi_j) on p_i = i/(np-1) in [0,1] and phi_j = 2 pi j / nphi.
struct Sinogram {
  int p_count = 0;
  int phi_count = 0;
  std::vector<double> values;  ///< row-major, values[i * phi_count + j]

  double p(int i) const { return static_cast<double>(i) / (p_count - 1); }
  double phi(int j) const { return kTwoPi * j / phi_count; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * phi_count + j]; }
  void validate() const;
};

/// Sinogram of a density supported in the closed unit disk: each line is
/// integrated over its chord by composite 16-point Gauss-Legendre with about
/// `nodes` points.
Sinogram sinogram_forward(const PlanarDensity& density, int p_count, int phi_count, int nodes = 2048);

/// Radial coefficients F_k(rho) of the density F(rho, theta) = sum_k F_k(rho) e^{i k theta}.
struct PolarCoefficients {
  int mode;
  std::vector<double> rho;
  std::vector<cplx> values;
};

struct RadonReconstruction {
  std::vector<double> rho;
  std::vector<PolarCoefficients> modes;  ///< k = 0..K; negative modes by conjugation

  /// F(rho_i, theta), theta in radians.
  double value(std::size_t i, double theta) const;
};

struct RadonInversionOptions {
  int modes = 8;             ///< highest angular mode kept
  int gauss_points = 32;     ///< per panel, inner integral
  int panels = 16;
  double step = 0.0;         ///< tau difference step; 0 = grid spacing (or 1e-3 for one point)
  /// Mode k > 0 is dropped at tau when cosh(k acosh(1/(tau - step))) exceeds this.
  double amplification_limit = 1e8;
};

/// Inverts a sinogram of a density supported in the unit disk at radii tau in (0,1).
/// Per mode: angular DFT of the sinogram, the inner integral after p = tau cosh u,
/// and -(1/pi) d/dtau by central differences.
RadonReconstruction radon_invert(const Sinogram& sinogram, const std::vector<double>& tau,
                                 const RadonInversionOptions& options = {});

// ---------------------------------------------------------------------------
// Curves

/// Fourier coefficients of a closed curve on the parameter period [0,1).
struct CurveFourier {
  int kmax = 0;
  std::vector<cplx> x;  ///< x_k for k = -K..K
  std::vector<cplx> y;

  Point at(double t) const;
  /// gamma'(t).
  Point velocity(double t) const;
};

struct CurveGeometry {
  double length;
  double area;
  double defect;  ///< L^2 - 4 pi A
};

/// Coefficients from M >= 2K+1 samples at t_j = j/M.
CurveFourier curve_fourier_fit(const std::vector<Point>& samples, int kmax);

/// Length by the periodic trapezoid rule on |gamma'|; area A = pi i sum k (conj(x_k) y_k - x_k conj(y_k)).
CurveGeometry geometry(const CurveFourier& curve);

struct ParametricCurve {
  std::function<Point(double)> at;  ///< t in [0,1]
  bool closed = true;
};

/// (1/2) sum over a (p, phi) midpoint grid of the intersection counts of the
/// line {(cos phi, sin phi) . X = p} with the curve, p in [0, max|gamma|].
/// Intersections are sign changes of p - (cos phi, sin phi) . gamma(t) on 4096 samples.
double crofton_length(const ParametricCurve& curve, int p_nodes = 512, int phi_nodes = 512,
                      int samples = 4096);
double crofton_length(const CurveFourier& curve, int p_nodes = 512, int phi_nodes = 512,
                      int samples = 4096);

// ---------------------------------------------------------------------------
// Monte Carlo and equidistribution

struct BuffonResult {
  double fraction;
  double target;  ///< 2 l / pi
  double stderr_;
  std::uint64_t hits;
  std::uint64_t tosses;
};

/// Needle of length l in (0,1] on lines spaced 1 apart.
BuffonResult buffon_sim(double needle, std::uint64_t tosses, std::uint64_t seed);

struct EquidistributionReport {
  double gamma;
  double a;
  double b;
  std::uint64_t trials;
  std::uint64_t count;
  double ratio;
};

/// Number of k in [0,K) with {gamma k} in [a,b].
EquidistributionReport weyl_count(double gamma, double a, double b, std::uint64_t trials);

struct TimeAverage {
  cplx value;
  double bound;  ///< 2 / (2 pi |k.w| T)
};

/// (1/T) int_0^T e^{2 pi i k.(p + w t)} dt by the trapezoid rule.
TimeAverage ergodic_average(const std::vector<int>& k, const std::vector<double>& omega,
                            const std::vector<double>& start, double horizon, int nodes = 100000);

enum class CltSampler {
  uniform,   ///< uniform on [-sqrt 3, sqrt 3]
  digit,     ///< normalized fair binary digit, +-1
};

struct CltResult {
  std::vector<double> sorted;  ///< Z_N mod 1 per draw, ascending
  /// sup over arcs J of the circle of |P(Z_N in J) - int_J W|, that is
  /// max(F - G) - min(F - G) for the CDFs F, G from any base point.
  double distance;
  /// sup |F - G| with both CDFs started at 0.
  double ks_distance;
};

/// Z_N = (X_1 + ... + X_N)/sqrt(N) mod 1 over `draws` draws (>= 1000).
CltResult circle_clt(CltSampler sampler, int n, std::uint64_t draws, std::uint64_t seed);

struct DigitMoments {
  double mean;
  double second;
};

/// Moments of X = omega/2 for a fair digit omega in {0,1}.
DigitMoments binary_digit_moments();

}  // namespace fourierlab
