#include "fourierlab/numeric.hpp"

#include <cmath>
#include <cstdlib>

#include "fourierlab/error.hpp"

namespace fourierlab {

cplx unit_root(long long m, long long n) {
  long long r = m % n;
  if (r < 0) r += n;
  if (r == 0) return {1.0, 0.0};
  // Reduce to the first half-turn and use symmetry so that r and n-r are exact conjugates.
  if (2 * r > n) return std::conj(unit_root(n - r, n));
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

double trapezoid_periodic(const RealMap& f, double a, double period, int nodes) {
  require(nodes >= 1, "trapezoid_periodic: nodes must be positive");
  const double h = period / nodes;
  CompensatedSum acc;
  for (int j = 0; j < nodes; ++j) acc.add(f(a + j * h));
  return acc.value() * h;
}

double trapezoid(const RealMap& f, double a, double b, int intervals) {
  require(intervals >= 1, "trapezoid: intervals must be positive");
  const double h = (b - a) / intervals;
  CompensatedSum acc;
  acc.add(0.5 * f(a));
  acc.add(0.5 * f(b));
  for (int j = 1; j < intervals; ++j) acc.add(f(a + j * h));
  return acc.value() * h;
}

double simpson(const RealMap& f, double a, double b, int intervals) {
  require(intervals >= 2, "simpson: need at least two intervals");
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  CompensatedSum acc;
  acc.add(f(a));
  acc.add(f(b));
  for (int j = 1; j < intervals; ++j) acc.add((j % 2 ? 4.0 : 2.0) * f(a + j * h));
  return acc.value() * h / 3.0;
}

namespace {

double adaptive_step(const RealMap& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const RealMap& f, double a, double b, double tol, int max_depth) {
  require(tol > 0.0, "adaptive_simpson: tolerance must be positive");
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

QuadratureRule gauss_legendre(int n) {
  require(n >= 1, "gauss_legendre: need at least one node");
  QuadratureRule rule;
  if (n == 1) return {{0.0}, {2.0}};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double gauss_legendre_integrate(const RealMap& f, double a, double b, int n, int panels) {
  require(panels >= 1, "gauss_legendre_integrate: need at least one panel");
  const QuadratureRule rule = gauss_legendre(n);
  const double width = (b - a) / panels;
  CompensatedSum acc;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (int i = 0; i < n; ++i) acc.add(rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]));
  }
  return 0.5 * width * acc.value();
}

UniformCubicSpline::UniformCubicSpline(double x0, double h, std::vector<double> values)
    : x0_(x0), h_(h), y_(std::move(values)), m_(y_.size(), 0.0) {
  require(y_.size() >= 2, "UniformCubicSpline: need at least two samples");
  require(h_ > 0.0, "UniformCubicSpline: spacing must be positive");
  const std::size_t n = y_.size();
  if (n < 3) return;
  // Thomas algorithm for the natural spline system (tridiagonal 1,4,1).
  std::vector<double> c(n, 0.0);
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double rhs = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
    const double denom = 4.0 - (i > 1 ? c[i - 1] : 0.0);
    c[i] = 1.0 / denom;
    d[i] = (rhs - (i > 1 ? d[i - 1] : 0.0)) / denom;
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = d[i] - c[i] * m_[i + 1];
    if (i == 1) break;
  }
}

double UniformCubicSpline::operator()(double x) const {
  const std::size_t n = y_.size();
  double s = (x - x0_) / h_;
  if (s <= 0.0) return y_.front();
  if (s >= static_cast<double>(n - 1)) return y_.back();
  std::size_t i = static_cast<std::size_t>(s);
  if (i >= n - 1) i = n - 2;
  const double t = s - static_cast<double>(i);
  const double a = 1.0 - t;
  const double h2 = h_ * h_;
  return a * y_[i] + t * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (t * t * t - t) * m_[i + 1]) * h2 / 6.0;
}

}  // namespace fourierlab
