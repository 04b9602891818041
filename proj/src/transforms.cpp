#include "fourierlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fourierlab/error.hpp"

namespace fourierlab {

DftPlan DftPlan::automatic(std::size_t n) {
  require(n >= 1, "DftPlan: N must be positive");
  std::vector<std::size_t> factors;
  std::size_t rest = n;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      factors.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1 || factors.empty()) factors.push_back(rest);
  return DftPlan(n, std::move(factors));
}

DftPlan::DftPlan(std::size_t n, std::vector<std::size_t> factors)
    : n_(n), factors_(std::move(factors)) {
  require(n_ >= 1, "DftPlan: N must be positive");
  require(!factors_.empty(), "DftPlan: empty factorization");
  std::size_t product = 1;
  for (std::size_t f : factors_) {
    require(f >= 1, "DftPlan: zero factor");
    require(factors_.size() == 1 || f >= 2, "DftPlan: factors must be >= 2");
    product *= f;
  }
  require(product == n_, "DftPlan: factors do not multiply to N");

  std::size_t size = n_;
  for (std::size_t f : factors_) {
    level_size_.push_back(size);
    std::vector<cplx> roots(size);
    const auto ls = static_cast<long long>(size);
    for (long long m = 0; m < ls; ++m) roots[m] = unit_root(-m, ls);
    roots_.push_back(std::move(roots));
    size /= f;
  }
}

namespace {

void count(OpCounter* ops, std::uint64_t n) {
  if (ops) ops->complex_mults += n;
}

// Unnormalized sum_j x_j w^{h j}, w = roots[stride_step]; roots are for size n * step.
void direct(const cplx* x, std::size_t n, const std::vector<cplx>& roots, std::size_t step,
            cplx* out, OpCounter* ops) {
  std::uint64_t mults = 0;
  for (std::size_t h = 0; h < n; ++h) {
    cplx acc = x[0];
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t idx = (h * j) % n;
      if (idx == 0) {
        acc += x[j];
      } else {
        acc += x[j] * roots[idx * step];
        ++mults;
      }
    }
    out[h] = acc;
  }
  count(ops, mults);
}

struct GaussRecursion {
  const std::vector<std::size_t>& factors;
  const std::vector<std::size_t>& sizes;
  const std::vector<std::vector<cplx>>& roots;
  OpCounter* ops;

  void run(std::size_t level, const cplx* x, cplx* out) const {
    const std::size_t n = sizes[level];
    const std::vector<cplx>& w = roots[level];
    if (level + 1 == factors.size()) {
      direct(x, n, w, 1, out, ops);
      return;
    }
    const std::size_t n1 = factors[level];
    const std::size_t n2 = n / n1;
    // Inner sums B_{j2,h2} = sum_{j1} x[n2 j1 + j2] w_{n1}^{h2 j1}, then the
    // twiddle w_n^{h2 j2}; stored as rows t[h2][j2].
    std::vector<cplx> t(n);
    std::vector<cplx> column(n1);
    std::vector<cplx> b(n1);
    std::uint64_t mults = 0;
    for (std::size_t j2 = 0; j2 < n2; ++j2) {
      for (std::size_t j1 = 0; j1 < n1; ++j1) column[j1] = x[n2 * j1 + j2];
      direct(column.data(), n1, w, n2, b.data(), ops);
      for (std::size_t h2 = 0; h2 < n1; ++h2) {
        const std::size_t idx = (h2 * j2) % n;
        if (idx == 0) {
          t[h2 * n2 + j2] = b[h2];
        } else {
          t[h2 * n2 + j2] = b[h2] * w[idx];
          ++mults;
        }
      }
    }
    count(ops, mults);
    // Outer sums over j2 are size-n2 transforms; C[h2 + n1 h1].
    std::vector<cplx> sub(n2);
    for (std::size_t h2 = 0; h2 < n1; ++h2) {
      run(level + 1, t.data() + h2 * n2, sub.data());
      for (std::size_t h1 = 0; h1 < n2; ++h1) out[h2 + n1 * h1] = sub[h1];
    }
  }
};

}  // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& samples, OpCounter* ops) {
  require(!samples.empty(), "dft_forward: empty input");
  const std::size_t n = samples.size();
  std::vector<cplx> roots(n);
  const auto ln = static_cast<long long>(n);
  for (long long m = 0; m < ln; ++m) roots[m] = unit_root(-m, ln);
  std::vector<cplx> out(n);
  direct(samples.data(), n, roots, 1, out.data(), ops);
  const double scale = 1.0 / static_cast<double>(n);
  for (cplx& c : out) c *= scale;
  return out;
}

std::vector<cplx> fft_gauss(const std::vector<cplx>& samples, const DftPlan& plan,
                            OpCounter* ops) {
  require(!samples.empty(), "fft_gauss: empty input");
  require(samples.size() == plan.size(), "fft_gauss: plan size does not match input length");
  std::vector<cplx> out(samples.size());
  GaussRecursion{plan.factors_, plan.level_size_, plan.roots_, ops}.run(0, samples.data(),
                                                                        out.data());
  const double scale = 1.0 / static_cast<double>(samples.size());
  for (cplx& c : out) c *= scale;
  return out;
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& coeffs) {
  require(!coeffs.empty(), "dft_inverse: empty input");
  const std::size_t n = coeffs.size();
  std::vector<cplx> conj_in(n);
  std::transform(coeffs.begin(), coeffs.end(), conj_in.begin(),
                 [](cplx c) { return std::conj(c); });
  std::vector<cplx> out = fft_gauss(conj_in, DftPlan::automatic(n));
  for (cplx& c : out) c = std::conj(c * static_cast<double>(n));
  return out;
}

HarmonicModel tide_extract(const std::function<cplx(double)>& h, std::vector<double> frequencies,
                           double horizon, long nodes) {
  require(std::isfinite(horizon) && horizon > 0.0, "tide_extract: T must be positive");
  require(!frequencies.empty(), "tide_extract: no frequencies");
  std::sort(frequencies.begin(), frequencies.end());
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    require(std::isfinite(frequencies[i]), "tide_extract: non-finite frequency");
    require(i == 0 || frequencies[i] != frequencies[i - 1], "tide_extract: duplicate frequency");
  }
  if (nodes == 0) {
    double wmax = 0.0;
    for (double w : frequencies) wmax = std::max(wmax, std::abs(w));
    const double periods = wmax > 0.0 ? horizon * wmax / kTwoPi : 1.0;
    nodes = std::max<long>(64, static_cast<long>(std::ceil(64.0 * periods)));
  }
  require(nodes >= 2, "tide_extract: need at least 2 nodes");

  const std::size_t m = frequencies.size();
  std::vector<CompensatedSum> re(m), im(m);
  const double dt = horizon / static_cast<double>(nodes);
  for (long j = 0; j <= nodes; ++j) {
    const double t = j == nodes ? horizon : dt * static_cast<double>(j);
    const double weight = (j == 0 || j == nodes) ? 0.5 : 1.0;
    const cplx v = h(t) * weight;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx term = v * std::polar(1.0, -frequencies[i] * t);
      re[i].add(term.real());
      im[i].add(term.imag());
    }
  }
  HarmonicModel model;
  model.frequencies = frequencies;
  for (std::size_t i = 0; i < m; ++i) {
    model.amplitudes.emplace_back(re[i].value() * dt / horizon, im[i].value() * dt / horizon);
  }
  for (std::size_t i = 0; i < m; ++i) {
    double bound = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      bound += 2.0 * std::abs(model.amplitudes[k]) /
               (horizon * std::abs(frequencies[k] - frequencies[i]));
    }
    model.error_bounds.push_back(bound);
  }
  return model;
}

}  // namespace fourierlab
