#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "fourierlab/error.hpp"
#include "fourierlab/geo.hpp"
#include "fourierlab/io.hpp"
#include "fourierlab/kernels.hpp"
#include "fourierlab/pde.hpp"
#include "fourierlab/periodic.hpp"
#include "fourierlab/signal.hpp"
#include "fourierlab/special.hpp"
#include "fourierlab/summation.hpp"
#include "fourierlab/transforms.hpp"

namespace fourierlab::cli {

void emit_grid(const RealMap& f, int nodes, std::ostream& out, double period) {
  require(nodes >= 2, "emit_grid: need M >= 2");
  CsvTable csv{{"x", "value"}, {}};
  for (int j = 0; j < nodes; ++j) {
    const double x = period * j / nodes;
    csv.rows.push_back({x, f(x)});
  }
  write_csv(out, csv);
}

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text destined for a file (or stdout when the path is empty).
struct Output {
  std::string path;
  std::ostringstream text;
};

struct Outputs {
  std::vector<std::unique_ptr<Output>> items;

  std::ostream& open(const std::string& path) {
    items.push_back(std::make_unique<Output>());
    items.back()->path = path;
    return items.back()->text;
  }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  return in;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  require(!out.empty(), "empty list");
  return out;
}

// --waveform NAME | --coeffs FILE | --samples FILE, with --kmax.
struct SignalArgs {
  std::string waveform;
  std::string coeffs;
  std::string samples;
  int kmax = 64;
  int nodes = 0;

  void add(CLI::App* app, bool allow_samples = true) {
    auto* w = app->add_option("--waveform", waveform, "catalog waveform");
    auto* c = app->add_option("--coeffs", coeffs, "coefficient CSV (k,re,im)");
    w->excludes(c);
    if (allow_samples) {
      auto* s = app->add_option("--samples", samples, "sample CSV (j,re,im), one period");
      s->excludes(w)->excludes(c);
      app->add_option("--nodes", nodes, "quadrature nodes for sampled signals");
    }
    app->add_option("--kmax", kmax, "highest coefficient index");
  }

  CoefficientTable table() const {
    if (!coeffs.empty()) {
      auto in = open_input(coeffs);
      return read_coefficients_csv(in);
    }
    if (!samples.empty()) {
      auto in = open_input(samples);
      std::vector<double> re;
      for (const cplx& c : read_samples_csv(in)) re.push_back(c.real());
      return coefficient_table(PeriodicSignal::from_samples(std::move(re)), kmax, nodes);
    }
    require(!waveform.empty(), "one of --waveform, --coeffs or --samples is required");
    return coefficient_table(WaveformCatalogEntry::parse(waveform), kmax);
  }
};

void write_table(std::ostream& out, const CoefficientTable& t) { write_coefficients_csv(out, t); }

void grid_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  write_csv(out, CsvTable{header, rows});
}

struct Command {
  CLI::App* app;
  std::function<void(Outputs&)> run;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerical harmonic analysis toolkit", "fourierlab"};
  app.require_subcommand(1);
  std::vector<Command> commands;
  auto sub = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };

  // coeffs ------------------------------------------------------------------
  SignalArgs coeffs_sig;
  std::string coeffs_out, coeffs_form = "exp";
  bool coeffs_numeric = false;
  {
    auto* c = sub("coeffs", "Fourier coefficients of a signal");
    coeffs_sig.add(c);
    c->add_option("--form", coeffs_form, "exp (k,re,im) or trig (k,a,b)")
        ->check(CLI::IsMember({"exp", "trig"}));
    c->add_flag("--numeric", coeffs_numeric, "quadrature instead of closed forms");
    c->add_option("--out", coeffs_out, "output CSV");
    commands.push_back({c, [&](Outputs& o) {
                          CoefficientTable t;
                          if (coeffs_numeric && !coeffs_sig.waveform.empty()) {
                            const auto s = PeriodicSignal::from_catalog(
                                WaveformCatalogEntry::parse(coeffs_sig.waveform));
                            t = coefficient_table(s, coeffs_sig.kmax, coeffs_sig.nodes);
                          } else {
                            t = coeffs_sig.table();
                          }
                          auto& os = o.open(coeffs_out);
                          if (coeffs_form == "exp") {
                            write_table(os, t);
                          } else {
                            const auto trig = to_trig(t);
                            std::vector<std::vector<double>> rows;
                            for (int k = 0; k <= trig.kmax(); ++k) {
                              rows.push_back({double(k), trig.a[k], trig.b[k]});
                            }
                            grid_csv(os, {"k", "a", "b"}, rows);
                          }
                        }});
  }

  // sum ---------------------------------------------------------------------
  SignalArgs sum_sig;
  std::string sum_method = "partial", sum_out;
  int sum_n = 8, sum_grid = 512;
  double sum_r = 0.9;
  {
    auto* c = sub("sum", "partial sums, Cesaro/Abel means and conjugate sums on a grid");
    sum_sig.add(c);
    c->add_option("--method", sum_method)->check(CLI::IsMember({"partial", "cesaro", "abel", "conjugate"}));
    c->add_option("--n", sum_n, "order N");
    c->add_option("--r", sum_r, "Abel radius");
    c->add_option("--grid", sum_grid, "grid points M");
    c->add_option("--out", sum_out, "output CSV x,value");
    commands.push_back({c, [&](Outputs& o) {
                          const auto t = sum_sig.table();
                          RealMap f;
                          if (sum_method == "partial") {
                            f = [&](double x) { return partial_sum(t, sum_n, x); };
                          } else if (sum_method == "cesaro") {
                            f = [&](double x) { return cesaro_mean(t, sum_n, x); };
                          } else if (sum_method == "abel") {
                            f = [&](double x) { return abel_mean(t, sum_r, x); };
                          } else {
                            f = [&](double x) { return conjugate_sum(t, sum_n, x); };
                          }
                          emit_grid(f, sum_grid, o.open(sum_out));
                        }});
  }

  // gibbs -------------------------------------------------------------------
  std::string gibbs_wave = "square", gibbs_out;
  int gibbs_n = 200;
  std::size_t gibbs_jump = 0;
  {
    auto* c = sub("gibbs", "overshoot of S_N next to a jump");
    c->add_option("--waveform", gibbs_wave);
    c->add_option("--n", gibbs_n);
    c->add_option("--jump", gibbs_jump, "jump index");
    c->add_option("--out", gibbs_out, "output JSON");
    commands.push_back({c, [&](Outputs& o) {
                          const auto g = gibbs_measure(WaveformCatalogEntry::parse(gibbs_wave),
                                                       gibbs_n, gibbs_jump);
                          write_flat_json(o.open(gibbs_out),
                                          {{"jump_location", g.jump_location},
                                           {"jump_size", g.jump_size},
                                           {"measured_overshoot", g.measured_overshoot},
                                           {"reference_overshoot", g.reference_overshoot},
                                           {"probe_value", g.probe_value}});
                        }});
  }

  // kernel ------------------------------------------------------------------
  std::string kernel_kind = "dirichlet", kernel_out;
  int kernel_n = 5, kernel_grid = 512;
  double kernel_r = 0.5, kernel_eps = 0.01;
  {
    auto* c = sub("kernel", "kernel values on a grid");
    c->add_option("--kind", kernel_kind)
        ->check(CLI::IsMember({"dirichlet", "fejer", "poisson", "conjugate_poisson", "gauss_weierstrass"}));
    c->add_option("--n", kernel_n);
    c->add_option("--r", kernel_r);
    c->add_option("--eps", kernel_eps);
    c->add_option("--grid", kernel_grid);
    c->add_option("--out", kernel_out, "output CSV x,value");
    commands.push_back({c, [&](Outputs& o) {
                          KernelSpec spec;
                          if (kernel_kind == "dirichlet") spec = KernelSpec::dirichlet(kernel_n);
                          if (kernel_kind == "fejer") spec = KernelSpec::fejer(kernel_n);
                          if (kernel_kind == "poisson") spec = KernelSpec::poisson(kernel_r);
                          if (kernel_kind == "conjugate_poisson") spec = KernelSpec::conjugate_poisson(kernel_r);
                          if (kernel_kind == "gauss_weierstrass") spec = KernelSpec::gauss_weierstrass(kernel_eps);
                          spec.validate();
                          emit_grid([&spec](double x) { return kernel_eval(spec, x); }, kernel_grid,
                                    o.open(kernel_out));
                        }});
  }

  // fft ---------------------------------------------------------------------
  std::size_t fft_n = 0;
  std::string fft_factors, fft_in, fft_out, fft_report;
  bool fft_inverse = false;
  {
    auto* c = sub("fft", "DFT by the factorized Gauss scheme");
    c->add_option("--n", fft_n, "transform length")->required();
    c->add_option("--factors", fft_factors, "comma separated factors");
    c->add_option("--in", fft_in, "samples CSV j,re,im")->required();
    c->add_flag("--inverse", fft_inverse, "synthesize samples from coefficients");
    c->add_option("--out", fft_out, "output CSV");
    c->add_option("--report", fft_report, "operation count JSON");
    commands.push_back({c, [&](Outputs& o) {
                          auto in = open_input(fft_in);
                          const auto samples = read_samples_csv(in);
                          require(samples.size() == fft_n, "fft: --n does not match the input length");
                          std::vector<std::size_t> factors;
                          if (!fft_factors.empty()) {
                            for (double f : parse_list(fft_factors)) {
                              require(f >= 1 && f == std::floor(f), "fft: factors must be positive integers");
                              factors.push_back(static_cast<std::size_t>(f));
                            }
                          }
                          const DftPlan plan = factors.empty() ? DftPlan::automatic(fft_n)
                                                               : DftPlan(fft_n, factors);
                          OpCounter ops;
                          std::vector<cplx> result;
                          if (fft_inverse) {
                            result = dft_inverse(samples);
                          } else {
                            result = fft_gauss(samples, plan, &ops);
                          }
                          auto& os = o.open(fft_out);
                          CsvTable csv{{fft_inverse ? "j" : "k", "re", "im"}, {}};
                          for (std::size_t k = 0; k < result.size(); ++k) {
                            csv.rows.push_back({double(k), result[k].real(), result[k].imag()});
                          }
                          write_csv(os, csv);
                          if (!fft_report.empty()) {
                            std::string fs;
                            for (std::size_t f : plan.factors()) fs += (fs.empty() ? "" : ",") + std::to_string(f);
                            write_flat_json(o.open(fft_report),
                                            {{"n", static_cast<long long>(fft_n)},
                                             {"factors", fs},
                                             {"complex_mults", static_cast<long long>(ops.complex_mults)}});
                          }
                        }});
  }

  // tide --------------------------------------------------------------------
  std::string tide_in, tide_freqs, tide_out;
  {
    auto* c = sub("tide", "harmonic amplitudes at known angular frequencies");
    c->add_option("--in", tide_in, "series CSV t,re,im on a uniform grid starting at 0")->required();
    c->add_option("--freqs", tide_freqs, "comma separated angular frequencies")->required();
    c->add_option("--out", tide_out, "output CSV omega,re,im,bound");
    commands.push_back({c, [&](Outputs& o) {
                          auto in = open_input(tide_in);
                          const CsvTable csv = read_csv(in);
                          require(csv.header == std::vector<std::string>{"t", "re", "im"},
                                  "tide: series CSV needs header t,re,im");
                          require(csv.rows.size() >= 3, "tide: need at least 3 samples");
                          require(csv.rows.front()[0] == 0.0, "tide: series must start at t = 0");
                          const double horizon = csv.rows.back()[0];
                          const long intervals = static_cast<long>(csv.rows.size()) - 1;
                          const double dt = horizon / intervals;
                          auto h = [&](double t) {
                            const long j = std::lround(t / dt);
                            const auto& row = csv.rows[std::clamp<long>(j, 0, intervals)];
                            return cplx{row[1], row[2]};
                          };
                          const auto model = tide_extract(h, parse_list(tide_freqs), horizon, intervals);
                          std::vector<std::vector<double>> rows;
                          for (std::size_t i = 0; i < model.frequencies.size(); ++i) {
                            rows.push_back({model.frequencies[i], model.amplitudes[i].real(),
                                            model.amplitudes[i].imag(), model.error_bounds[i]});
                          }
                          grid_csv(o.open(tide_out), {"omega", "re", "im", "bound"}, rows);
                        }});
  }

  // special -----------------------------------------------------------------
  std::string special_fn, special_args, special_out;
  {
    auto* c = sub("special", "special functions and constants");
    c->add_option("--fn", special_fn)
        ->required()
        ->check(CLI::IsMember({"besselj", "cheb", "legendre", "haar", "wrapped", "j0zeros", "constants"}));
    c->add_option("--args", special_args, "comma separated arguments");
    c->add_option("--out", special_out);
    commands.push_back({c, [&](Outputs& o) {
                          std::vector<double> a;
                          if (!special_args.empty()) a = parse_list(special_args);
                          auto need = [&](std::size_t n) {
                            require(a.size() == n, "special: --fn " + special_fn + " takes " +
                                                       std::to_string(n) + " arguments");
                          };
                          auto integer = [](double v) {
                            require(v == std::floor(v), "special: index arguments must be integers");
                            return static_cast<int>(v);
                          };
                          auto& os = o.open(special_out);
                          if (special_fn == "j0zeros") {
                            need(1);
                            std::vector<std::vector<double>> rows;
                            const auto z = j0_zeros(integer(a[0]));
                            for (std::size_t i = 0; i < z.size(); ++i) rows.push_back({double(i + 1), z[i]});
                            grid_csv(os, {"index", "zero"}, rows);
                            return;
                          }
                          if (special_fn == "constants") {
                            os << "name,partial,target\n";
                            for (const auto& e : constants_suite()) {
                              os << e.name << ',' << format_double(e.partial) << ','
                                 << format_double(e.target) << '\n';
                            }
                            return;
                          }
                          double v = 0.0;
                          if (special_fn == "besselj") {
                            need(2);
                            v = bessel_j(integer(a[0]), a[1]);
                          } else if (special_fn == "cheb") {
                            need(2);
                            v = chebyshev_t(integer(a[0]), a[1]);
                          } else if (special_fn == "legendre") {
                            need(2);
                            v = legendre(integer(a[0]), a[1]);
                          } else if (special_fn == "haar") {
                            need(3);
                            v = haar(integer(a[0]), integer(a[1]), a[2]);
                          } else {
                            need(1);
                            v = WrappedGaussian().pdf(a[0]);
                          }
                          write_flat_json(os, {{"fn", special_fn}, {"value", v}});
                        }});
  }

  // filter ------------------------------------------------------------------
  SignalArgs filter_sig;
  std::string filter_mode = "lowpass", filter_out;
  int filter_k0 = 8;
  double filter_alpha = 0.0, filter_eps = 1e-3;
  {
    auto* c = sub("filter", "low-pass, thresholding or Gauss-Weierstrass smoothing");
    filter_sig.add(c);
    c->add_option("--mode", filter_mode)->check(CLI::IsMember({"lowpass", "threshold", "smooth"}));
    c->add_option("--k0", filter_k0);
    c->add_option("--alpha", filter_alpha);
    c->add_option("--eps", filter_eps);
    c->add_option("--out", filter_out, "output coefficient CSV");
    commands.push_back({c, [&](Outputs& o) {
                          const auto t = filter_sig.table();
                          CoefficientTable r;
                          if (filter_mode == "lowpass") r = lowpass(t, filter_k0);
                          if (filter_mode == "threshold") r = threshold_denoise(t, filter_alpha);
                          if (filter_mode == "smooth") r = gauss_weierstrass_smooth(t, filter_eps);
                          write_table(o.open(filter_out), r);
                        }});
  }

  // edge --------------------------------------------------------------------
  SignalArgs edge_sig;
  int edge_n = 400, edge_grid = 1000;
  std::string edge_out;
  {
    auto* c = sub("edge", "Fourier edge detector E_N on a grid");
    edge_sig.add(c);
    c->add_option("--n", edge_n);
    c->add_option("--grid", edge_grid);
    c->add_option("--out", edge_out, "output CSV x,E");
    commands.push_back({c, [&](Outputs& o) {
                          const auto t = edge_sig.table();
                          std::vector<std::vector<double>> rows;
                          for (const auto& [x, e] : edge_detect(t, edge_n, edge_grid)) rows.push_back({x, e});
                          grid_csv(o.open(edge_out), {"x", "E"}, rows);
                        }});
  }

  // fm ----------------------------------------------------------------------
  double fm_eps = 1.0, fm_omega = 10.0, fm_omega_p = 1.0;
  int fm_kmax = 12;
  std::string fm_out;
  {
    auto* c = sub("fm", "FM sideband amplitudes");
    c->add_option("--eps", fm_eps);
    c->add_option("--omega", fm_omega);
    c->add_option("--omega-p", fm_omega_p);
    c->add_option("--kmax", fm_kmax);
    c->add_option("--out", fm_out, "output CSV frequency,amplitude");
    commands.push_back({c, [&](Outputs& o) {
                          const auto m = fm_sidebands(fm_eps, fm_omega, fm_omega_p, fm_kmax);
                          std::vector<std::vector<double>> rows;
                          for (std::size_t i = 0; i < m.frequencies.size(); ++i) {
                            rows.push_back({m.frequencies[i], m.amplitudes[i].real()});
                          }
                          grid_csv(o.open(fm_out), {"frequency", "amplitude"}, rows);
                        }});
  }

  // heat --------------------------------------------------------------------
  std::string heat_datum = "parabola", heat_out;
  double heat_length = 1.0, heat_horizon = 0.1;
  int heat_kmax = 64, heat_nx = 51, heat_nt = 11;
  {
    auto* c = sub("heat", "heat equation on a rod with zero ends");
    c->add_option("--datum", heat_datum)->check(CLI::IsMember({"parabola", "sine", "tent"}));
    c->add_option("--length", heat_length);
    c->add_option("--horizon", heat_horizon);
    c->add_option("--kmax", heat_kmax);
    c->add_option("--nx", heat_nx);
    c->add_option("--nt", heat_nt);
    c->add_option("--out", heat_out, "output CSV x,t,u");
    commands.push_back({c, [&](Outputs& o) {
                          require(heat_nx >= 2 && heat_nt >= 2, "heat: need nx, nt >= 2");
                          const double l = heat_length;
                          RealMap datum;
                          if (heat_datum == "parabola") datum = [l](double x) { return x * (l - x); };
                          if (heat_datum == "sine") datum = [l](double x) { return std::sin(kPi * x / l); };
                          if (heat_datum == "tent") datum = [l](double x) { return std::min(x, l - x); };
                          const auto p = heat_problem(datum, l, heat_horizon, heat_kmax);
                          std::vector<std::vector<double>> rows;
                          for (int it = 0; it < heat_nt; ++it) {
                            const double t = heat_horizon * it / (heat_nt - 1);
                            for (int ix = 0; ix < heat_nx; ++ix) {
                              const double x = l * ix / (heat_nx - 1);
                              rows.push_back({x, t, heat_solve(p, x, t)});
                            }
                          }
                          grid_csv(o.open(heat_out), {"x", "t", "u"}, rows);
                        }});
  }

  // cellar ------------------------------------------------------------------
  double cellar_c = 2e-3, cellar_p = 3600.0 * 24.0 * 365.0, cellar_a = 37.0, cellar_phase = kPi;
  std::string cellar_out;
  {
    auto* c = sub("cellar", "cellar depth for an annual temperature wave");
    c->add_option("--c", cellar_c, "diffusivity cm^2/s");
    c->add_option("--period", cellar_p, "seconds");
    c->add_option("--amplitude", cellar_a, "surface amplitude");
    c->add_option("--phase", cellar_phase, "phase shift at depth (radians)");
    c->add_option("--out", cellar_out, "output JSON");
    commands.push_back({c, [&](Outputs& o) {
                          const auto d = cellar_design({cellar_c, cellar_p, cellar_a, cellar_phase});
                          write_flat_json(o.open(cellar_out), {{"depth_cm", d.depth},
                                                               {"damping", d.damping},
                                                               {"oscillation", d.oscillation}});
                        }});
  }

  // disk --------------------------------------------------------------------
  std::string disk_wave = "square", disk_out;
  double disk_rmax = 0.95;
  int disk_nr = 20, disk_ntheta = 64;
  {
    auto* c = sub("disk", "Dirichlet problem on the unit disk");
    c->add_option("--waveform", disk_wave, "boundary datum in turns");
    c->add_option("--rmax", disk_rmax);
    c->add_option("--nr", disk_nr);
    c->add_option("--ntheta", disk_ntheta);
    c->add_option("--out", disk_out, "output CSV x,y,u");
    commands.push_back({c, [&](Outputs& o) {
                          require(disk_nr >= 1 && disk_ntheta >= 1, "disk: grid sizes must be positive");
                          const DiskDirichlet solver(
                              PeriodicSignal::from_catalog(WaveformCatalogEntry::parse(disk_wave)), disk_rmax);
                          std::vector<std::vector<double>> rows;
                          for (int i = 0; i <= disk_nr; ++i) {
                            const double r = disk_rmax * i / disk_nr;
                            for (int j = 0; j < disk_ntheta; ++j) {
                              const double th = static_cast<double>(j) / disk_ntheta;
                              rows.push_back({r * std::cos(kTwoPi * th), r * std::sin(kTwoPi * th), solver(r, th)});
                            }
                          }
                          grid_csv(o.open(disk_out), {"x", "y", "u"}, rows);
                        }});
  }

  // square ------------------------------------------------------------------
  int square_kmax = 2000, square_grid = 33;
  std::optional<double> square_r;
  double square_theta = kPi / 4.0;
  std::string square_out;
  {
    auto* c = sub("square", "Dirichlet problem on the unit square, u = 1 on top");
    c->add_option("--kmax", square_kmax);
    c->add_option("--grid", square_grid, "interior grid points per side");
    c->add_option("--corner-r", square_r, "report the corner expansion at this radius");
    c->add_option("--corner-theta", square_theta);
    c->add_option("--out", square_out, "output CSV x,y,u or JSON");
    commands.push_back({c, [&](Outputs& o) {
                          if (square_r) {
                            const auto s = corner_asymptotic(*square_r, square_theta);
                            write_flat_json(o.open(square_out),
                                            {{"u", s.u}, {"angular", s.angular}, {"residual", s.residual}});
                            return;
                          }
                          require(square_grid >= 1, "square: grid must be positive");
                          std::vector<std::vector<double>> rows;
                          for (int i = 1; i <= square_grid; ++i) {
                            for (int j = 1; j <= square_grid; ++j) {
                              const double x = static_cast<double>(i) / (square_grid + 1);
                              const double y = static_cast<double>(j) / (square_grid + 1);
                              rows.push_back({x, y, square_dirichlet(x, y, square_kmax)});
                            }
                          }
                          grid_csv(o.open(square_out), {"x", "y", "u"}, rows);
                        }});
  }

  // membrane ----------------------------------------------------------------
  double membrane_c = 1.0, membrane_tmax = 1.0;
  int membrane_zero = 1, membrane_nr = 21, membrane_nt = 11;
  std::string membrane_out;
  {
    auto* c = sub("membrane", "radial mode of a clamped drum");
    c->add_option("--c", membrane_c, "elasticity");
    c->add_option("--zero", membrane_zero, "which zero of J_0 (1..10)");
    c->add_option("--tmax", membrane_tmax);
    c->add_option("--nr", membrane_nr);
    c->add_option("--nt", membrane_nt);
    c->add_option("--out", membrane_out, "output CSV x,t,u");
    commands.push_back({c, [&](Outputs& o) {
                          require(membrane_zero >= 1 && membrane_zero <= 10, "membrane: --zero must be in 1..10");
                          require(membrane_nr >= 2 && membrane_nt >= 2, "membrane: need nr, nt >= 2");
                          const MembraneMode mode{membrane_c, j0_zeros(membrane_zero).back()};
                          std::vector<std::vector<double>> rows;
                          for (int it = 0; it < membrane_nt; ++it) {
                            const double t = membrane_tmax * it / (membrane_nt - 1);
                            for (int ir = 0; ir < membrane_nr; ++ir) {
                              const double r = static_cast<double>(ir) / (membrane_nr - 1);
                              rows.push_back({r, t, membrane_mode(mode, r, t)});
                            }
                          }
                          grid_csv(o.open(membrane_out), {"x", "t", "u"}, rows);
                        }});
  }

  // radon -------------------------------------------------------------------
  std::string radon_phantom = "paraboloid", radon_fwd_out;
  int radon_np = 201, radon_nphi = 64, radon_nodes = 2048;
  std::string radon_in, radon_inv_out;
  double radon_tau_min = 0.1, radon_tau_max = 0.8;
  int radon_ntau = 71, radon_modes = 8, radon_ntheta = 1;
  {
    auto* c = sub("radon", "Radon transform of disk-supported phantoms and its inversion");
    c->require_subcommand(1);
    auto* f = c->add_subcommand("forward", "sinogram of a phantom");
    f->add_option("--phantom", radon_phantom)->check(CLI::IsMember({"paraboloid", "gaussian", "disk"}));
    f->add_option("--np", radon_np);
    f->add_option("--nphi", radon_nphi);
    f->add_option("--nodes", radon_nodes);
    f->add_option("--out", radon_fwd_out, "sinogram CSV p,phi,value");
    commands.push_back({f, [&](Outputs& o) {
                          PlanarDensity d;
                          if (radon_phantom == "paraboloid") {
                            d = [](double x, double y) { const double r2 = x * x + y * y; return r2 < 1 ? 1 - r2 : 0.0; };
                          } else if (radon_phantom == "gaussian") {
                            d = [](double x, double y) { return std::exp(-x * x - y * y); };
                          } else {
                            d = [](double x, double y) { return x * x + y * y < 1 ? 1.0 : 0.0; };
                          }
                          const auto s = sinogram_forward(d, radon_np, radon_nphi, radon_nodes);
                          std::vector<std::vector<double>> rows;
                          for (int i = 0; i < s.p_count; ++i) {
                            for (int j = 0; j < s.phi_count; ++j) rows.push_back({s.p(i), s.phi(j), s.at(i, j)});
                          }
                          grid_csv(o.open(radon_fwd_out), {"p", "phi", "value"}, rows);
                        }});
    auto* inv = c->add_subcommand("invert", "density from a sinogram");
    inv->add_option("--in", radon_in, "sinogram CSV p,phi,value")->required();
    inv->add_option("--tau-min", radon_tau_min);
    inv->add_option("--tau-max", radon_tau_max);
    inv->add_option("--ntau", radon_ntau);
    inv->add_option("--modes", radon_modes);
    inv->add_option("--ntheta", radon_ntheta);
    inv->add_option("--out", radon_inv_out, "output CSV rho,theta,value");
    commands.push_back({inv, [&](Outputs& o) {
                          auto in = open_input(radon_in);
                          const CsvTable csv = read_csv(in);
                          require(csv.header == std::vector<std::string>{"p", "phi", "value"},
                                  "radon: sinogram CSV needs header p,phi,value");
                          std::map<double, int> ps, phis;
                          for (const auto& row : csv.rows) {
                            ps.emplace(row[0], 0);
                            phis.emplace(row[1], 0);
                          }
                          int idx = 0;
                          for (auto& [k, v] : ps) v = idx++;
                          idx = 0;
                          for (auto& [k, v] : phis) v = idx++;
                          Sinogram s{static_cast<int>(ps.size()), static_cast<int>(phis.size()), {}};
                          s.values.assign(csv.rows.size(), 0.0);
                          s.validate();
                          for (const auto& row : csv.rows) {
                            s.values[static_cast<std::size_t>(ps[row[0]]) * s.phi_count + phis[row[1]]] = row[2];
                          }
                          require(radon_ntau >= 2 && radon_ntheta >= 1, "radon: need ntau >= 2, ntheta >= 1");
                          std::vector<double> tau;
                          for (int i = 0; i < radon_ntau; ++i) {
                            tau.push_back(radon_tau_min + (radon_tau_max - radon_tau_min) * i / (radon_ntau - 1));
                          }
                          RadonInversionOptions opt;
                          opt.modes = radon_modes;
                          const auto rec = radon_invert(s, tau, opt);
                          std::vector<std::vector<double>> rows;
                          for (std::size_t i = 0; i < tau.size(); ++i) {
                            for (int j = 0; j < radon_ntheta; ++j) {
                              const double th = kTwoPi * j / radon_ntheta;
                              rows.push_back({tau[i], th, rec.value(i, th)});
                            }
                          }
                          grid_csv(o.open(radon_inv_out), {"rho", "theta", "value"}, rows);
                        }});
  }

  // crofton -----------------------------------------------------------------
  std::string crofton_curve = "circle", crofton_out;
  double crofton_a = 1.0, crofton_b = 0.5;
  int crofton_np = 512, crofton_nphi = 512;
  {
    auto* c = sub("crofton", "curve length from line intersection counts");
    c->add_option("--curve", crofton_curve)->check(CLI::IsMember({"circle", "ellipse", "segment"}));
    c->add_option("--a", crofton_a, "radius, semi-axis or segment length");
    c->add_option("--b", crofton_b, "second semi-axis");
    c->add_option("--p-nodes", crofton_np);
    c->add_option("--phi-nodes", crofton_nphi);
    c->add_option("--out", crofton_out, "output JSON");
    commands.push_back({c, [&](Outputs& o) {
                          ParametricCurve curve;
                          const double a = crofton_a, b = crofton_b;
                          if (crofton_curve == "circle") {
                            curve = {[a](double t) { return Point{a * std::cos(kTwoPi * t), a * std::sin(kTwoPi * t)}; }, true};
                          } else if (crofton_curve == "ellipse") {
                            curve = {[a, b](double t) { return Point{a * std::cos(kTwoPi * t), b * std::sin(kTwoPi * t)}; }, true};
                          } else {
                            curve = {[a](double t) { return Point{a * (t - 0.5), 0.0}; }, false};
                          }
                          write_flat_json(o.open(crofton_out),
                                          {{"curve", crofton_curve},
                                           {"length", crofton_length(curve, crofton_np, crofton_nphi)}});
                        }});
  }

  // buffon ------------------------------------------------------------------
  double buffon_l = 1.0;
  std::uint64_t buffon_tosses = 1000000, buffon_seed = 0;
  std::string buffon_out;
  {
    auto* c = sub("buffon", "Buffon needle simulation");
    c->add_option("--needle", buffon_l);
    c->add_option("--tosses", buffon_tosses);
    c->add_option("--seed", buffon_seed)->required();
    c->add_option("--out", buffon_out, "output JSON");
    commands.push_back({c, [&](Outputs& o) {
                          const auto r = buffon_sim(buffon_l, buffon_tosses, buffon_seed);
                          write_flat_json(o.open(buffon_out),
                                          {{"fraction", r.fraction},
                                           {"target", r.target},
                                           {"stderr", r.stderr_},
                                           {"hits", static_cast<long long>(r.hits)},
                                           {"tosses", static_cast<long long>(r.tosses)}});
                        }});
  }

  // epicycle ----------------------------------------------------------------
  std::string epi_in, epi_curve = "ellipse", epi_out, epi_report;
  int epi_kmax = 16, epi_samples = 256;
  double epi_a = 1.0, epi_b = 0.5;
  {
    auto* c = sub("epicycle", "Fourier fit of a closed curve with length, area and isoperimetric defect");
    c->add_option("--in", epi_in, "curve samples CSV x,y at t_j = j/M");
    c->add_option("--curve", epi_curve, "built-in curve when --in is absent")
        ->check(CLI::IsMember({"circle", "ellipse"}));
    c->add_option("--a", epi_a);
    c->add_option("--b", epi_b);
    c->add_option("--samples", epi_samples);
    c->add_option("--kmax", epi_kmax);
    c->add_option("--out", epi_out, "coefficient CSV k,x_re,x_im,y_re,y_im");
    c->add_option("--report", epi_report, "geometry JSON");
    commands.push_back({c, [&](Outputs& o) {
                          std::vector<Point> pts;
                          if (!epi_in.empty()) {
                            auto in = open_input(epi_in);
                            const CsvTable csv = read_csv(in);
                            require(csv.header == std::vector<std::string>{"x", "y"}, "epicycle: CSV needs header x,y");
                            for (const auto& row : csv.rows) pts.push_back({row[0], row[1]});
                          } else {
                            require(epi_samples >= 1, "epicycle: samples must be positive");
                            const double b = epi_curve == "circle" ? epi_a : epi_b;
                            for (int j = 0; j < epi_samples; ++j) {
                              const double t = static_cast<double>(j) / epi_samples;
                              pts.push_back({epi_a * std::cos(kTwoPi * t), b * std::sin(kTwoPi * t)});
                            }
                          }
                          const auto cf = curve_fourier_fit(pts, epi_kmax);
                          std::vector<std::vector<double>> rows;
                          for (int k = -cf.kmax; k <= cf.kmax; ++k) {
                            const cplx x = cf.x[k + cf.kmax], y = cf.y[k + cf.kmax];
                            rows.push_back({double(k), x.real(), x.imag(), y.real(), y.imag()});
                          }
                          grid_csv(o.open(epi_out), {"k", "x_re", "x_im", "y_re", "y_im"}, rows);
                          if (!epi_report.empty()) {
                            const auto g = geometry(cf);
                            write_flat_json(o.open(epi_report),
                                            {{"length", g.length}, {"area", g.area}, {"defect", g.defect}});
                          }
                        }});
  }

  // weyl --------------------------------------------------------------------
  double weyl_gamma = std::sqrt(2.0), weyl_a = 0.25, weyl_b = 0.5;
  std::uint64_t weyl_trials = 1000000;
  std::string weyl_out;
  {
    auto* c = sub("weyl", "equidistribution count of an irrational rotation");
    c->add_option("--gamma", weyl_gamma);
    c->add_option("--a", weyl_a);
    c->add_option("--b", weyl_b);
    c->add_option("--trials", weyl_trials);
    c->add_option("--out", weyl_out, "output JSON");
    commands.push_back({c, [&](Outputs& o) {
                          const auto r = weyl_count(weyl_gamma, weyl_a, weyl_b, weyl_trials);
                          write_flat_json(o.open(weyl_out),
                                          {{"gamma", r.gamma},
                                           {"a", r.a},
                                           {"b", r.b},
                                           {"trials", static_cast<long long>(r.trials)},
                                           {"count", static_cast<long long>(r.count)},
                                           {"ratio", r.ratio}});
                        }});
  }

  // clt ---------------------------------------------------------------------
  int clt_n = 64;
  std::uint64_t clt_draws = 100000, clt_seed = 0;
  std::string clt_sampler = "uniform", clt_out, clt_cdf;
  {
    auto* c = sub("clt", "central limit theorem on the circle");
    c->add_option("--n", clt_n);
    c->add_option("--draws", clt_draws);
    c->add_option("--seed", clt_seed)->required();
    c->add_option("--sampler", clt_sampler)->check(CLI::IsMember({"uniform", "digit"}));
    c->add_option("--out", clt_out, "output JSON");
    c->add_option("--cdf", clt_cdf, "empirical CDF CSV x,empirical,wrapped");
    commands.push_back({c, [&](Outputs& o) {
                          const auto r = circle_clt(clt_sampler == "uniform" ? CltSampler::uniform : CltSampler::digit,
                                                    clt_n, clt_draws, clt_seed);
                          write_flat_json(o.open(clt_out), {{"n", static_cast<long long>(clt_n)},
                                                            {"draws", static_cast<long long>(clt_draws)},
                                                            {"distance", r.distance},
                                                            {"ks_distance", r.ks_distance}});
                          if (!clt_cdf.empty()) {
                            const WrappedGaussian w;
                            std::vector<std::vector<double>> rows;
                            const std::size_t step = std::max<std::size_t>(1, r.sorted.size() / 1000);
                            for (std::size_t i = 0; i < r.sorted.size(); i += step) {
                              rows.push_back({r.sorted[i], double(i + 1) / double(r.sorted.size()), w.cdf(r.sorted[i])});
                            }
                            grid_csv(o.open(clt_cdf), {"x", "empirical", "wrapped"}, rows);
                          }
                        }});
  }

  // -------------------------------------------------------------------------
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Outputs outputs;
  try {
    const Command* chosen = nullptr;
    for (const auto& c : commands) {
      if (c.app->parsed() && (c.app->get_subcommands().empty())) chosen = &c;
    }
    if (!chosen) throw InvalidArgument("no command selected");
    chosen->run(outputs);
    for (const auto& item : outputs.items) {
      if (item->path.empty()) {
        out << item->text.str();
        continue;
      }
      std::ofstream file(item->path, std::ios::binary);
      if (!file) throw IoError("cannot write '" + item->path + "'");
      file << item->text.str();
      if (!file) throw IoError("write failed for '" + item->path + "'");
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fourierlab::cli
