#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "evanescent/band_source.hpp"
#include "evanescent/core_model.hpp"
#include "evanescent/error.hpp"
#include "evanescent/parallel.hpp"
#include "evanescent/relativistic.hpp"
#include "evanescent/sharp_source.hpp"
#include "evanescent/tf_analysis.hpp"
#include "scenario.hpp"
#include "tables.hpp"

namespace evanescent::cli {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

const std::vector<std::string>& wave_columns() {
  static const std::vector<std::string> cols{"t",         "re_psi", "im_psi",         "density",
                                             "amplified", "log10_amplified", "omega_bar"};
  return cols;
}

const std::vector<std::string>& spectrogram_columns() {
  static const std::vector<std::string> cols{"t", "omega", "S"};
  return cols;
}

double stencil_step(double x, double t) {
  if (t == 0.0) return 1e-6;
  const double a = std::abs(t);
  return std::min(1e-3 * a, 0.02 / (1.0 + x * x / (4.0 * a * a)));
}

Table sharp_table(const SourceParams& src, double x, const std::vector<double>& ts, unsigned threads,
                  std::vector<PointError>& errors) {
  Table tab{wave_columns(), {}};
  for (const auto& r : trace(src, x, ts, threads)) {
    if (!r.error.empty()) errors.push_back({x, r.t, kNaN, r.error});
    if (!r.ok) {
      tab.rows.push_back({r.t, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN});
      continue;
    }
    tab.rows.push_back({r.t, r.re_psi, r.im_psi, r.density, r.amplified, r.log10_A,
                        r.omega_bar_ok ? r.omega_bar : kNaN});
  }
  return tab;
}

Table wave_table(const WaveFn& f, double kappa, double x, const std::vector<double>& ts,
                 unsigned threads, std::vector<PointError>& errors) {
  const std::size_t n = ts.size();
  std::vector<std::vector<double>> rows(n);
  std::vector<std::string> msg(n);
  const double gain = std::exp(2.0 * kappa * x);
  parallel_for(n, threads, [&](std::size_t i) {
    const double t = ts[i];
    try {
      const cplx p = f(t);
      const double d = std::norm(p);
      const double a = d * gain;
      double om = kNaN;
      const double h = stencil_step(x, t);
      const cplx lo = f(t - h), hi = f(t + h);
      if (std::abs(p) > 0.0 && std::abs(lo) > 0.0 && std::abs(hi) > 0.0)
        om = -(std::arg(hi / p) + std::arg(p / lo)) / (2.0 * h);
      rows[i] = {t, p.real(), p.imag(), d, a, a > 0.0 ? std::log10(a) : kNaN, om};
    } catch (const std::exception& e) {
      rows[i] = {t, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
      msg[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!msg[i].empty()) errors.push_back({x, ts[i], kNaN, msg[i]});
  return {wave_columns(), std::move(rows)};
}

Table grid_table(const SpectrogramGrid& g, std::vector<PointError>& errors) {
  Table tab{spectrogram_columns(), {}};
  for (std::size_t it = 0; it < g.t_axis.size(); ++it)
    for (std::size_t iw = 0; iw < g.omega_axis.size(); ++iw) {
      const std::size_t k = it * g.omega_axis.size() + iw;
      if (g.failed[k]) {
        errors.push_back({g.x, g.t_axis[it], g.omega_axis[iw], "quadrature-failure: spectrogram cell"});
        tab.rows.push_back({g.t_axis[it], g.omega_axis[iw], kNaN});
      } else {
        tab.rows.push_back({g.t_axis[it], g.omega_axis[iw], g.values[k]});
      }
    }
  return tab;
}

std::string extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

std::string x_tag(double x) { return "_x" + format_number(x, 10); }

RunReport run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  if (cfg.mode == Mode::figure) return reproduce_figure(cfg.figure, cfg.output_path, cfg);
  RunReport report;
  std::vector<PointError> errors;
  const auto ts = linspace(cfg.t_min, cfg.t_max, cfg.n_t);
  const std::string ext = extension(cfg.format);

  for (double x : cfg.x_list) {
    Table tab;
    switch (cfg.mode) {
      case Mode::sharp:
        tab = sharp_table(SourceParams::make(cfg.omega0), x, ts, cfg.threads, errors);
        break;
      case Mode::band: {
        const auto band = BandParams::make(cfg.omega0, *cfg.delta_omega);
        tab = wave_table([&](double t) { return psi_band(band, x, t); }, band.kappa0, x, ts,
                         cfg.threads, errors);
        break;
      }
      case Mode::relativistic: {
        const auto rel = RelParams::make(*cfg.c, cfg.omega0);
        tab = wave_table([&](double t) { return psi_saddle_plus(rel, x, t); }, rel.kappa0, x, ts,
                         cfg.threads, errors);
        break;
      }
      case Mode::spectrogram: {
        const auto ws = linspace(*cfg.omega_min, *cfg.omega_max, std::max(*cfg.n_omega, 1));
        const auto g = spectrogram(SourceParams::make(cfg.omega0), x, ts,
                                   *cfg.n_omega == 1 ? std::vector<double>{*cfg.omega_min} : ws,
                                   *cfg.T, SpectrogramMode::full, cfg.threads);
        tab = grid_table(g, errors);
        break;
      }
      case Mode::freq_window: {
        const auto band = BandParams::make(cfg.omega0, *cfg.delta_omega);
        const auto fw = freq_window_spectrogram(band, x, ts, cfg.threads);
        tab.columns = spectrogram_columns();
        for (std::size_t i = 0; i < ts.size(); ++i) {
          if (fw.failed[i]) errors.push_back({x, ts[i], cfg.omega0, "quadrature-failure: band wave"});
          tab.rows.push_back({ts[i], cfg.omega0, fw.failed[i] ? kNaN : fw.S_prime[i]});
        }
        break;
      }
      case Mode::figure:
        break;
    }
    const std::string path = cfg.output_path + x_tag(x) + ext;
    write_table(path, tab, cfg.format, cfg.precision);
    report.files.push_back(path);
  }
  const std::string err_path = cfg.output_path + ".errors.csv";
  write_errors(err_path, errors, cfg.precision);
  report.files.push_back(err_path);
  report.failures = errors.size();
  return report;
}

}  // namespace evanescent::cli
