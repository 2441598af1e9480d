#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "evanescent/band_source.hpp"
#include "evanescent/core_model.hpp"
#include "evanescent/error.hpp"
#include "evanescent/parallel.hpp"
#include "evanescent/sharp_source.hpp"
#include "evanescent/tf_analysis.hpp"
#include "scenario.hpp"
#include "tables.hpp"

namespace evanescent::cli {

namespace {

constexpr double kOmega0 = 0.5;
constexpr double kBand = 0.12;
constexpr double kWindowBand = 52.36;  // 2 pi / 0.12 to four digits
constexpr double kWindowT0 = 12.57;

class FigureWriter {
 public:
  FigureWriter(int n, std::string dir, const ScenarioConfig& base)
      : stem_(std::move(dir) + "/fig" + std::to_string(n)), base_(base) {}

  void table(const std::string& name, const Table& t) {
    const std::string path = stem_ + "_" + name + extension(base_.format);
    write_table(path, t, base_.format, base_.precision);
    report_.files.push_back(path);
  }
  void marker(const std::string& label, double x, double value, const std::string& note = "") {
    markers_.push_back({label, x, value, note});
  }
  std::vector<PointError>& errors() { return errors_; }
  unsigned threads() const { return base_.threads; }

  RunReport finish() {
    const std::string mpath = stem_ + "_markers.csv";
    write_markers(mpath, markers_, base_.precision);
    report_.files.push_back(mpath);
    const std::string epath = stem_ + ".errors.csv";
    write_errors(epath, errors_, base_.precision);
    report_.files.push_back(epath);
    report_.failures = errors_.size();
    return report_;
  }

 private:
  std::string stem_;
  ScenarioConfig base_;
  RunReport report_;
  std::vector<Marker> markers_;
  std::vector<PointError> errors_;
};

std::string tag(double x) { return "x" + format_number(x, 10); }

// Exact wave and its saddle approximation for the sharp source.
void sharp_traces(FigureWriter& w, const std::vector<double>& xs, const std::vector<double>& ts) {
  const auto src = SourceParams::make(kOmega0);
  for (double x : xs) {
    w.table(tag(x), sharp_table(src, x, ts, w.threads(), w.errors()));
    w.table("saddle_" + tag(x), wave_table([&](double t) { return psi_saddle(src, x, t); },
                                           src.kappa0, x, ts, w.threads(), w.errors()));
    const auto sc = characteristic_scales(src, x);
    w.marker("tau", x, sc.tau);
    w.marker("t_f", x, sc.t_f);
  }
}

void band_markers(FigureWriter& w, const BandParams& band, double x) {
  const auto bc = band_characteristics(band, x);
  w.marker("tau", x, bc.tau);
  w.marker("t_plus", x, bc.t_plus);
  w.marker("t_minus", x, bc.t_minus);
  w.marker("t_tr_prime", x, bc.t_tr_exact ? *bc.t_tr_exact : std::nan(""), bc.absent_note());
  w.marker("t_tr_prime_approx", x, bc.t_tr_approx);
}

Table leading_table(FigureWriter& w, const BandParams& band, double x, const std::vector<double>& ts) {
  return wave_table(
      [&](double t) { return endpoint_contribution(band, Endpoint::upper, x, t).value_leading; },
      band.kappa0, x, ts, w.threads(), w.errors());
}

void frequency_cut(FigureWriter& w, double T) {
  const auto src = SourceParams::make(kOmega0);
  const double x = 135.0;
  const auto ts = linspace(1.0, 600.0, 600);
  const auto cut = signal_frequency_cut(src, x, T, ts);

  std::vector<double> S(ts.size());
  std::vector<unsigned char> bad(ts.size(), 0);
  parallel_for(ts.size(), w.threads(), [&](std::size_t i) {
    try {
      S[i] = kSpectrogramNorm * std::norm(stft_exact(src, x, T, kOmega0, ts[i]));
    } catch (const std::exception&) {
      bad[i] = 1;
    }
  });
  Table exact{spectrogram_columns(), {}}, saddle{spectrogram_columns(), {}}, env{spectrogram_columns(), {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (bad[i]) w.errors().push_back({x, ts[i], kOmega0, "quadrature-failure: stft"});
    exact.rows.push_back({ts[i], kOmega0, bad[i] ? std::nan("") : S[i]});
    saddle.rows.push_back({ts[i], kOmega0, cut.S[i]});
    env.rows.push_back({ts[i], kOmega0, cut.envelope[i]});
  }
  w.table(tag(x), exact);
  w.table("saddle_" + tag(x), saddle);
  w.table("envelope_" + tag(x), env);

  const auto sc = characteristic_scales(src, x);
  w.marker("tau", x, sc.tau);
  w.marker("T0", x, sc.T0);
  w.marker("T", x, T);
  w.marker("envelope_peak", x, cut.envelope_peak);
  w.marker("envelope_peak_formula", x, cut.envelope_peak_formula);
  // zeros pile up towards t = 0; mark only the late ones a plot can resolve
  int n_min = 0;
  if (!cut.zero_index.empty()) n_min = *std::min_element(cut.zero_index.begin(), cut.zero_index.end());
  for (std::size_t k = 0; k < cut.zeros.size(); ++k)
    if (cut.zero_index[k] < n_min + 20)
      w.marker("t_n", x, cut.zeros[k], "n=" + std::to_string(cut.zero_index[k]));
  if (!cut.note.empty()) w.marker("note", x, std::nan(""), cut.note);
}

}  // namespace

RunReport reproduce_figure(int n, const std::string& out_dir, const ScenarioConfig& base) {
  if (n < 1 || n > 9) throw ConfigError("figure: expected 1..9, got " + std::to_string(n));
  FigureWriter w(n, out_dir, base);
  const auto band = BandParams::make(kOmega0, kBand);
  switch (n) {
    case 1:
      sharp_traces(w, {7.0, 14.0, 21.0}, linspace(0.02, 40.0, 2000));
      break;
    case 2: {
      sharp_traces(w, {7.0}, linspace(0.1, 150.0, 1500));
      const auto tr = transition_time(SourceParams::make(kOmega0), 7.0);
      w.marker("t_tr", 7.0, tr.numeric_root);
      w.marker("t_tr_closed_form", 7.0, tr.closed_form);
      break;
    }
    case 3:
      sharp_traces(w, {0.05, 0.45}, linspace(0.005, 4.0, 800));
      break;
    case 4:
      for (double x : {50.0, 135.0}) {
        const auto ts = linspace(1.0, 300.0, 300);
        w.table(tag(x), wave_table([&](double t) { return psi_band(band, x, t); }, band.kappa0, x, ts,
                                   w.threads(), w.errors()));
        w.table("dplus0_" + tag(x), leading_table(w, band, x, ts));
        band_markers(w, band, x);
      }
      break;
    case 5: {
      const double x = 13.5;
      const auto ts = linspace(0.5, 60.0, 600);
      w.table(tag(x), wave_table([&](double t) { return psi_band(band, x, t); }, band.kappa0, x, ts,
                                 w.threads(), w.errors()));
      w.table("dplus_" + tag(x), wave_table([&](double t) { return psi_band_detailed(band, x, t).d_plus; },
                                            band.kappa0, x, ts, w.threads(), w.errors()));
      w.table("dplus0_" + tag(x), leading_table(w, band, x, ts));
      band_markers(w, band, x);
      break;
    }
    case 6: {
      const double x = 13.5;
      const auto ts = linspace(0.5, 100.0, 1000);
      w.table(tag(x), wave_table([&](double t) { return psi_band(band, x, t); }, band.kappa0, x, ts,
                                 w.threads(), w.errors()));
      band_markers(w, band, x);
      break;
    }
    case 7: {
      const double x = 135.0;
      const auto src = SourceParams::make(kOmega0);
      const auto g = spectrogram(src, x, linspace(0.0, 600.0, 241), linspace(0.0, 2.0, 161), kWindowBand,
                                 SpectrogramMode::full, w.threads());
      w.table(tag(x), grid_table(g, w.errors()));
      w.marker("tau", x, src.tau(x));
      w.marker("kinetic_potential_crossover", x, x / 2.0);
      break;
    }
    case 8:
      frequency_cut(w, kWindowBand);
      break;
    case 9:
      frequency_cut(w, kWindowT0);
      break;
  }
  return w.finish();
}

}  // namespace evanescent::cli
