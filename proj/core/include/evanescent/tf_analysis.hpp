#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evanescent/band_source.hpp"
#include "evanescent/core_model.hpp"

namespace evanescent {

inline constexpr double kSpectrogramNorm = kPi * kPi / 2.0;

using Signal = std::function<cplx(double)>;

struct StftOptions {
  double abs_tol = 1e-10;
  // signal is taken as zero below this time
  std::optional<double> onset;
};

// (1/sqrt(2 pi)) int_{t-T/2}^{t+T/2} e^{i omega s} signal(s) ds
cplx stft_numeric(const Signal& signal, double T, double omega, double t,
                  const StftOptions& opt = {});

// Start of the window part handed to quadrature for the exact wave; below it the
// wave is replaced by its endpoint term.
double stft_fast_cutoff(double x, double rel_tol = 1e-6);

// stFt of the exact sharp-onset wave.
cplx stft_exact(const SourceParams& src, double x, double T, double omega, double t);

enum class Component { pole, saddle };

struct SaddleValidity {
  double phase_error = 0.0;  // x^2 T^2 / (16 t^3)
  double window_ratio = 0.0; // T / t
  bool ok = false;
};

SaddleValidity saddle_validity(double x, double T, double t);

cplx stft_closed(Component component, const SourceParams& src, double x, double t, double omega,
                 double T);

double alpha(const SourceParams& src, double x, double t);
double beta(const SourceParams& src, double x, double t);
double saddle_spectrogram(const SourceParams& src, double x, double t, double omega, double T);

enum class SpectrogramMode { full, saddle_only };

struct SpectrogramGrid {
  std::vector<double> t_axis;
  std::vector<double> omega_axis;
  std::vector<double> values;        // row-major, t outer
  std::vector<unsigned char> failed; // per cell
  std::vector<unsigned char> saddle_ok;
  double T = 0.0;
  double x = 0.0;
  static constexpr double N = kSpectrogramNorm;

  double at(std::size_t it, std::size_t iw) const { return values[it * omega_axis.size() + iw]; }
};

SpectrogramGrid spectrogram(const SourceParams& src, double x, const std::vector<double>& t_axis,
                            const std::vector<double>& omega_axis, double T, SpectrogramMode mode,
                            unsigned threads = 1);

struct FrequencyCut {
  std::vector<double> t_axis;
  std::vector<double> S;      // saddle spectrogram at omega0
  std::vector<double> envelope;
  std::vector<double> zeros;  // all t_n inside the t axis
  std::vector<int> zero_index;
  double envelope_peak = 0.0;
  double envelope_peak_formula = 0.0;
  double growth_exponent = 0.0;
  double decay_exponent = 0.0;
  int zeros_after_tau = 0;
  bool single_bump = false;
  std::string note;
};

// n-th zero of S_s(t, omega0); empty when n T0 / T <= 1.
std::optional<double> zero_time(const SourceParams& src, double x, double T, int n);

FrequencyCut signal_frequency_cut(const SourceParams& src, double x, double T,
                                  const std::vector<double>& t_axis);

struct FreqWindowTrace {
  std::vector<double> t_axis;
  std::vector<double> S_prime;
  std::vector<unsigned char> failed;
  double constant = kSpectrogramNorm;
};

FreqWindowTrace freq_window_spectrogram(const BandParams& band, double x,
                                        const std::vector<double>& t_axis, unsigned threads = 1);

}  // namespace evanescent
