#pragma once

#include <functional>
#include <string>
#include <vector>

#include "evanescent/core_model.hpp"
#include "evanescent/sharp_source.hpp"
#include "evanescent/tf_analysis.hpp"
#include "scenario.hpp"

namespace evanescent::cli {

using WaveFn = std::function<cplx(double)>;

const std::vector<std::string>& wave_columns();
const std::vector<std::string>& spectrogram_columns();

double stencil_step(double x, double t);

Table sharp_table(const SourceParams& src, double x, const std::vector<double>& ts, unsigned threads,
                  std::vector<PointError>& errors);

// Wave columns for any psi(t); omega_bar by a central phase difference, kappa sets A.
Table wave_table(const WaveFn& f, double kappa, double x, const std::vector<double>& ts,
                 unsigned threads, std::vector<PointError>& errors);

Table grid_table(const SpectrogramGrid& g, std::vector<PointError>& errors);

std::string extension(Format f);
std::string x_tag(double x);

}  // namespace evanescent::cli
