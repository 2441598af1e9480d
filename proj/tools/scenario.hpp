#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evanescent::cli {

enum class Mode { sharp, band, spectrogram, freq_window, relativistic, figure };
enum class Format { csv, json };

struct ScenarioConfig {
  Mode mode = Mode::sharp;
  double omega0 = 0.5;
  std::optional<double> delta_omega;
  std::optional<double> T;
  std::optional<double> c;
  std::vector<double> x_list;
  double t_min = 0.0;
  double t_max = 0.0;
  int n_t = 0;
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  std::optional<int> n_omega;
  double tol = 1e-10;
  std::string output_path = "out";
  Format format = Format::csv;
  int precision = 12;
  unsigned threads = 1;
  bool strict = false;
  int figure = 0;
};

// Thrown for anything wrong with the configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sets one key. `where` prefixes the error message (file:line or flag name).
void apply_setting(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where);

// key=value, one per line, '#' starts a comment.
void parse_key_value(std::istream& in, const std::string& origin, ScenarioConfig& cfg);
void parse_json(const std::string& text, const std::string& origin, ScenarioConfig& cfg);
// Picks JSON when the first non-blank character is '{'.
void load_config(const std::string& path, ScenarioConfig& cfg);

void validate(const ScenarioConfig& cfg);

std::vector<double> linspace(double a, double b, int n);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct PointError {
  double x = 0.0;
  double t = 0.0;
  double omega = 0.0;
  std::string message;
};

struct Marker {
  std::string label;
  double x = 0.0;
  double value = 0.0;
  std::string note;
};

std::string format_number(double v, int precision);
void write_table(const std::string& path, const Table& table, Format format, int precision);
void write_errors(const std::string& path, const std::vector<PointError>& errors, int precision);
void write_markers(const std::string& path, const std::vector<Marker>& markers, int precision);

struct RunReport {
  std::vector<std::string> files;
  std::size_t failures = 0;
};

RunReport run_scenario(const ScenarioConfig& cfg);

// Writes fig<n>_*.{csv,json} under out_dir. Format, precision and threads come from `base`.
RunReport reproduce_figure(int n, const std::string& out_dir, const ScenarioConfig& base);

int exit_code(const RunReport& report, bool strict);

}  // namespace evanescent::cli
