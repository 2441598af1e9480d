#include "scenario.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace evanescent::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& v, const std::string& where, const std::string& key) {
  const std::string s = trim(v);
  char* end = nullptr;
  errno = 0;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(d))
    throw ConfigError(where + ": " + key + ": not a finite number: '" + v + "'");
  return d;
}

long to_int(const std::string& v, const std::string& where, const std::string& key) {
  const std::string s = trim(v);
  char* end = nullptr;
  errno = 0;
  const long n = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || errno == ERANGE)
    throw ConfigError(where + ": " + key + ": not an integer: '" + v + "'");
  return n;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

void apply_setting(ScenarioConfig& cfg, const std::string& key_in, const std::string& value,
                   const std::string& where) {
  std::string key = trim(key_in);
  for (auto& ch : key)
    if (ch == '-') ch = '_';
  const std::string v = trim(value);
  if (key == "mode") {
    if (v == "sharp") cfg.mode = Mode::sharp;
    else if (v == "band") cfg.mode = Mode::band;
    else if (v == "spectrogram") cfg.mode = Mode::spectrogram;
    else if (v == "freq-window" || v == "freq_window") cfg.mode = Mode::freq_window;
    else if (v == "relativistic") cfg.mode = Mode::relativistic;
    else if (v == "figure") cfg.mode = Mode::figure;
    else throw ConfigError(where + ": mode: unknown mode '" + v + "'");
  } else if (key == "omega0") {
    cfg.omega0 = to_double(v, where, key);
  } else if (key == "delta_omega" || key == "band") {
    cfg.delta_omega = to_double(v, where, key);
  } else if (key == "T" || key == "window") {
    cfg.T = to_double(v, where, key);
  } else if (key == "c") {
    cfg.c = to_double(v, where, key);
  } else if (key == "x" || key == "x_list") {
    cfg.x_list.clear();
    for (const auto& p : split(v, ',')) cfg.x_list.push_back(to_double(p, where, key));
  } else if (key == "t_min") {
    cfg.t_min = to_double(v, where, key);
  } else if (key == "t_max") {
    cfg.t_max = to_double(v, where, key);
  } else if (key == "n_t") {
    cfg.n_t = static_cast<int>(to_int(v, where, key));
  } else if (key == "t_range") {
    const auto p = split(v, ':');
    if (p.size() != 3) throw ConfigError(where + ": t_range: expected a:b:n, got '" + v + "'");
    cfg.t_min = to_double(p[0], where, key);
    cfg.t_max = to_double(p[1], where, key);
    cfg.n_t = static_cast<int>(to_int(p[2], where, key));
  } else if (key == "omega_min") {
    cfg.omega_min = to_double(v, where, key);
  } else if (key == "omega_max") {
    cfg.omega_max = to_double(v, where, key);
  } else if (key == "n_omega") {
    cfg.n_omega = static_cast<int>(to_int(v, where, key));
  } else if (key == "omega_range") {
    const auto p = split(v, ':');
    if (p.size() != 3) throw ConfigError(where + ": omega_range: expected a:b:n, got '" + v + "'");
    cfg.omega_min = to_double(p[0], where, key);
    cfg.omega_max = to_double(p[1], where, key);
    cfg.n_omega = static_cast<int>(to_int(p[2], where, key));
  } else if (key == "tol") {
    cfg.tol = to_double(v, where, key);
  } else if (key == "out" || key == "output_path") {
    if (v.empty()) throw ConfigError(where + ": out: empty path");
    cfg.output_path = v;
  } else if (key == "format") {
    if (v == "csv") cfg.format = Format::csv;
    else if (v == "json") cfg.format = Format::json;
    else throw ConfigError(where + ": format: expected csv or json, got '" + v + "'");
  } else if (key == "precision") {
    cfg.precision = static_cast<int>(to_int(v, where, key));
  } else if (key == "threads") {
    const long n = to_int(v, where, key);
    if (n < 0) throw ConfigError(where + ": threads: must be >= 0");
    cfg.threads = static_cast<unsigned>(n);
  } else if (key == "strict") {
    if (v == "true" || v == "1") cfg.strict = true;
    else if (v == "false" || v == "0") cfg.strict = false;
    else throw ConfigError(where + ": strict: expected true or false");
  } else if (key == "figure") {
    cfg.figure = static_cast<int>(to_int(v, where, key));
  } else {
    throw ConfigError(where + ": unknown key '" + key_in + "'");
  }
}

void parse_key_value(std::istream& in, const std::string& origin, ScenarioConfig& cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1), where);
  }
}

void parse_json(const std::string& text, const std::string& origin, ScenarioConfig& cfg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(origin + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  if (!j.is_object()) throw ConfigError(origin + ": top level must be an object");
  for (const auto& [key, val] : j.items()) {
    const std::string where = origin + ": key '" + key + "'";
    std::string v;
    if (val.is_string()) {
      v = val.get<std::string>();
    } else if (val.is_boolean()) {
      v = val.get<bool>() ? "true" : "false";
    } else if (val.is_number_integer()) {
      v = std::to_string(val.get<long long>());
    } else if (val.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", val.get<double>());
      v = buf;
    } else if (val.is_array()) {
      for (std::size_t i = 0; i < val.size(); ++i) {
        if (!val[i].is_number()) throw ConfigError(where + ": array entries must be numbers");
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", val[i].get<double>());
        v += (i ? "," : "") + std::string(buf);
      }
    } else {
      throw ConfigError(where + ": unsupported value type");
    }
    apply_setting(cfg, key, v, where);
  }
}

void load_config(const std::string& path, ScenarioConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    parse_json(text, path, cfg);
  } else {
    std::istringstream lines(text);
    parse_key_value(lines, path, cfg);
  }
}

void validate(const ScenarioConfig& cfg) {
  auto fail = [](const std::string& m) { throw ConfigError("config: " + m); };
  if (cfg.precision < 1 || cfg.precision > 17) fail("precision must be in 1..17");
  if (!(cfg.tol > 0.0)) fail("tol must be > 0");
  if (cfg.mode == Mode::figure) {
    if (cfg.figure < 1 || cfg.figure > 9) fail("figure must be in 1..9");
    return;
  }
  if (!(cfg.omega0 > 0.0 && cfg.omega0 < 1.0) && cfg.mode != Mode::relativistic)
    fail("omega0 must lie in (0, 1)");
  if (cfg.x_list.empty()) fail("x is required");
  for (double x : cfg.x_list)
    if (!(x >= 0.0)) fail("x values must be >= 0");
  if (cfg.n_t < 2) fail("n_t must be >= 2");
  if (!(cfg.t_min < cfg.t_max)) fail("t_min must be < t_max");
  switch (cfg.mode) {
    case Mode::band:
    case Mode::freq_window:
      if (!cfg.delta_omega) fail("delta_omega is required for this mode");
      if (!(*cfg.delta_omega > 0.0)) fail("delta_omega must be > 0");
      break;
    case Mode::spectrogram:
      if (!cfg.T) fail("T is required for spectrogram mode");
      if (!(*cfg.T > 0.0)) fail("T must be > 0");
      if (!cfg.omega_min || !cfg.omega_max || !cfg.n_omega) fail("omega range is required for spectrogram mode");
      if (*cfg.n_omega < 1) fail("n_omega must be >= 1");
      if (*cfg.omega_min > *cfg.omega_max) fail("omega_min must be <= omega_max");
      break;
    case Mode::relativistic:
      if (!cfg.c) fail("c is required for relativistic mode");
      if (!(*cfg.c > 0.0)) fail("c must be > 0");
      break;
    default:
      break;
  }
  if (cfg.mode != Mode::sharp && cfg.mode != Mode::band)
    for (double x : cfg.x_list)
      if (!(x > 0.0)) fail("x values must be > 0 for this mode");
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
  return v;
}

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::string quoted(const std::string& s) {
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + '"';
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

void write_table(const std::string& path, const Table& table, Format format, int precision) {
  auto out = open_out(path);
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i], precision);
      out << '\n';
    }
    return;
  }
  out << "{\"columns\":[";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << json_string(table.columns[i]);
  out << "],\"rows\":[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "[";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "");
      out << (std::isfinite(row[i]) ? format_number(row[i], precision) : "null");
    }
    out << (r + 1 < table.rows.size() ? "],\n" : "]\n");
  }
  out << "]}\n";
}

void write_errors(const std::string& path, const std::vector<PointError>& errors, int precision) {
  auto out = open_out(path);
  out << "x,t,omega,message\n";
  for (const auto& e : errors)
    out << format_number(e.x, precision) << ',' << format_number(e.t, precision) << ','
        << format_number(e.omega, precision) << ',' << quoted(e.message) << '\n';
}

void write_markers(const std::string& path, const std::vector<Marker>& markers, int precision) {
  auto out = open_out(path);
  out << "label,x,value,note\n";
  for (const auto& m : markers)
    out << m.label << ',' << format_number(m.x, precision) << ',' << format_number(m.value, precision)
        << ',' << quoted(m.note) << '\n';
}

int exit_code(const RunReport& report, bool strict) { return strict && report.failures > 0 ? 3 : 0; }

}  // namespace evanescent::cli
