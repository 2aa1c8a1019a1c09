#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "qubeam/sweep.hpp"

namespace qubeam {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError,
                "key '" + std::string(key) + "': not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError,
                "key '" + std::string(key) + "': not an integer: '" + std::string(text) + "'");
  }
  return value;
}

RootMethod parse_method(std::string_view text) {
  if (text == "exact") return RootMethod::Exact;
  if (text == "pert" || text == "perturbative") return RootMethod::Perturbative;
  throw Error(ErrorCode::ParseError, "method must be 'exact' or 'pert' (got '" +
                                         std::string(text) + "')");
}

void apply(SweepConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "kappa1") cfg.kappa1 = parse_double(key, value);
  else if (key == "kappa2") cfg.kappa2 = parse_double(key, value);
  else if (key == "omega") cfg.omega = parse_double(key, value);
  else if (key == "eps") cfg.eps = parse_double(key, value);
  else if (key == "dk_min") cfg.dk_min = parse_double(key, value);
  else if (key == "dk_max") cfg.dk_max = parse_double(key, value);
  else if (key == "dk_steps") cfg.dk_steps = parse_int(key, value);
  else if (key == "omega_min") cfg.omega_min = parse_double(key, value);
  else if (key == "omega_max") cfg.omega_max = parse_double(key, value);
  else if (key == "omega_steps") cfg.omega_steps = parse_int(key, value);
  else if (key == "tol") cfg.tol = parse_double(key, value);
  else if (key == "resonance_margin") cfg.resonance_margin = parse_double(key, value);
  else if (key == "pol") cfg.pol = PolarizationConfig::parse(value);
  else if (key == "method") cfg.method = parse_method(value);
  else if (key == "out") cfg.out_path = std::string(value);
  else if (key == "threads") cfg.threads = static_cast<unsigned>(std::max(0, parse_int(key, value)));
  else throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  std::vector<double> g;
  if (steps < 1) return g;
  g.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  }
  if (steps > 1) g.back() = hi;
  return g;
}

}  // namespace

KeyValues parse_key_values(std::string_view text, std::string_view source) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto where = std::string(source) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, where + ": expected key=value, got '" + std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorCode::ParseError, where + ": empty key");
    try {
      SweepConfig probe;
      apply(probe, key, value);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
    kv.insert_or_assign(std::string(key), std::string(value));
  }
  return kv;
}

std::vector<double> SweepConfig::omega_grid() const {
  return linear_grid(omega_min, omega_max, omega_steps);
}

std::vector<double> SweepConfig::dk_grid() const { return linear_grid(dk_min, dk_max, dk_steps); }

SolverOptions SweepConfig::solver() const {
  SolverOptions o;
  o.tol = tol;
  return o;
}

std::vector<std::string> validation_errors(const SweepConfig& c) {
  std::vector<std::string> errs;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  need(std::isfinite(c.kappa1) && c.kappa1 > 0.0, "kappa1 must be positive");
  need(std::isfinite(c.eps) && c.eps > 0.0, "eps must be positive");
  need(c.dk_steps >= 2, "dk_steps must be >= 2");
  need(c.omega_steps >= 2, "omega_steps must be >= 2");
  need(std::isfinite(c.dk_min) && c.dk_min > 0.0, "dk_min must be > 0 (kappa1 == kappa2 is degenerate)");
  need(std::isfinite(c.dk_max) && c.dk_max >= c.dk_min, "dk_max must be >= dk_min");
  need(std::isfinite(c.omega_min) && c.omega_min >= 0.0, "omega_min must be >= 0");
  need(std::isfinite(c.omega_max) && c.omega_max >= c.omega_min, "omega_max must be >= omega_min");
  need(std::isfinite(c.tol) && c.tol > 0.0, "tol must be positive");
  need(c.resonance_margin >= 0.0 && c.resonance_margin < 1.0, "resonance_margin must lie in [0, 1)");
  if (!errs.empty()) return errs;

  // Every grid point must be a valid, non-resonant parameter set.
  for (double w : c.omega_grid()) {
    for (double dk : c.dk_grid()) {
      try {
        validate(ModelParams{c.kappa1, c.kappa1 + dk, w, c.eps}, c.resonance_margin);
      } catch (const Error& e) {
        errs.push_back("grid point omega=" + format_number(w) + " dk=" + format_number(dk) +
                       ": " + e.what());
        return errs;
      }
    }
  }
  return errs;
}

SweepConfig parse_config(const KeyValues& file_keys, const KeyValues& overrides) {
  SweepConfig cfg;
  for (const auto& [k, v] : file_keys) apply(cfg, k, v);
  for (const auto& [k, v] : overrides) apply(cfg, k, v);
  const auto errs = validation_errors(cfg);
  if (!errs.empty()) {
    std::string msg;
    for (const auto& e : errs) msg += (msg.empty() ? "" : "; ") + e;
    throw Error(ErrorCode::ValidationError, msg);
  }
  return cfg;
}

SweepConfig parse_config_file(const std::string& path, const KeyValues& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(parse_key_values(ss.str(), path), overrides);
}

ModelParams point_params(const SweepConfig& c) {
  return make_params(c.kappa1, c.kappa2, c.omega, c.eps, c.resonance_margin);
}

std::vector<std::pair<std::string, std::string>> describe(const SweepConfig& c) {
  return {
      {"kappa1", format_number(c.kappa1)},
      {"kappa2", format_number(c.kappa2)},
      {"omega", format_number(c.omega)},
      {"eps", format_number(c.eps)},
      {"pol", c.pol.name()},
      {"method", c.method == RootMethod::Exact ? "exact" : "pert"},
      {"tol", format_number(c.tol)},
      {"resonance_margin", format_number(c.resonance_margin)},
      {"dk_min", format_number(c.dk_min)},
      {"dk_max", format_number(c.dk_max)},
      {"dk_steps", std::to_string(c.dk_steps)},
      {"omega_min", format_number(c.omega_min)},
      {"omega_max", format_number(c.omega_max)},
      {"omega_steps", std::to_string(c.omega_steps)},
  };
}

}  // namespace qubeam
