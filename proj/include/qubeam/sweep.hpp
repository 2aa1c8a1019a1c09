#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qubeam/entangle.hpp"

namespace qubeam {

std::string_view version();

/// Settings shared by the point commands and the grid sweep.
struct SweepConfig {
  double kappa1 = 2500.0;
  double kappa2 = 3000.0;  // point commands only
  double omega = 0.5;      // point commands only
  double dk_min = 10.0;
  double dk_max = 3500.0;
  int dk_steps = 64;
  double omega_min = 0.0;
  double omega_max = 0.5;
  int omega_steps = 64;
  double eps = 0.1;
  PolarizationConfig pol = kDownUp;
  RootMethod method = RootMethod::Exact;
  double tol = 1e-12;
  double resonance_margin = kDefaultResonanceMargin;
  std::string out_path = "sweep.csv";
  unsigned threads = 0;  // 0: hardware concurrency

  std::vector<double> omega_grid() const;
  std::vector<double> dk_grid() const;
  SolverOptions solver() const;

  bool operator==(const SweepConfig&) const = default;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Reads `key = value` lines; blank lines and `#` comments are skipped.
/// Throws ParseError naming the source and line.
KeyValues parse_key_values(std::string_view text, std::string_view source = "<config>");

/// Defaults, then file keys, then `overrides` (command-line flags).
/// Unknown keys and malformed numbers raise ParseError; invariant violations
/// are collected into a single ValidationError.
SweepConfig parse_config(const KeyValues& file_keys, const KeyValues& overrides = {});
SweepConfig parse_config_file(const std::string& path, const KeyValues& overrides = {});

/// Every violated sweep invariant, one message each. Empty when valid.
std::vector<std::string> validation_errors(const SweepConfig& cfg);

/// Validated single-point parameters (kappa1, kappa2, omega, eps).
ModelParams point_params(const SweepConfig& cfg);

/// Config echo as key=value pairs in a fixed order.
std::vector<std::pair<std::string, std::string>> describe(const SweepConfig& cfg);

struct SweepRow {
  double omega = 0.0;
  double delta_kappa = 0.0;
  double kappa2 = 0.0;
  double y = 0.0;
  double E_I = 0.0;
  double E_S = 0.0;
  double E_I_asymptotic = 0.0;
  double E_S_closed = 0.0;
  double raw_norm = 0.0;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct SweepTable {
  SweepConfig config;
  std::vector<double> omegas;
  std::vector<double> dks;
  std::vector<SweepRow> rows;  // omega-major, then delta_kappa
  std::size_t failures = 0;

  const SweepRow& at(std::size_t omega_index, std::size_t dk_index) const {
    return rows[omega_index * dks.size() + dk_index];
  }
};

/// One full_report per grid point, evaluated in parallel and assembled in
/// grid order. Failing points carry their error code in `status`.
/// Throws AllRowsFailed if nothing succeeded.
SweepTable run_sweep(const SweepConfig& cfg);

SweepRow evaluate_point(const SweepConfig& cfg, double omega, double delta_kappa);

/// 17 significant digits, independent of the global locale.
std::string format_number(double x);

inline constexpr std::string_view kCsvHeader =
    "omega,delta_kappa,kappa2,y,E_I,E_S,E_I_asymptotic,E_S_closed,raw_norm,status";

void write_csv(const SweepTable& table, std::ostream& os);
void write_csv_file(const SweepTable& table, const std::string& path);

enum class SweepColumn { E_I, E_S, E_I_asymptotic, E_S_closed, y };

/// gnuplot "nonuniform matrix": first line N dk_1..dk_N, then omega z_1..z_N.
void write_matrix(const SweepTable& table, SweepColumn column, std::ostream& os);

enum class CheckStatus { Pass, Fail, NotApplicable, Error };
std::string_view to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
};

/// Cross-checks at the config's point against the closed-form results, using
/// the ladder eps, eps/2, eps/4 where a convergence order is claimed.
VerificationReport verify(const SweepConfig& cfg);

}  // namespace qubeam
