#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qubeam/sweep.hpp"

namespace {

using namespace qubeam;

struct Flags {
  std::string config_path;
  KeyValues overrides;
  bool csv = false;
  bool matrix = false;
  bool machine = false;
};

std::string mode_label(ModeIndex m) { return std::to_string(m.k) + std::to_string(m.lambda); }

int cmd_roots(const SweepConfig& cfg, const Flags& flags) {
  const ModelParams p = point_params(cfg);
  const ModeRoots exact = exact_roots(p, cfg.solver());
  const ModeRoots pert = perturbative_roots(p);
  if (flags.csv) {
    std::cout << "k,lambda,r_exact,r_perturbative,residual,defect\n";
  } else {
    std::cout << std::left << std::setw(3) << "k" << std::setw(8) << "lambda" << std::setw(26)
              << "r_exact" << std::setw(26) << "r_perturbative" << std::setw(26) << "residual"
              << "defect\n";
  }
  for (const auto m : kModes) {
    const std::string row[] = {
        std::to_string(m.k),
        std::to_string(m.lambda),
        format_number(exact.at(m).value()),
        format_number(pert.at(m).value()),
        format_number(residual(exact.at(m), p, m.lambda)),
        format_number(exact.at(m).shift - pert.at(m).shift),
    };
    if (flags.csv) {
      std::cout << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << ',' << row[4]
                << ',' << row[5] << "\n";
    } else {
      std::cout << std::left << std::setw(3) << row[0] << std::setw(8) << row[1] << std::setw(26)
                << row[2] << std::setw(26) << row[3] << std::setw(26) << row[4] << row[5] << "\n";
    }
  }
  return 0;
}

int cmd_block(const SweepConfig& cfg) {
  const ModelParams p = point_params(cfg);
  const BogoliubovBlock b = build_block(solve_roots(p, cfg.method, cfg.solver()), p);
  std::cout << "matrix,row,col,re,im\n";
  for (const char* name : {"u", "v"}) {
    const PhotonMatrix& m = name[0] == 'u' ? b.u : b.v;
    for (const auto row : kModes) {
      for (const auto col : kModes) {
        const Complex z = m(row.flat(), col.flat());
        std::cout << name << ',' << mode_label(row) << ',' << mode_label(col) << ','
                  << format_number(z.real()) << ',' << format_number(z.imag()) << "\n";
      }
    }
  }
  for (const auto m : kModes) {
    std::cout << "q," << m.k << ',' << m.lambda << ',' << format_number(b.q[m.k - 1][m.lambda - 1])
              << ",0\n";
  }
  return 0;
}

int cmd_state(const SweepConfig& cfg, const Flags& flags) {
  const ModelParams p = point_params(cfg);
  const TwoQubitAmplitudes a =
      amplitudes(build_block(solve_roots(p, cfg.method, cfg.solver()), p), cfg.pol);
  if (flags.machine) {
    std::cout << "config=" << cfg.pol.name() << "\n";
    for (int i = 0; i < 4; ++i) {
      std::cout << "v" << i + 1 << "_re=" << format_number(a.v[i].real()) << "\n"
                << "v" << i + 1 << "_im=" << format_number(a.v[i].imag()) << "\n";
    }
    std::cout << "raw_norm=" << format_number(a.raw_norm) << "\n";
    return 0;
  }
  std::cout << "config   " << cfg.pol.name() << "\n";
  const char* basis[] = {"|00>", "|01>", "|10>", "|11>"};
  for (int i = 0; i < 4; ++i) {
    std::cout << "v" << i + 1 << " " << basis[i] << "  " << std::setw(26) << std::left
              << format_number(a.v[i].real()) << format_number(a.v[i].imag()) << "i\n";
  }
  std::cout << "raw_norm " << format_number(a.raw_norm) << "\n";
  return 0;
}

int cmd_measures(const SweepConfig& cfg, const Flags& flags) {
  const ModelParams p = point_params(cfg);
  const EntanglementReport r = full_report(p, cfg.pol, cfg.method, cfg.solver());
  const bool closed = r.closed_form != ClosedFormKind::None;
  const std::pair<std::string, std::string> fields[] = {
      {"config", cfg.pol.name()},
      {"method", cfg.method == RootMethod::Exact ? "exact" : "pert"},
      {"y", format_number(r.y)},
      {"one_minus_y", format_number(r.y_deficit)},
      {"lambda_min", format_number(r.density.eigs[0])},
      {"lambda_max", format_number(r.density.eigs[1])},
      {"E_I", format_number(r.E_I)},
      {"E_S", format_number(r.E_S)},
      {"raw_norm", format_number(r.raw_norm)},
      {"Phi", closed ? format_number(r.Phi) : "nan"},
      {"y_closed", closed ? format_number(r.y_closed) : "nan"},
      {"E_I_asymptotic", closed ? format_number(r.E_I_asymptotic) : "nan"},
      {"E_S_closed", closed ? format_number(r.E_S_closed) : "nan"},
  };
  for (const auto& [k, v] : fields) {
    if (flags.machine) {
      std::cout << k << "=" << v << "\n";
    } else {
      std::cout << std::left << std::setw(16) << k << v << "\n";
    }
  }
  return 0;
}

std::string stem_of(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

int cmd_sweep(const SweepConfig& cfg, const Flags& flags) {
  const SweepTable table = run_sweep(cfg);
  if (cfg.out_path == "-") {
    write_csv(table, std::cout);
  } else {
    write_csv_file(table, cfg.out_path);
  }
  if (flags.matrix) {
    const std::string stem = cfg.out_path == "-" ? "sweep" : stem_of(cfg.out_path);
    for (auto [suffix, col] : {std::pair{".E_I.dat", SweepColumn::E_I},
                               std::pair{".E_S.dat", SweepColumn::E_S}}) {
      std::ofstream out(stem + suffix, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::IoError, "cannot write " + stem + suffix);
      write_matrix(table, col, out);
    }
  }
  std::cerr << "sweep: " << table.rows.size() << " rows, " << table.failures << " failed ("
            << format_number(100.0 * static_cast<double>(table.failures) /
                             static_cast<double>(table.rows.size()))
            << "%)\n";
  return 0;
}

int cmd_verify(const SweepConfig& cfg) {
  const VerificationReport rep = verify(cfg);
  for (const Check& c : rep.checks) {
    std::cout << std::left << std::setw(6) << to_string(c.status) << c.name << "\n      "
              << c.detail << "\n";
  }
  std::cout << (rep.ok() ? "verify: all checks passed\n" : "verify: some checks failed\n");
  return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon entanglement through a magnetized electron medium"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(qubeam::version()));

  Flags flags;
  auto value_flag = [&](const std::string& name, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags.overrides.insert_or_assign(key, v); },
        help);
  };
  value_flag("--kappa1", "kappa1", "first photon frequency");
  value_flag("--kappa2", "kappa2", "second photon frequency (point commands)");
  value_flag("--omega", "omega", "cyclotron frequency (point commands)");
  value_flag("--eps", "eps", "coupling, frequency unit squared");
  value_flag("--pol", "pol", "polarization pair: uu, ud, du or dd");
  value_flag("--method", "method", "root method: exact or pert");
  value_flag("--tol", "tol", "relative root tolerance");
  value_flag("--dk-min", "dk_min", "sweep: smallest kappa2 - kappa1");
  value_flag("--dk-max", "dk_max", "sweep: largest kappa2 - kappa1");
  value_flag("--dk-steps", "dk_steps", "sweep: delta-kappa grid points");
  value_flag("--omega-min", "omega_min", "sweep: smallest omega");
  value_flag("--omega-max", "omega_max", "sweep: largest omega");
  value_flag("--omega-steps", "omega_steps", "sweep: omega grid points");
  value_flag("--out", "out", "sweep output CSV path ('-' for stdout)");
  app.add_option("--config", flags.config_path, "key=value configuration file");
  app.add_flag("--csv", flags.csv, "roots: CSV output");
  app.add_flag("--matrix", flags.matrix, "sweep: also write gnuplot matrix files");
  app.add_flag("--machine", flags.machine, "state/measures: key=value output");

  auto* roots = app.add_subcommand("roots", "dispersion roots, exact and first-order");
  auto* block = app.add_subcommand("block", "u, v and q of the photon block as CSV");
  auto* state = app.add_subcommand("state", "two-photon amplitudes");
  auto* measures = app.add_subcommand("measures", "entanglement report at one point");
  auto* sweep = app.add_subcommand("sweep", "grid sweep over omega and delta-kappa");
  auto* verify = app.add_subcommand("verify", "closed-form cross-checks at one point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    SweepConfig cfg = flags.config_path.empty()
                          ? parse_config({}, flags.overrides)
                          : parse_config_file(flags.config_path, flags.overrides);
    if (const char* env = std::getenv("QUBEAM_THREADS")) {
      try {
        cfg.threads = static_cast<unsigned>(std::max(0, std::stoi(env)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "QUBEAM_THREADS must be an integer");
      }
    }
    if (roots->parsed()) return cmd_roots(cfg, flags);
    if (block->parsed()) return cmd_block(cfg);
    if (state->parsed()) return cmd_state(cfg, flags);
    if (measures->parsed()) return cmd_measures(cfg, flags);
    if (sweep->parsed()) return cmd_sweep(cfg, flags);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "qubeam: " << e.what() << "\n";
    return is_input_error(e.code()) ? 1 : 2;
  }
  return 0;
}
