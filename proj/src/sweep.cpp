#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include "qubeam/sweep.hpp"

#ifndef QUBEAM_VERSION
#define QUBEAM_VERSION "0.0.0"
#endif

namespace qubeam {

std::string_view version() { return QUBEAM_VERSION; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

SweepRow evaluate_point(const SweepConfig& cfg, double omega, double delta_kappa) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SweepRow row{omega, delta_kappa, cfg.kappa1 + delta_kappa, nan, nan, nan, nan, nan, nan, "ok"};
  try {
    const ModelParams p =
        make_params(cfg.kappa1, row.kappa2, omega, cfg.eps, cfg.resonance_margin);
    const EntanglementReport rep = full_report(p, cfg.pol, cfg.method, cfg.solver());
    row.y = rep.y;
    row.E_I = rep.E_I;
    row.E_S = rep.E_S;
    row.raw_norm = rep.raw_norm;
    if (rep.closed_form != ClosedFormKind::None) {
      row.E_I_asymptotic = rep.E_I_asymptotic;
      row.E_S_closed = rep.E_S_closed;
    }
  } catch (const Error& e) {
    row.status = std::string(to_string(e.code()));
  }
  return row;
}

namespace {

unsigned worker_count(const SweepConfig& cfg, std::size_t jobs) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

SweepTable run_sweep(const SweepConfig& cfg) {
  SweepTable table;
  table.config = cfg;
  table.omegas = cfg.omega_grid();
  table.dks = cfg.dk_grid();
  const std::size_t n = table.omegas.size() * table.dks.size();
  table.rows.resize(n);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const std::size_t wi = i / table.dks.size();
      const std::size_t di = i % table.dks.size();
      table.rows[i] = evaluate_point(cfg, table.omegas[wi], table.dks[di]);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = worker_count(cfg, n);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }

  table.failures = static_cast<std::size_t>(
      std::count_if(table.rows.begin(), table.rows.end(), [](const SweepRow& r) { return !r.ok(); }));
  if (n > 0 && table.failures == n) {
    throw Error(ErrorCode::AllRowsFailed, "every grid point failed (first: " + table.rows[0].status + ")");
  }
  return table;
}

void write_csv(const SweepTable& table, std::ostream& os) {
  os << "# qubeam " << version() << "\n";
  for (const auto& [k, v] : describe(table.config)) os << "# " << k << "=" << v << "\n";
  os << "# rows=" << table.rows.size() << " failures=" << table.failures << "\n";
  os << kCsvHeader << "\n";
  for (const SweepRow& r : table.rows) {
    os << format_number(r.omega) << ',' << format_number(r.delta_kappa) << ','
       << format_number(r.kappa2) << ',' << format_number(r.y) << ',' << format_number(r.E_I)
       << ',' << format_number(r.E_S) << ',' << format_number(r.E_I_asymptotic) << ','
       << format_number(r.E_S_closed) << ',' << format_number(r.raw_norm) << ',' << r.status
       << "\n";
  }
}

void write_csv_file(const SweepTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

void write_matrix(const SweepTable& table, SweepColumn column, std::ostream& os) {
  auto pick = [column](const SweepRow& r) {
    switch (column) {
      case SweepColumn::E_I: return r.E_I;
      case SweepColumn::E_S: return r.E_S;
      case SweepColumn::E_I_asymptotic: return r.E_I_asymptotic;
      case SweepColumn::E_S_closed: return r.E_S_closed;
      case SweepColumn::y: return r.y;
    }
    return r.E_S;
  };
  os << table.dks.size();
  for (double dk : table.dks) os << ' ' << format_number(dk);
  os << "\n";
  for (std::size_t wi = 0; wi < table.omegas.size(); ++wi) {
    os << format_number(table.omegas[wi]);
    for (std::size_t di = 0; di < table.dks.size(); ++di) os << ' ' << format_number(pick(table.at(wi, di)));
    os << "\n";
  }
}

}  // namespace qubeam
