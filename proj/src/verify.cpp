#include <array>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qubeam/sweep.hpp"

namespace qubeam {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
    case CheckStatus::Error: return "ERROR";
  }
  return "?";
}

bool VerificationReport::ok() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail || c.status == CheckStatus::Error) return false;
  }
  return true;
}

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

constexpr double kOrderLow = 3.5;   // defect ratio per halving of eps for an O(eps^2) claim
constexpr double kOrderHigh = 4.5;
constexpr double kEpsSquaredConstant = 50.0;

bool second_order(double coarse, double fine) {
  const double ratio = coarse / fine;
  return ratio >= kOrderLow && ratio <= kOrderHigh;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(4);
  os << std::scientific << x;
  return os.str();
}

ModelParams with_eps(const ModelParams& p, double eps) {
  ModelParams q = p;
  q.eps = eps;
  return q;
}

template <class F>
Check run_check(std::string name, F&& body) {
  Check c{std::move(name), CheckStatus::NotApplicable, {}};
  try {
    body(c);
  } catch (const Error& e) {
    c.status = CheckStatus::Error;
    c.detail = e.what();
  }
  return c;
}

// Defects along the ladder and their per-halving ratios, all must be O(eps^2).
void ladder_verdict(Check& c, const std::array<double, 3>& d, bool bound_ok) {
  const bool order = second_order(d[0], d[1]) && second_order(d[1], d[2]);
  std::ostringstream os;
  os << "defects " << sci(d[0]) << " " << sci(d[1]) << " " << sci(d[2]) << ", ratios "
     << sci(d[0] / d[1]) << " " << sci(d[1] / d[2]) << " (want [" << kOrderLow << ", "
     << kOrderHigh << "])";
  if (!bound_ok) os << ", bound exceeded";
  c.detail = os.str();
  c.status = order && bound_ok ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace

VerificationReport verify(const SweepConfig& cfg) {
  const ModelParams base = point_params(cfg);
  const SolverOptions opts = cfg.solver();
  const std::array<double, 3> ladder{cfg.eps, cfg.eps / 2.0, cfg.eps / 4.0};
  const bool du = cfg.pol == kDownUp;
  VerificationReport rep;

  rep.checks.push_back(run_check("roots: exact vs first-order, O(eps^2)", [&](Check& c) {
    std::array<std::array<double, 3>, 4> d{};
    double worst_residual = 0.0;
    for (int i = 0; i < 3; ++i) {
      const ModelParams p = with_eps(base, ladder[i]);
      const ModeRoots ex = exact_roots(p, opts);
      const ModeRoots pe = perturbative_roots(p);
      for (const auto m : kModes) {
        d[m.flat()][i] = std::abs(ex.at(m).shift - pe.at(m).shift);
        worst_residual = std::max(worst_residual,
                                  std::abs(residual(ex.at(m), p, m.lambda)) / p.kappa(m.k));
      }
    }
    bool ok = worst_residual <= cfg.tol;
    std::ostringstream os;
    for (const auto m : kModes) {
      const auto& dm = d[m.flat()];
      ok = ok && second_order(dm[0], dm[1]) && second_order(dm[1], dm[2]);
      os << "r" << m.k << m.lambda << " ratios " << sci(dm[0] / dm[1]) << " "
         << sci(dm[1] / dm[2]) << "; ";
    }
    os << "max residual/kappa " << sci(worst_residual);
    c.detail = os.str();
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  rep.checks.push_back(run_check("amplitudes match the (a, b) pattern", [&](Check& c) {
    if (!(cfg.pol == kDownUp || cfg.pol == kUpUp)) {
      c.detail = "no closed-form pattern for " + cfg.pol.name();
      return;
    }
    const ModeRoots roots = exact_roots(base, opts);
    const TwoQubitAmplitudes pipe = amplitudes(build_block(roots, base), cfg.pol);
    const auto pattern = TwoQubitAmplitudes::from_vector(
        pattern_amplitudes(closed_form_ab(roots, base, cfg.pol), cfg.pol));
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(pipe.v[i] - pattern.v[i]));
    const double bound = kEpsSquaredConstant * base.eps * base.eps;
    c.detail = "max |v_pipeline - v_pattern| = " + sci(worst) + ", bound " + sci(bound);
    c.status = worst <= bound ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  // Closed-form y and E_S of the anti-parallel pair against the pipeline.
  auto closed_form_check = [&](const char* name, auto pipeline_minus_closed, auto zero_field) {
    return run_check(name, [&](Check& c) {
      if (!du) {
        c.detail = "closed form applies to du only";
        return;
      }
      std::array<double, 3> d{};
      bool bound_ok = true;
      const double phi = phi_closed(base).phi;
      for (int i = 0; i < 3; ++i) {
        const ModelParams p = with_eps(base, ladder[i]);
        const EntanglementReport r = full_report(p, cfg.pol, RootMethod::Exact, opts);
        if (phi == 0.0) {
          bound_ok = bound_ok && zero_field(r) <= kEpsSquaredConstant * ladder[i] * ladder[i];
          continue;
        }
        d[i] = std::abs(pipeline_minus_closed(r, ladder[i] * phi));
        bound_ok = bound_ok && d[i] <= kEpsSquaredConstant * ladder[i] * ladder[i] * phi;
      }
      if (phi == 0.0) {
        c.detail = "omega = 0: closed form is 0, pipeline within 50 eps^2";
        c.status = bound_ok ? CheckStatus::Pass : CheckStatus::Fail;
        return;
      }
      ladder_verdict(c, d, bound_ok);
    });
  };

  rep.checks.push_back(closed_form_check(
      "spectral gap: 1 - y vs eps*Phi, O(eps^2)",
      [](const EntanglementReport& r, double eps_phi) { return r.y_deficit - eps_phi; },
      [](const EntanglementReport& r) { return r.y_deficit; }));

  rep.checks.push_back(run_check("Schmidt measure: E_S vs 2 eps*Phi, O(eps^2)", [&](Check& c) {
    if (!du) {
      c.detail = "closed form applies to du only";
      return;
    }
    std::array<double, 3> d{};
    const double phi = phi_closed(base).phi;
    for (int i = 0; i < 3; ++i) {
      const EntanglementReport r =
          full_report(with_eps(base, ladder[i]), cfg.pol, RootMethod::Exact, opts);
      d[i] = std::abs(r.E_S - 2.0 * ladder[i] * phi);
      if (phi == 0.0 && !(r.E_S <= kEpsSquaredConstant * ladder[i] * ladder[i])) {
        c.status = CheckStatus::Fail;
        c.detail = "omega = 0 but E_S = " + sci(r.E_S);
        return;
      }
    }
    if (phi == 0.0) {
      c.status = CheckStatus::Pass;
      c.detail = "omega = 0: E_S within 50 eps^2 of 0";
      return;
    }
    ladder_verdict(c, d, true);
  }));

  rep.checks.push_back(run_check("truncation norm deficit 1 - N^2 vs eps*Phi", [&](Check& c) {
    if (!du) {
      c.detail = "closed form applies to du only";
      return;
    }
    const double phi = phi_closed(base).phi;
    std::ostringstream os;
    bool ok = true;
    for (double e : ladder) {
      const EntanglementReport r = full_report(with_eps(base, e), cfg.pol, RootMethod::Exact, opts);
      const double deficit = (1.0 - r.raw_norm) * (1.0 + r.raw_norm);
      const double defect = std::abs(deficit - e * phi);
      const double bound = e * e * std::max(phi, 1.0 / (base.kappa1 * base.kappa1 * base.kappa1));
      ok = ok && defect <= bound;
      os << "eps=" << sci(e) << " 1-N^2=" << sci(deficit) << " eps*Phi=" << sci(e * phi) << "; ";
    }
    c.detail = os.str();
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  rep.checks.push_back(run_check("asymptotic E_I vs exact E_I(1 - eps*Phi)", [&](Check& c) {
    if (!du) {
      c.detail = "closed form applies to du only";
      return;
    }
    const Quad phi = phi_value(Quad(base.kappa1), Quad(base.kappa2), Quad(base.omega));
    if (!(phi > 0)) {
      c.detail = "Phi = 0 at omega = 0; E_I is exactly 0";
      return;
    }
    std::array<Quad, 3> gaps;
    std::ostringstream os;
    os << "|ratio - 1| along eps*{1e-2,1e-3,1e-4}:";
    double scale = 1e-2;
    for (int i = 0; i < 3; ++i, scale *= 0.1) {
      const Quad e = Quad(base.eps) * Quad(scale);
      const Quad ratio = asymptotic_info_value(phi, e) / info_measure_deficit(Quad(e * phi));
      gaps[i] = abs(ratio - 1);
      os << " " << sci(static_cast<double>(gaps[i]));
    }
    c.detail = os.str();
    c.status = gaps[1] < gaps[0] && gaps[2] < gaps[1] ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  rep.checks.push_back(run_check("zero entanglement for parallel polarizations", [&](Check& c) {
    if (!(cfg.pol == kUpUp || cfg.pol == kDownDown)) {
      c.detail = "applies to uu and dd";
      return;
    }
    const EntanglementReport r = full_report(base, cfg.pol, RootMethod::Exact, opts);
    const double bound = kEpsSquaredConstant * base.eps * base.eps;
    c.detail = "E_I=" + sci(r.E_I) + " E_S=" + sci(r.E_S) + " bound " + sci(bound);
    c.status = r.E_I <= bound && r.E_S <= bound ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  rep.checks.push_back(run_check("pure-state identities", [&](Check& c) {
    const EntanglementReport r = full_report(base, cfg.pol, cfg.method, opts);
    const Density2& rho = r.density.rho;
    const double trace = std::abs(rho.trace() - Complex(1.0, 0.0));
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const double gap = std::abs(r.y * r.y + 4.0 * std::norm(r.amps.det) - 1.0);
    const double schmidt = std::abs(r.E_S - 0.5 * (1.0 - r.y * r.y));
    const double worst = std::max({trace, herm, gap, schmidt});
    c.detail = "max identity defect " + sci(worst);
    c.status = worst <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail;
  }));

  return rep;
}

}  // namespace qubeam
