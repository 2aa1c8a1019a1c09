#include "qubeam/entangle.hpp"

#include <algorithm>
#include <sstream>

#include "qubeam/bogoliubov.hpp"

namespace qubeam {

ReducedDensity reduced_density(const TwoQubitAmplitudes& amps) {
  if (!amps.normalized) {
    throw Error(ErrorCode::DomainError, "reduced density needs normalized amplitudes");
  }
  const AmplitudeMatrix m = amps.matrix();
  ReducedDensity out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.rho(i, j) = m[i][0] * std::conj(m[j][0]) + m[i][1] * std::conj(m[j][1]);
    }
  }
  out.det = std::norm(amps.det);
  const double disc = std::max(0.0, 1.0 - 4.0 * out.det);
  out.y = std::sqrt(disc);
  out.y_deficit = 4.0 * out.det / (1.0 + out.y);
  const double large = 0.5 * (1.0 + out.y);
  out.eigs = {out.det / large, large};
  return out;
}

double schmidt_measure(const ReducedDensity& rho) {
  return 2.0 * rho.eigs[0] * rho.eigs[1];
}

PhiClosed phi_closed(const ModelParams& p) {
  const double lower = (p.omega - p.kappa1) / p.kappa1;
  if (!(lower * lower > kResonancePoleFloor)) {
    throw Error(ErrorCode::ResonancePole, "omega sits on the kappa1 resonance");
  }
  PhiClosed out;
  out.phi = phi_value(p.kappa1, p.kappa2, p.omega);
  out.eps_phi = p.eps * out.phi;
  out.y_closed = 1.0 - out.eps_phi;
  if (!(out.eps_phi < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "eps*Phi = " << out.eps_phi << " is not below 1";
    throw Error(ErrorCode::RangeViolation, os.str());
  }
  return out;
}

double asymptotic_info(const ModelParams& p) {
  const PhiClosed phi = phi_closed(p);
  return asymptotic_info_value(phi.phi, p.eps);
}

namespace {

template <class F>
auto staged(const char* stage, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.with_stage(stage);
  }
}

}  // namespace

EntanglementReport full_report(const ModelParams& params, PolarizationConfig config,
                               RootMethod method, const SolverOptions& opts) {
  EntanglementReport rep;
  rep.config = config;
  rep.method = method;
  rep.roots = staged("roots", [&] { return solve_roots(params, method, opts); });
  const BogoliubovBlock block = staged("block", [&] { return build_block(rep.roots, params); });
  rep.amps = staged("amplitudes", [&] { return amplitudes(block, config); });
  rep.density = staged("density", [&] { return reduced_density(rep.amps); });
  rep.y = rep.density.y;
  rep.y_deficit = rep.density.y_deficit;
  rep.E_I = staged("measures", [&] { return info_measure(rep.density); });
  rep.E_S = schmidt_measure(rep.density);
  rep.raw_norm = rep.amps.raw_norm;

  if (config == kDownUp) {
    rep.closed_form = ClosedFormKind::AntiParallel;
    rep.ab = staged("closed-form", [&] { return closed_form_ab(rep.roots, params, config); });
    const PhiClosed phi = staged("closed-form", [&] { return phi_closed(params); });
    rep.Phi = phi.phi;
    rep.y_closed = phi.y_closed;
    rep.E_S_closed = 2.0 * phi.eps_phi;
    rep.E_I_asymptotic = phi.phi > 0.0
                             ? staged("closed-form", [&] { return asymptotic_info(params); })
                             : 0.0;
  } else if (config == kUpUp) {
    rep.closed_form = ClosedFormKind::Parallel;
    rep.ab = staged("closed-form", [&] { return closed_form_ab(rep.roots, params, config); });
    rep.Phi = 0.0;
    rep.y_closed = 1.0;
    rep.E_S_closed = 0.0;
    rep.E_I_asymptotic = 0.0;
  }
  return rep;
}

}  // namespace qubeam
