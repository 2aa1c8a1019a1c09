#include "qubeam/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qubeam/error.hpp"

namespace qubeam {

namespace {

std::string describe(double kappa1, double kappa2, double omega, double eps) {
  std::ostringstream os;
  os.precision(17);
  os << "kappa1=" << kappa1 << " kappa2=" << kappa2 << " omega=" << omega << " eps=" << eps;
  return os.str();
}

}  // namespace

void validate(const ModelParams& p, double resonance_margin) {
  const auto where = describe(p.kappa1, p.kappa2, p.omega, p.eps);
  if (!std::isfinite(p.kappa1) || !std::isfinite(p.kappa2) || !std::isfinite(p.omega) ||
      !std::isfinite(p.eps)) {
    throw Error(ErrorCode::NonPositive, "non-finite parameter (" + where + ")");
  }
  if (p.kappa1 <= 0.0 || p.kappa2 <= 0.0) {
    throw Error(ErrorCode::NonPositive, "photon frequencies must be positive (" + where + ")");
  }
  if (p.eps <= 0.0) {
    throw Error(ErrorCode::NonPositive, "coupling eps must be positive (" + where + ")");
  }
  if (p.omega < 0.0) {
    throw Error(ErrorCode::NonPositive, "cyclotron frequency must be >= 0 (" + where + ")");
  }
  if (p.kappa1 == p.kappa2) {
    throw Error(ErrorCode::DegenerateFrequencies, "kappa1 == kappa2 (" + where + ")");
  }
  if (p.kappa1 > p.kappa2) {
    throw Error(ErrorCode::UnorderedFrequencies, "photons must satisfy kappa1 < kappa2 (" + where + ")");
  }
  if (!(resonance_margin >= 0.0 && resonance_margin < 1.0)) {
    throw Error(ErrorCode::NonPositive, "resonance margin must lie in [0, 1)");
  }
  if (p.omega >= p.kappa1 * (1.0 - resonance_margin)) {
    std::ostringstream os;
    os << "omega must stay below kappa1*(1-" << resonance_margin << ") (" << where << ")";
    throw Error(ErrorCode::NearResonance, os.str());
  }
}

ModelParams make_params(double kappa1, double kappa2, double omega, double eps,
                        double resonance_margin, std::string unit_label) {
  ModelParams p{kappa1, kappa2, omega, eps, std::move(unit_label)};
  validate(p, resonance_margin);
  return p;
}

PhysicalInputs PhysicalInputs::from_box(double kappa0, int m1, int m2, double np_momentum,
                                        double B_field) {
  constexpr double pi = std::numbers::pi;
  return {kappa0, m1, m2, kappa0 * kappa0 * kappa0 / (8.0 * pi * pi * pi), np_momentum, B_field};
}

double electron_charge() { return std::sqrt(kFineStructure); }

Couplings derive_couplings(const PhysicalInputs& in) {
  constexpr double pi = std::numbers::pi;
  if (in.np_momentum == 0.0) {
    throw Error(ErrorCode::ZeroLightFront, "light-front momentum (np) is zero");
  }
  if (!(in.np_momentum > 0.0) || in.kappa0 < 0.0 || in.rho < 0.0 || in.B_field < 0.0) {
    throw Error(ErrorCode::NonPositive,
                "physical inputs need kappa0 >= 0, rho >= 0, B >= 0 and (np) > 0");
  }
  if (in.m1 < 1 || in.m2 <= in.m1) {
    throw Error(ErrorCode::UnorderedFrequencies, "mode numbers must satisfy 1 <= m1 < m2");
  }
  Couplings c;
  c.eps_raw = kFineStructure * in.kappa0 * in.kappa0 * in.kappa0 / (8.0 * pi * pi * pi);
  c.eps = c.eps_raw / in.np_momentum;
  c.omega = electron_charge() * in.B_field / in.np_momentum;
  c.kappa1 = in.kappa0 * in.m1;
  c.kappa2 = in.kappa0 * in.m2;
  return c;
}

}  // namespace qubeam
