#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include <Eigen/Core>

#include "qubeam/dispersion.hpp"
#include "qubeam/error.hpp"
#include "qubeam/qstate.hpp"

namespace qubeam {

using Density2 = Eigen::Matrix<Complex, 2, 2>;

/// Reduced density matrix of photon 1 for a normalized two-photon state.
struct ReducedDensity {
  Density2 rho = Density2::Zero();
  std::array<double, 2> eigs{};  // ascending, (1 - y)/2 and (1 + y)/2
  double y = 1.0;                // spectral gap
  double y_deficit = 0.0;        // 1 - y, kept separately since y is often 1 - 1e-30
  double det = 0.0;              // det rho = |det M|^2
};

/// rho = M M^+ with M[l][l'] the amplitude of |l-1, l'-1>.
/// The eigenvalues come from det rho = |det M|^2, which equals
/// (rho11 - rho22)^2 + 4|rho12|^2 = 1 - 4 det rho for unit trace.
ReducedDensity reduced_density(const TwoQubitAmplitudes& amps);

/// Linear entropy 1 - tr(rho^2), evaluated as 2 lambda_min lambda_max.
double schmidt_measure(const ReducedDensity& rho);

inline constexpr double kGapTolerance = 1e-12;

namespace detail {
inline double log1p_(double x) { return std::log1p(x); }
template <class Real>
Real log1p_(const Real& x) {
  using std::log;
  return log(Real(1) + x);
}
}  // namespace detail

/// Information measure in bits as a function of the gap deficit x = 1 - y:
///   -(1/ln 4) [x ln(x/2) + (2 - x) ln(1 - x/2)],
/// with x ln x extended by 0 at x = 0.
template <class Real>
Real info_measure_deficit(const Real& x) {
  using std::log;
  if (x < Real(-kGapTolerance) || x > Real(1 + kGapTolerance)) {
    throw Error(ErrorCode::DomainError, "spectral gap outside [0, 1]");
  }
  const Real xc = x < Real(0) ? Real(0) : (x > Real(1) ? Real(1) : x);
  const Real ln4 = Real(2) * log(Real(2));
  const Real half = xc / Real(2);
  Real sum = (Real(2) - xc) * detail::log1p_(-half);
  if (xc > Real(0)) sum += xc * log(half);
  Real e = -sum / ln4;
  return e < Real(0) ? Real(0) : e;
}

/// Information measure in bits from the spectral gap y.
template <class Real>
Real info_measure(const Real& y) {
  return info_measure_deficit(Real(1) - y);
}

inline double info_measure(const ReducedDensity& rho) {
  return info_measure_deficit(rho.y_deficit);
}

/// Closed-form field factor for the (down, up) pair:
///   omega (omega^2 (k2 - k1) + 2 omega (k2^2 + k1^2) + (k2^3 - k1^3))
///   / (2 k1 k2 (omega - k1)^2 (omega + k2)^2).
template <class Real>
Real phi_value(const Real& kappa1, const Real& kappa2, const Real& omega) {
  const Real num = omega * (omega * omega * (kappa2 - kappa1) +
                            Real(2) * omega * (kappa2 * kappa2 + kappa1 * kappa1) +
                            (kappa2 * kappa2 * kappa2 - kappa1 * kappa1 * kappa1));
  const Real lower = omega - kappa1;
  const Real upper = omega + kappa2;
  return num / (Real(2) * kappa1 * kappa2 * lower * lower * upper * upper);
}

/// Leading small-eps information measure:
///   (Phi / (2 ln 2)) [eps (1 - ln(Phi/2)) - eps ln eps].
template <class Real>
Real asymptotic_info_value(const Real& phi, const Real& eps) {
  using std::log;
  if (!(phi > Real(0))) {
    throw Error(ErrorCode::DomainError, "asymptotic information measure needs Phi > 0");
  }
  if (!(eps > Real(0)) || !(eps * phi < Real(1))) {
    throw Error(ErrorCode::DomainError, "asymptotic information measure needs 0 < eps*Phi < 1");
  }
  const Real ln2 = log(Real(2));
  return phi / (Real(2) * ln2) * (eps * (Real(1) - log(phi / Real(2))) - eps * log(eps));
}

inline constexpr double kResonancePoleFloor = 1e-24;  // on (omega - kappa1)^2 / kappa1^2

struct PhiClosed {
  double phi = 0.0;
  double eps_phi = 0.0;   // eps * Phi = 1 - y_closed
  double y_closed = 1.0;
};

/// Phi(down, up) and y_closed = 1 - eps Phi. Throws ResonancePole, RangeViolation.
PhiClosed phi_closed(const ModelParams& params);

/// Asymptotic E_I for the (down, up) pair. Throws DomainError when Phi = 0.
double asymptotic_info(const ModelParams& params);

enum class ClosedFormKind { None, AntiParallel, Parallel };

struct EntanglementReport {
  PolarizationConfig config;
  RootMethod method = RootMethod::Exact;
  ModeRoots roots;
  TwoQubitAmplitudes amps;
  ReducedDensity density;
  double y = 1.0;
  double y_deficit = 0.0;
  double E_I = 0.0;
  double E_S = 0.0;
  double raw_norm = 1.0;

  // Closed-form comparators, present for du and uu.
  ClosedFormKind closed_form = ClosedFormKind::None;
  std::optional<ClosedFormAB> ab;
  double Phi = 0.0;
  double y_closed = 1.0;
  double E_I_asymptotic = 0.0;
  double E_S_closed = 0.0;
};

/// roots -> block -> amplitudes -> density -> measures, plus closed forms.
/// Errors are rethrown with the stage name prepended.
EntanglementReport full_report(const ModelParams& params, PolarizationConfig config,
                               RootMethod method = RootMethod::Exact,
                               const SolverOptions& opts = {});

}  // namespace qubeam
