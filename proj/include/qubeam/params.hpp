#pragma once

#include <string>

namespace qubeam {

inline constexpr double kFineStructure = 1.0 / 137.0;
inline constexpr double kDefaultResonanceMargin = 0.01;

/// Model input in one frequency unit.
///
/// kappa1 < kappa2 are the two photon frequencies, omega the cyclotron
/// frequency, eps the coupling (unit squared). Plain aggregate: build it with
/// make_params() to get the invariants checked.
struct ModelParams {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double omega = 0.0;
  double eps = 0.0;
  std::string unit_label = "THz";

  double kappa(int mode) const { return mode == 1 ? kappa1 : kappa2; }
  double delta_kappa() const { return kappa2 - kappa1; }

  bool operator==(const ModelParams&) const = default;
};

/// Validating factory for ModelParams.
///
/// Throws Error with NonPositive (kappa <= 0, eps <= 0, omega < 0, non-finite
/// input), DegenerateFrequencies (kappa1 == kappa2), UnorderedFrequencies
/// (kappa1 > kappa2) or NearResonance (omega >= kappa1 * (1 - margin)).
ModelParams make_params(double kappa1, double kappa2, double omega, double eps,
                        double resonance_margin = kDefaultResonanceMargin,
                        std::string unit_label = "THz");

/// Re-runs the make_params checks on an existing value.
void validate(const ModelParams& params, double resonance_margin = kDefaultResonanceMargin);

/// Box-quantization inputs from which the model couplings follow.
struct PhysicalInputs {
  double kappa0 = 0.0;       // 2 pi / L
  int m1 = 1;                // mode numbers, kappa_s = kappa0 * m_s
  int m2 = 2;
  double rho = 0.0;          // electron density, kappa0^3 / (8 pi^3)
  double np_momentum = 1.0;  // p0 - pz
  double B_field = 0.0;

  /// Inputs for a box with fundamental momentum kappa0; rho is filled in.
  static PhysicalInputs from_box(double kappa0, int m1, int m2, double np_momentum,
                                 double B_field);
};

struct Couplings {
  double eps_raw = 0.0;  // alpha * kappa0^3 / (8 pi^3)
  double eps = 0.0;      // eps_raw / (np)
  double omega = 0.0;    // e B / (np)
  double kappa1 = 0.0;   // kappa0 * m1
  double kappa2 = 0.0;   // kappa0 * m2
};

/// The electron charge entering omega = e B / (np), in the units where
/// eps = e^2 rho = alpha rho, i.e. e = sqrt(alpha).
double electron_charge();

Couplings derive_couplings(const PhysicalInputs& inputs);

}  // namespace qubeam
