#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "qubeam/bogoliubov.hpp"

namespace qubeam {

/// Polarization branches of the two quasiphotons (first kind, second kind).
/// 1 = aligned with the field ("u"), 2 = against it ("d").
struct PolarizationConfig {
  int lambda1 = 2;
  int lambda2 = 1;

  bool operator==(const PolarizationConfig&) const = default;

  /// "ud", "du", "uu" or "dd"; first letter is photon 1. Throws ParseError.
  static PolarizationConfig parse(std::string_view text);
  std::string name() const;
};

inline constexpr PolarizationConfig kDownUp{2, 1};
inline constexpr PolarizationConfig kUpUp{1, 1};
inline constexpr PolarizationConfig kUpDown{1, 2};
inline constexpr PolarizationConfig kDownDown{2, 2};

using Amplitudes = std::array<Complex, 4>;
using AmplitudeMatrix = std::array<std::array<Complex, 2>, 2>;

/// Amplitudes over |00>, |01>, |10>, |11> (photon 1 polarization first).
struct TwoQubitAmplitudes {
  Amplitudes v{};
  double raw_norm = 1.0;  // sqrt(sum |v|^2) before normalization
  Complex det{};          // v1 v4 - v2 v3 of the normalized amplitudes
  bool normalized = false;

  /// Normalizes `raw`; the determinant is formed with compensated products.
  static TwoQubitAmplitudes from_vector(const Amplitudes& raw);

  AmplitudeMatrix matrix() const {
    return {{{v[0], v[1]}, {v[2], v[3]}}};
  }
};

/// Two-photon amplitudes of c+_{1,lambda1} c+_{2,lambda2}|0>, keeping one
/// photon per frequency:
///   v(l, l') = u_{1l,1lambda1} u_{2l',2lambda2} + u_{2l',1lambda1} u_{1l,2lambda2}.
/// The amplitude matrix is a sum of two outer products, so its determinant is
/// formed as a product of two 2x2 determinants without cancellation.
TwoQubitAmplitudes amplitudes(const BogoliubovBlock& block, PolarizationConfig config);

struct ClosedFormAB {
  double a = 0.0;
  double b = 0.0;
};

/// Closed-form (a, b) for the two configurations with a derived pattern:
/// du (pattern v = (-(a+b), -i(a-b), i(a-b), -(a+b))) and
/// uu (pattern v = (a+b)(1, -i, -i, -1)). Not normalized.
/// Throws UnsupportedConfig for ud and dd.
ClosedFormAB closed_form_ab(const ModeRoots& roots, const ModelParams& params,
                            PolarizationConfig config);

/// The 4-vector the (a, b) pattern predicts for `config` (du or uu).
Amplitudes pattern_amplitudes(const ClosedFormAB& ab, PolarizationConfig config);

}  // namespace qubeam
