#pragma once

#include <array>
#include <cstdint>

#include "qubeam/params.hpp"

namespace qubeam {

/// Photon mode index k (1 or 2) and polarization branch lambda (1 or 2).
/// Branch 1 is the polarization aligned with the field ("up"), 2 against it.
struct ModeIndex {
  int k = 1;
  int lambda = 1;

  // Row/column position in the 4x4 photon block: 11, 12, 21, 22 -> 0..3.
  int flat() const { return 2 * (k - 1) + (lambda - 1); }

  bool operator==(const ModeIndex&) const = default;
};

inline constexpr std::array<ModeIndex, 4> kModes{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};

// (-1)^(lambda-1): +1 for branch 1, -1 for branch 2.
constexpr double branch_sign(int lambda) { return lambda == 1 ? 1.0 : -1.0; }

/// A quasiphoton frequency stored as its parent photon frequency plus a
/// small shift. The shift is O(eps) and carries all significant digits that
/// would be lost in kappa + shift.
struct ModeFrequency {
  double kappa = 0.0;
  double shift = 0.0;

  double value() const { return kappa + shift; }
  /// r^2 - kappa_s^2 evaluated without cancellation when kappa_s == kappa.
  double sq_gap(double kappa_s) const;
};

enum class RootMethod : std::uint8_t { Exact, Perturbative };

struct ModeRoots {
  std::array<std::array<ModeFrequency, 2>, 2> r{};  // [k-1][lambda-1]
  RootMethod method = RootMethod::Perturbative;
  double tolerance = 0.0;  // residual bound is tolerance * kappa_k (Exact only)

  const ModeFrequency& at(ModeIndex m) const { return r[m.k - 1][m.lambda - 1]; }
  ModeFrequency& at(ModeIndex m) { return r[m.k - 1][m.lambda - 1]; }
  double value(int k, int lambda) const { return r[k - 1][lambda - 1].value(); }
};

struct SolverOptions {
  double tol = 1e-12;          // relative; |residual| <= tol * kappa_k is required
  int max_iterations = 400;
  int polish_steps = 4;
  int max_bracket_growth = 200;
};

// Floor on |denominator| / kappa_k^3 for the first-order root formula.
inline constexpr double kPerturbativeDenominatorFloor = 1e-12;

/// sum_s eps / (r^2 - kappa_s^2) - 1 - (-1)^(lambda-1) omega / r.
/// Throws PoleEvaluation when r sits on a pole.
double residual(double r, const ModelParams& params, int lambda);

/// Same function evaluated at kappa + shift with the pole difference kept exact.
double residual(const ModeFrequency& r, const ModelParams& params, int lambda);

/// d residual / dr at kappa + shift.
double residual_derivative(const ModeFrequency& r, const ModelParams& params, int lambda);

/// First-order roots r_k = kappa_k + eps * N / D.
ModeRoots perturbative_roots(const ModelParams& params);

/// Bracketed roots nearest each kappa_k, bisection then damped Newton.
/// Requires eps > 0.
ModeRoots exact_roots(const ModelParams& params, const SolverOptions& opts = {});

ModeRoots solve_roots(const ModelParams& params, RootMethod method,
                      const SolverOptions& opts = {});

}  // namespace qubeam
