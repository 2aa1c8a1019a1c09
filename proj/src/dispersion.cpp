#include "qubeam/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "qubeam/error.hpp"

namespace qubeam {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

std::string mode_name(int k, int lambda) {
  return "r" + std::to_string(k) + std::to_string(lambda);
}

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Shift of the first-order root, eps * N / D.
double perturbative_shift(const ModelParams& p, int k, int lambda) {
  const double kk = p.kappa(k);
  const double k1s = p.kappa1 * p.kappa1;
  const double k2s = p.kappa2 * p.kappa2;
  const double sum = k1s + k2s;
  const double num = 2.0 * kk * kk - sum;
  const double den = branch_sign(lambda) * 2.0 * p.omega * num +
                     kk * (5.0 * kk * kk - 3.0 * sum) + k1s * k2s / kk;
  if (!(std::abs(den) > kPerturbativeDenominatorFloor * kk * kk * kk)) {
    std::ostringstream os;
    os.precision(17);
    os << "first-order denominator for " << mode_name(k, lambda) << " is " << den;
    throw Error(ErrorCode::SingularDenominator, os.str());
  }
  return p.eps * num / den;
}

}  // namespace

double ModeFrequency::sq_gap(double kappa_s) const {
  return ((kappa - kappa_s) + shift) * ((kappa + kappa_s) + shift);
}

double residual(double r, const ModelParams& p, int lambda) {
  if (!(r > 0.0)) {
    throw Error(ErrorCode::PoleEvaluation, "residual needs r > 0");
  }
  double sum = 0.0;
  for (double ks : {p.kappa1, p.kappa2}) {
    const double gap = r - ks;
    if (std::abs(gap) <= 4.0 * kMachineEps * ks) {
      std::ostringstream os;
      os.precision(17);
      os << "r=" << r << " sits on the pole kappa=" << ks;
      throw Error(ErrorCode::PoleEvaluation, os.str());
    }
    sum += p.eps / (gap * (r + ks));
  }
  return sum - 1.0 - branch_sign(lambda) * p.omega / r;
}

double residual(const ModeFrequency& r, const ModelParams& p, int lambda) {
  const double value = r.value();
  if (!(value > 0.0)) {
    throw Error(ErrorCode::PoleEvaluation, "residual needs r > 0");
  }
  double sum = 0.0;
  for (double ks : {p.kappa1, p.kappa2}) {
    const double gap = r.sq_gap(ks);
    if (gap == 0.0) {
      throw Error(ErrorCode::PoleEvaluation, "residual evaluated on a photon pole");
    }
    sum += p.eps / gap;
  }
  return sum - 1.0 - branch_sign(lambda) * p.omega / value;
}

double residual_derivative(const ModeFrequency& r, const ModelParams& p, int lambda) {
  const double value = r.value();
  double d = 0.0;
  for (double ks : {p.kappa1, p.kappa2}) {
    const double gap = r.sq_gap(ks);
    d -= p.eps * 2.0 * value / (gap * gap);
  }
  return d + branch_sign(lambda) * p.omega / (value * value);
}

ModeRoots perturbative_roots(const ModelParams& p) {
  ModeRoots roots;
  roots.method = RootMethod::Perturbative;
  for (const auto m : kModes) {
    roots.at(m) = ModeFrequency{p.kappa(m.k), perturbative_shift(p, m.k, m.lambda)};
  }
  return roots;
}

namespace {

struct Bracket {
  double inner;  // residual has sign `side` here (pole side)
  double outer;  // residual has sign -side here
  double side;
};

// Largest |shift| searched on one side of kappa_k. Toward the other photon the
// whole gap up to its pole is fair game; downward we stay above kappa_k / 2 to
// keep r > 0, upward above the top photon we allow up to r = 2 kappa_k.
double shift_cap(const ModelParams& p, int k, double side) {
  const double kk = p.kappa(k);
  const double other = p.kappa(3 - k);
  if ((other - kk) * side > 0.0) return std::abs(other - kk) * (1.0 - 0x1p-30);
  return side < 0.0 ? 0.5 * kk : kk;
}

std::optional<Bracket> find_bracket(const ModelParams& p, int k, int lambda, double side,
                                    double seed, const SolverOptions& opts) {
  const double kk = p.kappa(k);
  const double cap = shift_cap(p, k, side);
  auto g = [&](double s) { return residual(ModeFrequency{kk, side * s}, p, lambda); };

  double inner = std::min(seed / 16.0, cap / 2.0);
  int shrink = 0;
  while (sign_of(g(inner)) != side) {
    inner *= 0.5;
    if (++shrink > 200 || inner == 0.0) return std::nullopt;
  }
  double outer = std::min(10.0 * seed, cap);
  for (int i = 0; i <= opts.max_bracket_growth; ++i) {
    if (outer > inner && sign_of(g(outer)) == -side) return Bracket{inner, outer, side};
    if (outer >= cap) break;
    outer = std::min(2.0 * outer, cap);
  }
  return std::nullopt;
}

ModeFrequency solve_one(const ModelParams& p, int k, int lambda, const SolverOptions& opts) {
  const double kk = p.kappa(k);
  double seed_shift;
  try {
    seed_shift = perturbative_shift(p, k, lambda);
  } catch (const Error&) {
    seed_shift = p.eps / (2.0 * kk);
  }
  if (seed_shift == 0.0) seed_shift = p.eps / (2.0 * kk);
  const double seed = std::abs(seed_shift);

  std::optional<Bracket> bracket = find_bracket(p, k, lambda, sign_of(seed_shift), seed, opts);
  if (!bracket) bracket = find_bracket(p, k, lambda, -sign_of(seed_shift), seed, opts);
  if (!bracket) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change for " << mode_name(k, lambda) << " in ("
       << kk - shift_cap(p, k, -1.0) << ", " << kk + shift_cap(p, k, 1.0) << ")";
    throw Error(ErrorCode::BracketFailure, os.str());
  }

  const double side = bracket->side;
  auto g = [&](double s) { return residual(ModeFrequency{kk, side * s}, p, lambda); };
  double lo = bracket->inner;
  double hi = bracket->outer;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (sign_of(g(mid)) == side) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (it == opts.max_iterations) {
    throw Error(ErrorCode::NonConvergence,
                "bisection did not converge for " + mode_name(k, lambda));
  }

  double s = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
  double gs = g(s);
  for (int i = 0; i < opts.polish_steps && gs != 0.0; ++i) {
    const double dg = side * residual_derivative(ModeFrequency{kk, side * s}, p, lambda);
    if (dg == 0.0 || !std::isfinite(dg)) break;
    double step = -gs / dg;
    bool accepted = false;
    for (int damp = 0; damp < 8; ++damp, step *= 0.5) {
      const double trial = s + step;
      if (!(trial > 0.0)) continue;
      const double gt = g(trial);
      if (std::abs(gt) < std::abs(gs)) {
        s = trial;
        gs = gt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  ModeFrequency root{kk, side * s};
  const double res = residual(root, p, lambda);
  if (!(std::abs(res) <= opts.tol * kk)) {
    std::ostringstream os;
    os.precision(17);
    os << "residual " << res << " above " << opts.tol * kk << " for " << mode_name(k, lambda);
    throw Error(ErrorCode::NonConvergence, os.str());
  }
  return root;
}

}  // namespace

ModeRoots exact_roots(const ModelParams& p, const SolverOptions& opts) {
  if (!(p.eps > 0.0)) {
    throw Error(ErrorCode::NonPositive,
                "exact roots need eps > 0; use perturbative_roots for the eps -> 0 limit");
  }
  ModeRoots roots;
  roots.method = RootMethod::Exact;
  roots.tolerance = opts.tol;
  for (const auto m : kModes) {
    roots.at(m) = solve_one(p, m.k, m.lambda, opts);
  }
  return roots;
}

ModeRoots solve_roots(const ModelParams& p, RootMethod method, const SolverOptions& opts) {
  return method == RootMethod::Exact ? exact_roots(p, opts) : perturbative_roots(p);
}

}  // namespace qubeam
