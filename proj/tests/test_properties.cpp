// Randomized invariants over the validated small-coupling regime.

#include "common.hpp"

using namespace qt;

namespace {
constexpr int kSamples = 300;
}

TEST_CASE("exact roots: residual bound and ordering") {
  ParamGen gen(1);
  for (int n = 0; n < kSamples; ++n) {
    const ModelParams p = gen();
    CAPTURE(p.kappa1);
    CAPTURE(p.kappa2);
    CAPTURE(p.omega);
    CAPTURE(p.eps);
    const ModeRoots r = exact_roots(p);
    for (const auto m : kModes) {
      const ModeFrequency& f = r.at(m);
      CHECK(std::abs(residual(f, p, m.lambda)) <= 1e-12 * p.kappa(m.k));
      CHECK(f.shift > 0.0);  // medium pushes the mode above the bare frequency
    }
    // every root of mode 1 lies below kappa2
    CHECK(r.value(1, 1) < p.kappa2);
    CHECK(r.value(1, 2) < p.kappa2);
    // branch 1 sits below branch 2 for omega > 0
    if (p.omega > 0.0) {
      CHECK(r.r[0][0].shift <= r.r[0][1].shift);
      CHECK(r.r[1][0].shift <= r.r[1][1].shift);
    }
  }
}

TEST_CASE("q norms are positive and u carries the phase pattern") {
  ParamGen gen(2);
  for (int n = 0; n < kSamples; ++n) {
    const ModelParams p = gen();
    const BogoliubovBlock b = build_block(exact_roots(p), p);
    for (const auto row : kModes) {
      for (const auto col : kModes) {
        CHECK(b.q[col.k - 1][col.lambda - 1] > 0.0);
        const Complex u = b.u_at(row, col);
        if (row.lambda == 1) {
          CHECK(u.imag() == 0.0);
        } else {
          CHECK(u.real() == 0.0);
        }
      }
    }
  }
}

TEST_CASE("measures stay in range and parallel pairs stay separable") {
  ParamGen gen(3);
  for (int n = 0; n < kSamples; ++n) {
    const ModelParams p = gen();
    for (const auto c : {kDownUp, kUpDown, kUpUp, kDownDown}) {
      const EntanglementReport r = full_report(p, c);
      CHECK(r.E_I >= 0.0);
      CHECK(r.E_I <= 1.0);
      CHECK(r.E_S >= 0.0);
      CHECK(r.E_S <= 0.5);
      CHECK(r.y >= 0.0);
      CHECK(r.y <= 1.0);
      CHECK(r.density.eigs[0] <= r.density.eigs[1]);
      if (c == kUpUp || c == kDownDown) {
        CHECK(r.E_S < 1e-15);
      }
      if (r.closed_form == ClosedFormKind::AntiParallel) {
        CHECK(r.Phi >= 0.0);
      }
    }
  }
}

TEST_CASE("pure-state identities hold everywhere") {
  ParamGen gen(4);
  for (int n = 0; n < kSamples; ++n) {
    const ModelParams p = gen();
    const EntanglementReport r = full_report(p, n % 2 ? kDownUp : kUpDown);
    const Density2& rho = r.density.rho;
    CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(r.y * r.y + 4.0 * std::norm(r.amps.det) - 1.0) < 1e-10);
    CHECK(std::abs(r.E_S - (1.0 - r.y * r.y) / 2.0) < 1e-10);
    CHECK(std::abs(r.density.eigs[0] + r.density.eigs[1] - 1.0) < 1e-12);
  }
}

TEST_CASE("zero field gives symmetric branches") {
  ParamGen gen(5);
  for (int n = 0; n < 100; ++n) {
    ModelParams p = gen();
    p = make_params(p.kappa1, p.kappa2, 0.0, p.eps);
    const ModeRoots r = exact_roots(p);
    CHECK(r.r[0][0].shift == doctest::Approx(r.r[0][1].shift).epsilon(1e-12));
    CHECK(r.r[1][0].shift == doctest::Approx(r.r[1][1].shift).epsilon(1e-12));
    CHECK(phi_closed(p).phi == 0.0);
  }
}

TEST_CASE("make_params is idempotent") {
  ParamGen gen(6);
  for (int n = 0; n < 100; ++n) {
    const ModelParams p = gen();
    CHECK(make_params(p.kappa1, p.kappa2, p.omega, p.eps) == p);
  }
}

TEST_CASE("scaling: measures depend on eps / kappa^2 and omega / kappa") {
  // Multiplying every frequency by t and eps by t^2 rescales roots by t and
  // leaves the state unchanged.
  ParamGen gen(7);
  for (int n = 0; n < 50; ++n) {
    const ModelParams p = gen();
    const double t = gen.log_uniform(0.1, 10.0);
    const ModelParams s = make_params(t * p.kappa1, t * p.kappa2, t * p.omega, t * t * p.eps);
    const EntanglementReport a = full_report(p, kDownUp);
    const EntanglementReport b = full_report(s, kDownUp);
    CHECK(b.roots.r[0][0].shift == doctest::Approx(t * a.roots.r[0][0].shift).epsilon(1e-9));
    CHECK(b.Phi == doctest::Approx(a.Phi / (t * t)).epsilon(1e-9));
    if (a.y_deficit > 1e-200) {
      CHECK(b.y_deficit == doctest::Approx(a.y_deficit).epsilon(1e-6));
    }
  }
}
