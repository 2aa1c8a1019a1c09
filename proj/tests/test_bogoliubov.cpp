#include "common.hpp"

using namespace qt;

namespace {

BogoliubovBlock block_for(const ModelParams& p) { return build_block(exact_roots(p), p); }

}  // namespace

TEST_CASE("q is close to |r^2 - kappa^2| / sqrt(2) at weak coupling") {
  double prev = 1.0;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const ModelParams p = make_params(1.0, 2.0, 0.3, eps);
    const ModeRoots r = exact_roots(p);
    const QNorms q = q_norms(r, p);
    double worst = 0.0;
    for (const auto m : kModes) {
      const double self = r.at(m).sq_gap(p.kappa(m.k));
      worst = std::max(worst, std::abs(q[m.k - 1][m.lambda - 1] * std::sqrt(2.0) / self - 1.0));
    }
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("q radicand branches differ by the field term") {
  const ModelParams p = make_params(1.0, 2.0, 0.3, 0.01);
  const ModeFrequency r{1.0, 0.004};
  const double v = r.value();
  const double diff = q_radicand(r, 2, p) - q_radicand(r, 1, p);
  CHECK(diff == doctest::Approx(2.0 * 0.3 / (v * v * v * 0.01)).epsilon(1e-12));
  const ModelParams p0 = make_params(1.0, 2.0, 0.0, 0.01);
  CHECK(q_radicand(r, 1, p0) == q_radicand(r, 2, p0));
  CHECK(q_radicand(r, 1, p0) > 0.0);
}

TEST_CASE("q_norms reports a negative radicand") {
  // far from any root the field term dominates the lambda = 1 branch
  const ModelParams p{1.0, 2.0, 0.9, 0.001};
  ModeRoots r;
  for (const auto m : kModes) r.at(m) = ModeFrequency{p.kappa(m.k), 0.5};
  CHECK(q_radicand(r.r[0][0], 1, p) < 0.0);
  CHECK(code_of([&] { q_norms(r, p); }) == ErrorCode::NegativeRadicand);
}

TEST_CASE("self amplitudes approach 1/sqrt(2)") {
  double prev = 1.0;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const BogoliubovBlock b = block_for(make_params(1.0, 2.0, 0.3, eps));
    double worst = 0.0;
    for (const auto m : kModes) {
      worst = std::max(worst, std::abs(std::abs(b.u_at(m, m)) - 1.0 / std::sqrt(2.0)));
    }
    CHECK(worst < prev);
    prev = worst;
  }
}

TEST_CASE("v and u differ by a real ratio per entry") {
  const ModelParams p = make_params(1.0, 2.0, 0.3, 0.01);
  const BogoliubovBlock b = block_for(p);
  for (const auto col : kModes) {
    const double r = b.roots.at(col).value();
    for (const auto row : kModes) {
      const double k = p.kappa(row.k);
      const double want = (std::sqrt(r / k) - std::sqrt(k / r)) / (std::sqrt(r / k) + std::sqrt(k / r));
      const Complex ratio = b.v_at(row, col) / b.u_at(row, col);
      CHECK(ratio.real() == doctest::Approx(want).epsilon(1e-10));
      CHECK(std::abs(ratio.imag()) < 1e-14);
    }
  }
}

TEST_CASE("polarization phases") {
  const BogoliubovBlock b = block_for(figure());
  for (const auto col : kModes) {
    for (const auto row : kModes) {
      const Complex u = b.u_at(row, col);
      if (row.lambda == 1) {
        CHECK(u.imag() == 0.0);
        // sign alternates with the column branch
        const double s = (col.lambda == 1) ? 1.0 : -1.0;
        const double gap_sign = b.roots.at(col).sq_gap(figure().kappa(row.k)) > 0 ? 1.0 : -1.0;
        CHECK(u.real() * s * gap_sign > 0.0);
      } else {
        CHECK(u.real() == 0.0);
      }
    }
  }
}

TEST_CASE("v vanishes as eps -> 0") {
  double prev = 1.0;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const BogoliubovBlock b = block_for(make_params(1.0, 2.0, 0.3, eps));
    const double vmax = b.v.cwiseAbs().maxCoeff();
    CHECK(vmax < prev);
    prev = vmax;
  }
}

TEST_CASE("identity defect of a unitary u with v = 0 is zero") {
  PhotonMatrix u = PhotonMatrix::Zero();
  const double h = 1.0 / std::sqrt(2.0);
  u(0, 0) = h;
  u(0, 1) = Complex(0, h);
  u(1, 0) = Complex(0, h);
  u(1, 1) = h;
  u(2, 3) = 1.0;
  u(3, 2) = Complex(0, -1);
  const IdentityDefect d = identity_defect(u, PhotonMatrix::Zero());
  CHECK(d.uu < 1e-15);
  CHECK(d.sym == 0.0);
}

TEST_CASE("identity defect shrinks with eps") {
  double prev_uu = 1e9, prev_sym = 1e9;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const IdentityDefect d = identity_defect(block_for(make_params(1.0, 2.0, 0.3, eps)));
    CAPTURE(d.uu);
    CAPTURE(d.sym);
    CHECK(d.uu < prev_uu);
    CHECK(d.sym < prev_sym);
    prev_uu = d.uu;
    prev_sym = d.sym;
  }
  CHECK(prev_uu < 0.1);
}
