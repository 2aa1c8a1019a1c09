#include "common.hpp"

using namespace qt;

namespace {

TwoQubitAmplitudes amps_for(const ModelParams& p, PolarizationConfig c) {
  return amplitudes(build_block(exact_roots(p), p), c);
}

double norm2(const Amplitudes& a) {
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return s;
}

}  // namespace

TEST_CASE("polarization labels") {
  CHECK(PolarizationConfig::parse("du") == kDownUp);
  CHECK(PolarizationConfig::parse("ud") == kUpDown);
  CHECK(PolarizationConfig::parse("uu") == kUpUp);
  CHECK(PolarizationConfig::parse("dd") == kDownDown);
  CHECK(kDownUp.lambda1 == 2);
  CHECK(kDownUp.lambda2 == 1);
  CHECK(kUpDown.name() == "ud");
  CHECK(code_of([] { PolarizationConfig::parse("xu"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { PolarizationConfig::parse("d"); }) == ErrorCode::ParseError);
}

TEST_CASE("from_vector normalizes and keeps the raw norm") {
  const TwoQubitAmplitudes a = TwoQubitAmplitudes::from_vector({Complex(3, 0), 0.0, 0.0, Complex(0, 4)});
  CHECK(a.normalized);
  CHECK(a.raw_norm == doctest::Approx(5.0));
  CHECK(norm2(a.v) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(a.det - Complex(0, 12.0 / 25.0)) < 1e-15);
  CHECK(code_of([] { TwoQubitAmplitudes::from_vector({0.0, 0.0, 0.0, 0.0}); }) == ErrorCode::ZeroNorm);
}

TEST_CASE("amplitudes are normalized for every configuration") {
  for (const auto c : {kDownUp, kUpDown, kUpUp, kDownDown}) {
    const TwoQubitAmplitudes a = amps_for(figure(), c);
    CHECK(norm2(a.v) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.normalized);
  }
}

TEST_CASE("raw norms match the high-precision oracle") {
  struct Row {
    double k1, k2, om, eps;
    PolarizationConfig c;
    double raw;
  };
  const Row rows[] = {
      {2500, 3000, 0.5, 0.1, kDownUp, 0.99999999999966117819},
      {2500, 3000, 0.5, 0.1, kUpDown, 1.0000000000003352523},
      {2500, 3000, 0.5, 0.1, kUpUp, 1.0000000000012598459},
      {2500, 3000, 0.5, 0.1, kDownDown, 0.99999999999873391787},
      {2500, 2510, 0.25, 0.1, kDownUp, 0.99999999999601104888},
      {2500, 2510, 0.25, 0.1, kUpUp, 0.99999999999282857386},
      {2500, 2510, 0.25, 0.1, kDownDown, 0.99999999999123491671},
      {1, 2, 0.3, 0.01, kDownUp, 0.99858960729430503084},
      {1, 2, 0.3, 0.01, kUpDown, 1.0002984863275742074},
      {1, 2, 0.3, 0.01, kUpUp, 1.0004947639532285597},
      {1, 2, 0.3, 0.01, kDownDown, 0.9983644648448897677},
  };
  for (const auto& r : rows) {
    CAPTURE(r.k2);
    CAPTURE(r.c.name());
    const TwoQubitAmplitudes a = amps_for(make_params(r.k1, r.k2, r.om, r.eps), r.c);
    CHECK(std::abs(a.raw_norm - r.raw) < 1e-13);
  }
}

TEST_CASE("raw norm deviates from 1 at first order in eps") {
  std::vector<double> dev;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    dev.push_back(std::abs(amps_for(make_params(1.0, 2.0, 0.3, eps), kUpUp).raw_norm - 1.0));
  }
  CHECK(dev[0] / dev[1] == doctest::Approx(2.0).epsilon(0.1));
  CHECK(dev[1] / dev[2] == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("parallel polarizations give a product state") {
  for (const auto c : {kUpUp, kDownDown}) {
    CHECK(std::abs(amps_for(figure(), c).det) < 1e-15);
    CHECK(std::abs(amps_for(make_params(1.0, 2.0, 0.3, 0.01), c).det) < 1e-15);
  }
}

TEST_CASE("closed-form coefficients") {
  const ModelParams p = figure();
  const ModeRoots r = exact_roots(p);

  SUBCASE("only du and uu have closed forms") {
    CHECK(code_of([&] { closed_form_ab(r, p, kUpDown); }) == ErrorCode::UnsupportedConfig);
    CHECK(code_of([&] { closed_form_ab(r, p, kDownDown); }) == ErrorCode::UnsupportedConfig);
  }

  SUBCASE("du is dominated by the self term") {
    const ClosedFormAB ab = closed_form_ab(r, p, kDownUp);
    CHECK(ab.b == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(ab.a) < 1e-14);
  }

  SUBCASE("4|a^2 - b^2| tracks 1 - eps Phi") {
    const double phi = phi_closed(p).phi;
    const ClosedFormAB ab = closed_form_ab(r, p, kDownUp);
    const double lhs = 4.0 * std::abs(ab.a * ab.a - ab.b * ab.b);
    CHECK(std::abs(lhs - (1.0 - 0.1 * phi)) < 50.0 * 0.01 * std::max(phi, 1.0 / (2500.0 * 2500.0 * 2500.0)));
  }

  SUBCASE("at zero field the truncated state keeps unit norm to second order") {
    const ModelParams p0 = make_params(2500.0, 3000.0, 0.0, 0.1);
    const ClosedFormAB ab = closed_form_ab(exact_roots(p0), p0, kDownUp);
    CHECK(std::abs(4.0 * std::abs(ab.a * ab.a - ab.b * ab.b) - 1.0) < 1e-13);
  }
}

TEST_CASE("closed-form deficit is second order where it is resolvable") {
  std::vector<double> gap;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const ModelParams p = make_params(1.0, 2.0, 0.3, eps);
    const ClosedFormAB ab = closed_form_ab(exact_roots(p), p, kDownUp);
    const double lhs = 4.0 * std::abs(ab.a * ab.a - ab.b * ab.b);
    gap.push_back(std::abs(lhs - (1.0 - eps * phi_closed(p).phi)));
  }
  CAPTURE(gap[0]);
  CAPTURE(gap[1]);
  CAPTURE(gap[2]);
  CHECK(gap[0] / gap[1] == doctest::Approx(4.0).epsilon(0.15));
  CHECK(gap[1] / gap[2] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("pattern amplitudes") {
  const ClosedFormAB ab{0.25, 0.75};
  const Amplitudes du = pattern_amplitudes(ab, kDownUp);
  CHECK(du[0] == Complex(-1.0, 0.0));
  CHECK(du[1] == Complex(0.0, 0.5));
  CHECK(du[2] == Complex(0.0, -0.5));
  CHECK(du[3] == Complex(-1.0, 0.0));
  const Amplitudes uu = pattern_amplitudes(ab, kUpUp);
  CHECK(uu[0] == Complex(1.0, 0.0));
  CHECK(uu[1] == Complex(0.0, -1.0));
  CHECK(uu[2] == Complex(0.0, -1.0));
  CHECK(uu[3] == Complex(-1.0, 0.0));
  CHECK(code_of([&] { pattern_amplitudes(ab, kUpDown); }) == ErrorCode::UnsupportedConfig);
}

TEST_CASE("pipeline amplitudes follow the closed-form pattern") {
  const ModelParams p = figure();
  const ModeRoots r = exact_roots(p);
  for (const auto c : {kDownUp, kUpUp}) {
    const TwoQubitAmplitudes got = amplitudes(build_block(r, p), c);
    const TwoQubitAmplitudes want = TwoQubitAmplitudes::from_vector(pattern_amplitudes(closed_form_ab(r, p, c), c));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(got.v[i] - want.v[i]) < 1e-12);
  }
}
