#include "qubeam/qstate.hpp"

#include <cmath>
#include <sstream>

#include "qubeam/error.hpp"

namespace qubeam {

PolarizationConfig PolarizationConfig::parse(std::string_view text) {
  if (text.size() == 2) {
    auto branch = [](char c) { return c == 'u' ? 1 : (c == 'd' ? 2 : 0); };
    const int l1 = branch(text[0]);
    const int l2 = branch(text[1]);
    if (l1 != 0 && l2 != 0) return {l1, l2};
  }
  throw Error(ErrorCode::ParseError,
              "polarization must be one of uu, ud, du, dd (got '" + std::string(text) + "')");
}

std::string PolarizationConfig::name() const {
  std::string s;
  s += lambda1 == 1 ? 'u' : 'd';
  s += lambda2 == 1 ? 'u' : 'd';
  return s;
}

namespace {

// a*b - c*d with the rounding error of each product recovered by fma.
double diff_of_products(double a, double b, double c, double d) {
  const double cd = c * d;
  const double err = std::fma(-c, d, cd);
  const double dop = std::fma(a, b, -cd);
  return dop + err;
}

// Complex x*y - z*w.
Complex complex_diff_of_products(Complex x, Complex y, Complex z, Complex w) {
  // Re: xr yr - xi yi - zr wr + zi wi ; Im: xr yi + xi yr - zr wi - zi wr
  const double re = diff_of_products(x.real(), y.real(), z.real(), w.real()) +
                    diff_of_products(z.imag(), w.imag(), x.imag(), y.imag());
  const double im = diff_of_products(x.real(), y.imag(), z.real(), w.imag()) +
                    diff_of_products(x.imag(), y.real(), z.imag(), w.real());
  return {re, im};
}

double norm_of(const Amplitudes& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

TwoQubitAmplitudes TwoQubitAmplitudes::from_vector(const Amplitudes& raw) {
  const double n = norm_of(raw);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::ZeroNorm, "amplitude vector has zero or non-finite norm");
  }
  TwoQubitAmplitudes out;
  for (int i = 0; i < 4; ++i) out.v[i] = raw[i] / n;
  out.raw_norm = n;
  out.det = complex_diff_of_products(out.v[0], out.v[3], out.v[1], out.v[2]);
  out.normalized = true;
  return out;
}

TwoQubitAmplitudes amplitudes(const BogoliubovBlock& block, PolarizationConfig config) {
  const ModeIndex q1{1, config.lambda1};
  const ModeIndex q2{2, config.lambda2};
  // photon-1 and photon-2 components of each quasiphoton
  std::array<Complex, 2> alpha, delta, beta, gamma;
  for (int l = 1; l <= 2; ++l) {
    alpha[l - 1] = block.u_at({1, l}, q1);
    delta[l - 1] = block.u_at({1, l}, q2);
    beta[l - 1] = block.u_at({2, l}, q2);
    gamma[l - 1] = block.u_at({2, l}, q1);
  }
  Amplitudes raw{};
  for (int l = 0; l < 2; ++l) {
    for (int lp = 0; lp < 2; ++lp) {
      raw[2 * l + lp] = alpha[l] * beta[lp] + gamma[lp] * delta[l];
    }
  }
  const double n = norm_of(raw);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::ZeroNorm, "all four amplitudes vanish for config " + config.name());
  }
  TwoQubitAmplitudes out;
  for (int i = 0; i < 4; ++i) out.v[i] = raw[i] / n;
  out.raw_norm = n;
  // M = alpha beta^T + delta gamma^T = [alpha delta] [beta gamma]^T
  const Complex det_left = complex_diff_of_products(alpha[0], delta[1], delta[0], alpha[1]);
  const Complex det_right = complex_diff_of_products(beta[0], gamma[1], gamma[0], beta[1]);
  out.det = det_left * det_right / (n * n);
  out.normalized = true;
  return out;
}

namespace {

double sym_root(double x, double y) { return std::sqrt(x / y) + std::sqrt(y / x); }

double checked_sqrt(double radicand, const char* mode) {
  if (!(radicand > 0.0) || !std::isfinite(radicand)) {
    std::ostringstream os;
    os.precision(17);
    os << "normalization radicand for " << mode << " is " << radicand;
    throw Error(ErrorCode::NegativeRadicand, os.str());
  }
  return std::sqrt(radicand);
}

// 2/(r^2-k1^2)^2 + 2/(r^2-k2^2)^2 + field_sign * omega / (r^3 eps)
double ab_radicand(const ModeFrequency& r, const ModelParams& p, double field_sign) {
  const double g1 = r.sq_gap(p.kappa1);
  const double g2 = r.sq_gap(p.kappa2);
  const double value = r.value();
  return 2.0 / (g1 * g1) + 2.0 / (g2 * g2) + field_sign * p.omega / (value * value * value * p.eps);
}

}  // namespace

ClosedFormAB closed_form_ab(const ModeRoots& roots, const ModelParams& p,
                            PolarizationConfig config) {
  const double k1 = p.kappa1;
  const double k2 = p.kappa2;
  if (config == kDownUp) {
    const ModeFrequency& r12 = roots.at({1, 2});
    const ModeFrequency& r21 = roots.at({2, 1});
    const double d = checked_sqrt(ab_radicand(r21, p, -1.0), "r21") *
                     checked_sqrt(ab_radicand(r12, p, +1.0), "r12");
    const double x12 = r12.value();
    const double x21 = r21.value();
    ClosedFormAB ab;
    ab.a = sym_root(k1, x21) * sym_root(k2, x12) /
           (4.0 * r12.sq_gap(k2) * r21.sq_gap(k1) * d);
    // Self-mode gaps (r12, k1) and (r21, k2) in the denominator of b; compare
    // the parallel-polarization b below.
    ab.b = sym_root(k1, x12) * sym_root(k2, x21) /
           (4.0 * r12.sq_gap(k1) * r21.sq_gap(k2) * d);
    return ab;
  }
  if (config == kUpUp) {
    const ModeFrequency& r11 = roots.at({1, 1});
    const ModeFrequency& r21 = roots.at({2, 1});
    const double d = checked_sqrt(ab_radicand(r11, p, -1.0), "r11") *
                     checked_sqrt(ab_radicand(r21, p, -1.0), "r21");
    const double x11 = r11.value();
    const double x21 = r21.value();
    ClosedFormAB ab;
    ab.a = sym_root(x11, k2) * sym_root(x21, k1) /
           (4.0 * r11.sq_gap(k2) * r21.sq_gap(k1) * d);
    ab.b = sym_root(x11, k1) * sym_root(x21, k2) /
           (4.0 * r11.sq_gap(k1) * r21.sq_gap(k2) * d);
    return ab;
  }
  throw Error(ErrorCode::UnsupportedConfig,
              "no closed-form (a, b) for config " + config.name() + "; use amplitudes()");
}

Amplitudes pattern_amplitudes(const ClosedFormAB& ab, PolarizationConfig config) {
  const Complex i{0.0, 1.0};
  if (config == kDownUp) {
    const Complex v1 = -(ab.a + ab.b);
    const Complex v2 = -i * (ab.a - ab.b);
    return {v1, v2, -v2, v1};
  }
  if (config == kUpUp) {
    const Complex v1 = ab.a + ab.b;
    return {v1, -i * v1, -i * v1, -v1};
  }
  throw Error(ErrorCode::UnsupportedConfig, "no (a, b) pattern for config " + config.name());
}

}  // namespace qubeam
